// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from the oracles in tests/oracles
// wherever an independent route exists.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <bosonstar/bosonstar.hpp>

#include "oracles/generators.hpp"
#include "oracles/oracles.hpp"
#include "support/ground_state.hpp"

using namespace bosonstar;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 8675309;

// Collects named sub-results of one criterion into a single line.
class Verdict {
 public:
  void expect(bool ok, const std::string& what, double value) {
    ok_ = ok_ && ok;
    std::ostringstream os;
    os << what << " " << std::setprecision(3) << value << (ok ? "" : " (fail)");
    parts_.push_back(os.str());
  }
  void note(const std::string& what) { parts_.push_back(what); }
  bool ok() const { return ok_; }
  std::string detail() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "; " : "") + parts_[i];
    return s;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> parts_;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double rel_l2(const RadialField& a, const RadialField& b) { return l2_norm(a - b) / l2_norm(b); }

std::size_t node(const RadialGrid& g, double r) {
  return static_cast<std::size_t>(std::lround(r / g.dr())) - 1;
}

RadialField times_r(const RadialField& u) {
  const auto r = u.grid().r();
  std::vector<double> v(u.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = r[j] * u[j];
  return RadialField(u.grid(), std::move(v));
}

const GroundStateReport& tight_ground_state(std::size_t n, double r_max) {
  return support::ground_state(n, r_max, 1e-11);
}

// ------------------------------------------------------------------------

Verdict transforms() {
  Verdict v;
  double round_trip = 0.0, plancherel = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = gen::rng_for(kSeed, i);
    std::uniform_int_distribution<std::size_t> size(8, 600);
    std::uniform_real_distribution<double> radius(1.0, 300.0);
    const RadialGrid g(size(rng), radius(rng));
    const auto u = gen::rough_field(g, rng);
    const auto uhat = forward_transform(u);
    round_trip = std::max(round_trip, rel_l2(inverse_transform(uhat), u));
    const double lhs = quadrature_3d(u * u);
    plancherel = std::max(plancherel, std::abs(lhs - spectral_quadrature_3d(uhat * uhat)) / lhs);
  }
  v.expect(round_trip < 1e-10, "round trip", round_trip);
  v.expect(plancherel < 1e-10, "Plancherel", plancherel);

  {
    // The fast transform against the O(n^2) sine sum.
    auto rng = gen::rng_for(kSeed, 1000);
    const auto u = gen::rough_field(RadialGrid(300, 25.0), rng);
    const auto fast = forward_transform(u);
    const auto slow = oracle::direct_forward(u);
    double worst = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < slow.size(); ++k) {
      worst = std::max(worst, std::abs(fast[k] - slow[k]));
      scale = std::max(scale, std::abs(slow[k]));
    }
    v.expect(worst / scale < 1e-12, "vs direct sum", worst / scale);
  }
  {
    const RadialGrid g(2048, 40.0);
    const auto uhat = forward_transform(RadialField::sample(g, [](double r) { return std::exp(-0.5 * r * r); }));
    const auto u = inverse_transform(SpectralField::sample(g, [](double x) { return std::exp(-0.5 * x * x); }));
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g.xi(k) <= 10.0) worst = std::max(worst, std::abs(uhat[k] - std::exp(-0.5 * g.xi(k) * g.xi(k))));
      worst = std::max(worst, std::abs(u[k] - std::exp(-0.5 * g.r(k) * g.r(k))));
    }
    v.expect(worst < 1e-8, "Gaussian pair", worst);
  }
  {
    const RadialGrid g(4096, 400.0);
    const auto phat = forward_transform(RadialField::sample(g, [](double r) { return poisson_kernel(1.0, r); }));
    const double c = std::pow(2.0 * kPi, -1.5);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) worst = std::max(worst, std::abs(phat[k] - c * std::exp(-g.xi(k))));
    v.expect(worst < 1e-4, "Poisson pair", worst);
  }
  return v;
}

Verdict operators() {
  Verdict v;
  {
    const RadialGrid g(3999, 4.0);
    const double rho0 = 3.0 / (4.0 * kPi);
    const auto rho = RadialField::sample(g, [rho0](double r) {
      if (std::abs(r - 1.0) < 1e-9) return 0.5 * rho0;
      return r < 1.0 ? rho0 : 0.0;
    });
    const auto phi = newton_potential(rho);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      worst = std::max(worst, std::abs(phi[j] - oracle::ball_potential(g.r(j))));
    }
    v.expect(worst < 1e-6, "unit ball", worst);
  }
  {
    const RadialGrid g(1024, 40.0);
    auto rng = gen::rng_for(kSeed, 2);
    const auto u = gen::smooth_field(g, rng);
    double worst = 0.0;
    for (double t : {0.1, 1.0}) {
      for (double s : {0.1, 1.0}) {
        const auto lhs = apply_multiplier(apply_multiplier(u, symbols::poisson_semigroup(s)), symbols::poisson_semigroup(t));
        worst = std::max(worst, rel_l2(lhs, apply_multiplier(u, symbols::poisson_semigroup(t + s))));
      }
    }
    v.expect(worst < 1e-10, "semigroup", worst);
  }
  {
    double worst = 0.0;
    const RadialGrid g(1024, 40.0);
    for (std::uint64_t i = 0; i < 50; ++i) {
      auto rng = gen::rng_for(kSeed + 3, i);
      worst = std::max(worst, hardy_kato_ratio(gen::smooth_field(g, rng)));
    }
    for (double width : {1.0, 0.05}) {
      const RadialGrid gg(4096, 40.0);
      worst = std::max(worst, hardy_kato_ratio(RadialField::sample(gg, [width](double r) {
                         return std::exp(-0.5 * r * r / (width * width));
                       })));
    }
    worst = std::max(worst, hardy_kato_ratio(support::ground_state().Q));
    v.expect(worst <= 1.0 + 1e-3, "max Kato ratio", worst);
  }
  return v;
}

// Residual recomputed from the definitions, independent of the solver loop.
double direct_residual(const RadialField& q) {
  const auto& g = q.grid();
  const auto qhat = forward_transform(q);
  std::vector<double> mult(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) mult[k] = g.xi(k) * qhat[k];
  const auto lq = inverse_transform(SpectralField(g, std::move(mult)));
  const auto phi = newton_potential(q * q);
  std::vector<double> res(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) res[j] = lq[j] + q[j] - phi[j] * q[j];
  return l2_norm(RadialField(g, std::move(res))) / l2_norm(q);
}

Verdict ground_state_solve() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = solve_ground_state(SolverConfig{});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.expect(seconds < 60.0, "seconds", seconds);
  v.expect(rep.residual < 1e-8, "residual", rep.residual);
  const double direct = direct_residual(rep.Q);
  v.expect(direct < 1e-8, "direct residual", direct);
  std::size_t bad = 0;
  for (std::size_t j = 0; j < rep.Q.size(); ++j) {
    if (!(rep.Q[j] > 0.0) || (j > 0 && !(rep.Q[j] < rep.Q[j - 1]))) ++bad;
  }
  v.expect(bad == 0, "nodes not positive or not decreasing", static_cast<double>(bad));
  return v;
}

Verdict chandrasekhar_mass() {
  Verdict v;
  const auto& rep = support::ground_state();
  v.expect(rep.N_star > 4.0 / kPi && rep.N_star < 2.0 * std::sqrt(2.0), "N*", rep.N_star);
  const auto drift = refine_check(SolverConfig{});
  v.expect(drift.drift < 1e-3, "drift n -> 2n", drift.drift);
  SolverConfig cfg;
  cfg.init = init::Gaussian{};
  const auto a = solve_ground_state(cfg);
  cfg.init = init::Lorentzian{};
  const auto b = solve_ground_state(cfg);
  const double d = rel_l2(a.Q, b.Q);
  v.expect(d < 1e-6, "Gaussian vs Lorentzian", d);
  return v;
}

Verdict energy_identities() {
  Verdict v;
  const auto& rep = support::ground_state();
  const auto& q = rep.Q;
  const auto& g = q.grid();
  // T and M from the direct sine sum and a plain weighted sum.
  const auto qhat = oracle::direct_forward(q);
  long double t = 0.0L, m = 0.0L;
  for (std::size_t k = 0; k < g.size(); ++k) t += g.xi(k) * g.xi(k) * g.xi(k) * qhat[k] * qhat[k];
  for (std::size_t j = 0; j < g.size(); ++j) m += g.weights()[j] * q[j] * q[j];
  const double T = static_cast<double>(4.0L * kPi * g.dxi() * t);
  const double M = static_cast<double>(m);
  const double D = energy_breakdown(q).D;
  const double I = T * M / D;
  v.expect(rel(T, rep.energy.T) < 1e-10, "T oracle vs library", rel(T, rep.energy.T));
  v.expect(std::abs(T - M) / M < 1e-6, "|T-M|/M", std::abs(T - M) / M);
  v.expect(std::abs(D - 2.0 * T) / D < 1e-6, "|D-2T|/D", std::abs(D - 2.0 * T) / D);
  v.expect(rel(I, rep.N_star / 2.0) < 1e-5, "|I-N*/2|/(N*/2)", rel(I, rep.N_star / 2.0));
  return v;
}

Verdict virial() {
  Verdict v;
  const auto& rep = support::ground_state();
  const auto vir = virial_report(rep.Q, -1.0);
  v.expect(rel(vir.vrv_integral, -rep.N_star) < 1e-4, "int (V + r V') Q^2 vs -N*", rel(vir.vrv_integral, -rep.N_star));
  double worst = -1.0;
  for (double x : vir.newton_lhs.values()) worst = std::max(worst, x);
  v.expect(worst <= 0.0, "max pointwise V + r V'", worst);
  SolverConfig cfg;
  cfg.grid = RadialGrid(1024, 100.0);
  for (double e : {0.0, 0.5}) {
    const auto probe = nonexistence_probe(e, cfg);
    v.expect(probe.collapsed && probe.outcome != ProbeOutcome::converged, "probe E=" + std::to_string(e).substr(0, 3) + " collapsed", probe.collapsed ? 1.0 : 0.0);
  }
  return v;
}

Verdict far_field() {
  Verdict v;
  {
    const RadialGrid g(2048, 200.0);
    const auto f = RadialField::sample(g, [](double r) { return std::exp(-r * r); });
    const auto u = apply_multiplier(f, symbols::resolvent({0.0, 1.0, 1.0}));
    // The grid resolvent against the real-space kernel at one interior point.
    const std::size_t j = node(g, 2.0);
    const double ref = oracle::resolvent_real_space([](double s) { return std::exp(-s * s); }, g.r(j), 8.0);
    v.expect(rel(u[j], ref) < 1e-4, "resolvent vs kernel", rel(u[j], ref));
    // The theory coefficient pi^-2 int f = 1/sqrt(pi), independently.
    const double c4 = std::pow(kPi, 1.5) / (kPi * kPi);
    const auto rep = fit_far_field(u, f, {80.0, 160.0});
    v.expect(rel(rep.c4_est, c4) < 0.05, "resolvent c4", rel(rep.c4_est, c4));
    v.expect(rel(rep.c5_est, -4.0 * c4) < 0.05, "resolvent c5", rel(rep.c5_est, -4.0 * c4));
  }
  const auto& q = support::ground_state().Q;
  const auto rep = fit_far_field(q, hartree_term(q), default_far_field_window(q.grid()));
  v.expect(rep.rel_err_4 < 0.10, "Q c4", rep.rel_err_4);
  v.expect(rep.rel_err_5 < 0.15, "Q c5", rep.rel_err_5);
  return v;
}

Verdict analyticity() {
  Verdict v;
  const auto qhat = forward_transform(support::ground_state().Q);
  const auto fit = fit_fourier_decay(qhat);
  v.expect(fit.sigma_est > 0.0, "sigma_est", fit.sigma_est);
  v.expect(fit.r_squared > 0.99, "r^2", fit.r_squared);
  try {
    const auto cert = certify_analyticity(qhat);
    double worst = 0.0;
    for (const auto& row : moment_growth_table(qhat, cert, 12)) worst = std::max(worst, row.ratio);
    v.expect(worst <= 1.0, "max moment ratio n<=12", worst);
    v.expect(cert.sigma <= fit.sigma_est, "certificate sigma", cert.sigma);
  } catch (const Error& e) {
    v.expect(false, std::string("certificate: ") + e.what(), 0.0);
  }
  double worst = 0.0;
  for (int n = 0; n <= 30; ++n) {
    for (double a : {1.0, 2.0, 3.0}) {
      for (double b : {1.0, 2.0, 3.0}) {
        const auto rep = abel_identity(n, a, b);
        const auto [lhs, rhs] = oracle::abel_reference(n, a, b);
        worst = std::max({worst, static_cast<double>(rep.rel_err), std::abs(static_cast<double>(rep.lhs) - lhs) / rhs});
      }
    }
  }
  v.expect(worst < 1e-12, "Abel max rel err", worst);
  return v;
}

struct LinearResiduals {
  double minus = 0.0;
  double translation = 0.0;  // ||L+,1 Q'|| / ||Q'||
  double scaling = 0.0;      // ||L+,0 (3/2 Q + r Q') + Q|| / ||Q||
  double asymmetry = 0.0;
};

LinearResiduals linear_residuals(std::size_t n, double r_max, bool with_scaling, bool with_translation) {
  const auto& q = tight_ground_state(n, r_max).Q;
  const auto dq = radial_derivative(q);
  LinearResiduals out;
  const auto lm = assemble_Lminus(q);
  out.minus = l2_norm(lm.apply(q)) / l2_norm(q);
  out.asymmetry = weighted_asymmetry(lm.matrix, lm.grid);
  if (with_scaling) {
    const auto l0 = assemble_Lplus(q, 0);
    out.scaling = l2_norm(l0.apply(1.5 * q + times_r(dq)) + q) / l2_norm(q);
    out.asymmetry = std::max(out.asymmetry, weighted_asymmetry(l0.matrix, l0.grid));
  }
  if (with_translation) {
    const auto l1 = assemble_Lplus(q, 1);
    out.translation = l2_norm(l1.apply(dq)) / l2_norm(dq);
    out.asymmetry = std::max(out.asymmetry, weighted_asymmetry(l1.matrix, l1.grid));
  }
  return out;
}

Verdict linearization() {
  Verdict v;
  const auto main = linear_residuals(1024, 200.0, true, true);
  const auto& q = tight_ground_state(1024, 200.0).Q;
  const double asym2 = weighted_asymmetry(assemble_Lplus(q, 2).matrix, q.grid());
  v.expect(main.minus < 1e-6, "L- Q", main.minus);
  v.expect(main.translation < 1e-3, "L+,1 Q'", main.translation);
  v.expect(main.scaling < 1e-3, "L+,0 R + Q", main.scaling);
  v.expect(std::max(main.asymmetry, asym2) < 1e-10, "asymmetry", std::max(main.asymmetry, asym2));

  // Halving under n -> 2n, refining along each residual's dominant error:
  // Q' is limited by dr (r_max fixed), the scaling identity by the box edge
  // (dr fixed). L- Q sits at the solve tolerance on every grid.
  const auto coarse = linear_residuals(512, 100.0, true, true);
  const auto fine_dr = linear_residuals(1024, 100.0, false, true);
  v.expect(fine_dr.translation <= 0.5 * coarse.translation, "L+,1 Q' ratio (512,100)->(1024,100)",
           fine_dr.translation / coarse.translation);
  v.expect(main.scaling <= 0.5 * coarse.scaling, "L+,0 ratio (512,100)->(1024,200)", main.scaling / coarse.scaling);
  v.expect(coarse.minus <= 1e-8 && fine_dr.minus <= 1e-8, "L- Q at tolerance on both", std::max(coarse.minus, fine_dr.minus));
  return v;
}

Verdict dynamics() {
  Verdict v;
  const auto& q = support::ground_state().Q;
  const WaveField psi0{complexify(q), 0.0, 0.0};
  const auto res = evolve(psi0, 0.005, 200);
  const double stat = l2_norm(modulus(res.state.psi) - q) / l2_norm(q);
  v.expect(!res.aborted && stat < 1e-3, "stationarity", stat);
  const double phase = std::abs(mean_phase(q, res.state.psi) - 1.0);
  v.expect(phase < 1e-3, "phase drift", phase);
  const double mass = rel(mass_and_energy(res.state).mass, mass_and_energy(psi0).mass);
  v.expect(mass < 1e-8, "mass drift", mass);

  const RadialGrid g(1024, 100.0);
  const WaveField w{complexify(RadialField::sample(g, [](double r) { return 0.8 * std::exp(-0.5 * r * r); })), 0.0, 0.0};
  const double dt_ref = 0.025 / 4.0;
  const auto ref = evolve(w, dt_ref, static_cast<int>(std::lround(0.5 / dt_ref))).state.psi;
  const double e1 = l2_norm(evolve(w, 0.05, 10).state.psi - ref);
  const double e2 = l2_norm(evolve(w, 0.025, 20).state.psi - ref);
  const double order = std::log2(e1 / e2);
  v.expect(order >= 1.7 && order <= 2.3, "splitting order", order);
  return v;
}

// ------------------------------------------------------------------------ pipeline

std::string read_file(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Verdict pipeline() {
  Verdict v;
#ifndef BOSONSTAR_CLI
  v.expect(false, "command-line tool not built", 0.0);
  return v;
#else
  const fs::path root = fs::temp_directory_path() / ("bosonstar_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::vector<std::string> commands{"selftest", "solve", "verify", "linearize", "certify", "evolve"};
  const fs::path live = root / "run";
  auto round = [&]() {
    int failures = 0;
    for (const auto& cmd : commands) {
      const auto out = live / cmd;
      fs::create_directories(out);
      const std::string line = std::string(BOSONSTAR_CLI) + " " + cmd + " --out '" + out.string() + "' > '" +
                               (out / "stderr.log").string() + "' 2>&1";
      const int status = std::system(line.c_str());
      if (!(WIFEXITED(status) && WEXITSTATUS(status) == 0)) {
        ++failures;
        v.note(cmd + " exited " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
      }
    }
    return failures;
  };
  int failures = round();
  const fs::path first = root / "first";
  fs::rename(live, first);
  failures += round();
  v.expect(failures == 0, "nonzero exits", failures);

  // Byte comparison after removing the meta block and the timing-free log.
  const std::regex meta(R"(\n  "meta": \{[^{}]*\},?)");
  int differing = 0, compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(first)) {
    if (!entry.is_regular_file() || entry.path().filename() == "stderr.log") continue;
    const auto rel_path = fs::relative(entry.path(), first);
    std::string a = read_file(entry.path());
    std::string b = read_file(live / rel_path);
    if (entry.path().extension() == ".json") {
      a = std::regex_replace(a, meta, "");
      b = std::regex_replace(b, meta, "");
    }
    ++compared;
    if (a != b) {
      ++differing;
      v.note("differs: " + rel_path.string());
    }
  }
  v.expect(compared > 0 && differing == 0, "files differing modulo meta", differing);
  v.note(std::to_string(compared) + " files compared");
  fs::remove_all(root);
  return v;
#endif
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 transform exactness", transforms},
      {"2 operator oracles", operators},
      {"3 ground-state solve", ground_state_solve},
      {"4 N* consistency", chandrasekhar_mass},
      {"5 energy identities", energy_identities},
      {"6 virial identity", virial},
      {"7 far-field law", far_field},
      {"8 analyticity", analyticity},
      {"9 linearization", linearization},
      {"10 dynamics", dynamics},
      {"11 pipeline", pipeline},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what(), 0.0);
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.ok() ? "PASS " : "FAIL ") << c.name << " [" << std::fixed << std::setprecision(1) << s << " s]: "
              << std::defaultfloat << v.detail() << std::endl;
    if (!v.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
