#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <bosonstar/bosonstar.hpp>

namespace bosonstar::app {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;
constexpr const char* kToolVersion = "0.1.0";

// Reports are byte-stable: fixed key order (nlohmann sorts object keys) and
// shortest round-trip doubles.
void write_json(const fs::path& path, const json& j) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path.string());
  os << j.dump(2) << '\n';
}

using Clock = std::chrono::steady_clock;

json report(json body, Clock::time_point t0) {
  body["schema_version"] = 1;
  body["meta"] = make_meta(std::chrono::duration<double>(Clock::now() - t0).count());
  return body;
}

struct Profile {
  RadialField Q;
  std::string source;  ///< "input" or "solve"
  std::optional<GroundStateReport> solve;
};

void require_canonical(const RunConfig& cfg) {
  if (cfg.m != 0.0) throw UsageError("m", "this command checks the m = 0 equation");
  if (cfg.mu != 1.0) throw UsageError("mu", "this command checks the mu = 1 equation");
}

Profile obtain_profile(const RunConfig& cfg, std::ostream& log) {
  if (cfg.input) {
    log << "reading " << cfg.input->string() << '\n';
    return {read_radial_csv(*cfg.input), "input", std::nullopt};
  }
  log << "solving on n = " << cfg.n << ", r_max = " << cfg.r_max << '\n';
  auto rep = solve_ground_state(cfg.solver_config());
  RadialField q = rep.Q;
  return {std::move(q), "solve", std::move(rep)};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

RadialField times_r(const RadialField& u) {
  const auto r = u.grid().r();
  std::vector<double> v(u.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = r[j] * u[j];
  return RadialField(u.grid(), std::move(v));
}

json finish(json body, const std::vector<Check>& checks) {
  body["checks"] = checks;
  const auto first = first_failure(checks);
  body["all_pass"] = first.empty();
  body["first_failure"] = first.empty() ? json(nullptr) : json(first);
  return body;
}

// Runs one stage of a check table. A library error marks the stage failed
// and keeps the message, so later stages still run.
template <typename Fn>
void guarded(const std::string& stage, std::vector<Check>& checks, json& errors, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    checks.push_back({stage, std::numeric_limits<double>::quiet_NaN(), "error", 0.0, 0.0, false});
    errors[stage] = e.what();
  }
}

int status_of(const std::vector<Check>& checks, std::ostream& log) {
  for (const auto& c : checks) {
    log << (c.pass ? "PASS " : "FAIL ") << c.name << " = " << std::setprecision(6) << c.value << '\n';
  }
  return first_failure(checks).empty() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- solve

int run_solve(const RunConfig& cfg, std::ostream& log, Clock::time_point t0) {
  const auto rep = solve_ground_state(cfg.solver_config());
  write_csv(cfg.out_dir / "Q.csv", rep.Q);
  write_csv(cfg.out_dir / "Qhat.csv", forward_transform(rep.Q));
  json body = rep;
  write_json(cfg.out_dir / "ground_state.json", report(body, t0));
  log << "N* = " << std::setprecision(12) << rep.N_star << ", residual " << rep.residual << " after "
      << rep.iterations << " iterations\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const RunConfig& cfg, std::ostream& log, Clock::time_point t0) {
  require_canonical(cfg);
  const auto p = obtain_profile(cfg, log);
  const auto& q = p.Q;
  const auto& g = q.grid();
  std::vector<Check> checks;

  // The residual comes first: a perturbed profile must fail here.
  checks.push_back(check_less_equal("equation_residual", equation_residual(q), cfg.tol));

  double min_q = q[0];
  std::size_t breaks = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    min_q = std::min(min_q, q[j]);
    if (j > 0 && !(q[j] < q[j - 1])) ++breaks;
  }
  checks.push_back(check_greater("min_value", min_q, 0.0));
  checks.push_back(check_less_equal("monotonicity_breaks", static_cast<double>(breaks), 0.0));

  const double n_star = quadrature_3d(q * q);
  checks.push_back(check_between("N_star", n_star, 4.0 / kPi, 2.0 * std::sqrt(2.0)));

  json body{{"source", p.source}, {"n", g.size()}, {"r_max", g.r_max()}, {"N_star", n_star}};
  json errors = json::object();
  guarded("energy", checks, errors, [&] {
    const auto e = energy_breakdown(q);
    checks.push_back(check_less("T_minus_M_rel", std::abs(e.T - e.M) / e.M, 1e-6));
    checks.push_back(check_less("D_minus_2T_rel", std::abs(e.D - 2.0 * e.T) / e.D, 1e-6));
    checks.push_back(check_less("I_minus_half_N_star_rel", rel(e.I.value_or(0.0), 0.5 * n_star), 1e-5));
    body["energy"] = e;
  });
  guarded("hardy_kato", checks, errors, [&] {
    checks.push_back(check_less_equal("hardy_kato_ratio", hardy_kato_ratio(q), 1.0 + 1e-3));
  });
  guarded("virial", checks, errors, [&] {
    const auto vir = virial_report(q, -1.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (double v : vir.newton_lhs.values()) worst = std::max(worst, v);
    checks.push_back(check_less("virial_rel", rel(vir.vrv_integral, -n_star), 1e-4));
    checks.push_back(check_less_equal("virial_pointwise_max", worst, 0.0));
    body["virial"] = vir;
  });
  guarded("far_field", checks, errors, [&] {
    const auto window = cfg.far_window.value_or(default_far_field_window(g));
    const auto far = fit_far_field(q, hartree_term(q), window);
    checks.push_back(check_less("far_field_c4_rel", far.rel_err_4, 0.10));
    checks.push_back(check_less("far_field_c5_rel", far.rel_err_5, 0.15));
    body["far_field"] = far;
  });
  guarded("fourier_fit", checks, errors, [&] {
    const auto four = fit_fourier_decay(forward_transform(q), cfg.fourier_window);
    checks.push_back(check_greater("fourier_sigma_est", four.sigma_est, 0.0));
    checks.push_back(check_greater("fourier_r_squared", four.r_squared, 0.99));
    body["fourier_fit"] = four;
  });
  body["errors"] = errors;

  write_json(cfg.out_dir / "verification.json", report(finish(std::move(body), checks), t0));
  return status_of(checks, log);
}

// ---------------------------------------------------------------- linearize

std::string kind_name(LinearizedKind k) { return k == LinearizedKind::minus ? "L_minus" : "L_plus"; }

json sector_json(const SectorOperator& op, std::size_t lowest) {
  const auto spec = sector_spectrum(op);
  std::vector<double> head(spec.begin(), spec.begin() + static_cast<std::ptrdiff_t>(std::min(lowest, spec.size())));
  return json{{"kind", kind_name(op.kind)},
              {"ell", op.ell},
              {"lowest_eigenvalues", head},
              {"asymmetry", weighted_asymmetry(op.matrix, op.grid)},
              {"operator_norm", weighted_operator_norm(op.matrix, op.grid)}};
}

int run_linearize(const RunConfig& cfg, std::ostream& log, Clock::time_point t0) {
  require_canonical(cfg);
  const auto p = obtain_profile(cfg, log);
  const auto& q = p.Q;
  const auto dq = radial_derivative(q);
  std::vector<Check> checks;
  json sectors = json::array();

  log << "assembling L_minus\n";
  const auto lm = assemble_Lminus(q);
  checks.push_back(check_less("L_minus_Q_rel", l2_norm(lm.apply(q)) / l2_norm(q), 1e-6));
  checks.push_back(check_less("L_minus_asymmetry", weighted_asymmetry(lm.matrix, lm.grid), 1e-10));
  auto lm_json = sector_json(lm, 8);
  const auto lm_kernel = kernel_scan(lm, cfg.kernel_threshold);
  lm_json["kernel_dimension"] = lm_kernel.size();
  if (!lm_kernel.empty()) lm_json["kernel_cosine_Q"] = std::abs(weighted_cosine(lm_kernel.front().vector, q));
  checks.push_back(check_between("L_minus_kernel_dimension", static_cast<double>(lm_kernel.size()), 0.5, 1.5));
  sectors.push_back(lm_json);

  for (int ell = 0; ell <= cfg.ell_max; ++ell) {
    log << "assembling L_plus, ell = " << ell << '\n';
    const auto lp = assemble_Lplus(q, ell);
    auto js = sector_json(lp, 8);
    const std::string tag = "L_plus_" + std::to_string(ell);
    checks.push_back(check_less(tag + "_asymmetry", weighted_asymmetry(lp.matrix, lp.grid), 1e-10));
    if (ell == 0) {
      const auto scaling = 1.5 * q + times_r(dq);
      checks.push_back(check_less("L_plus_0_scaling_rel", l2_norm(lp.apply(scaling) + q) / l2_norm(q), 1e-3));
    }
    if (ell == 1) {
      checks.push_back(check_less("L_plus_1_translation_rel", l2_norm(lp.apply(dq)) / l2_norm(dq), 1e-3));
      const auto kernel = kernel_scan(lp, cfg.kernel_threshold);
      js["kernel_dimension"] = kernel.size();
      if (!kernel.empty()) js["kernel_cosine_dQ"] = std::abs(weighted_cosine(kernel.front().vector, dq));
      checks.push_back(check_between("L_plus_1_kernel_dimension", static_cast<double>(kernel.size()), 0.5, 1.5));
    }
    sectors.push_back(js);
  }

  json body{{"source", p.source}, {"n", q.size()}, {"r_max", q.grid().r_max()},
            {"kernel_threshold", cfg.kernel_threshold}, {"sectors", sectors}};
  write_json(cfg.out_dir / "linearization.json", report(finish(std::move(body), checks), t0));
  return status_of(checks, log);
}

// ---------------------------------------------------------------- certify

int run_certify(const RunConfig& cfg, std::ostream& log, Clock::time_point t0) {
  require_canonical(cfg);
  const auto p = obtain_profile(cfg, log);
  const auto qhat = forward_transform(p.Q);
  std::vector<Check> checks;

  const auto fit = fit_fourier_decay(qhat, cfg.fourier_window);
  checks.push_back(check_greater("fourier_sigma_est", fit.sigma_est, 0.0));
  checks.push_back(check_greater("fourier_r_squared", fit.r_squared, 0.99));

  const auto cert = certify_analyticity(qhat);
  const auto table = moment_growth_table(qhat, cert, cert.checked_n);
  double worst_ratio = 0.0;
  for (const auto& row : table) worst_ratio = std::max(worst_ratio, row.ratio);
  checks.push_back(check_less_equal("moment_ratio_max", worst_ratio, 1.0));
  checks.push_back(check_less_equal("sigma_minus_sigma_est", cert.sigma - fit.sigma_est, 0.0));

  double abel_worst = 0.0;
  for (int n = 0; n <= 30; ++n) {
    for (double a : {1.0, 2.0, 3.0}) {
      for (double b : {1.0, 2.0, 3.0}) {
        abel_worst = std::max(abel_worst, static_cast<double>(abel_identity(n, a, b).rel_err));
      }
    }
  }
  checks.push_back(check_less("abel_rel_err_max", abel_worst, 1e-12));

  json body{{"source", p.source}, {"n", qhat.size()}, {"r_max", qhat.grid().r_max()},
            {"certificate", cert}, {"moments", table},  {"fourier_fit", fit}};
  write_json(cfg.out_dir / "certificate.json", report(finish(std::move(body), checks), t0));
  return status_of(checks, log);
}

// ---------------------------------------------------------------- evolve

int run_evolve(const RunConfig& cfg, std::ostream& log, Clock::time_point t0) {
  require_canonical(cfg);
  const auto p = obtain_profile(cfg, log);
  const auto& q = p.Q;
  const WaveField psi0{complexify(q), 0.0, 0.0};
  log << "evolving " << cfg.steps << " steps of " << cfg.dt << '\n';
  const auto res = evolve(psi0, cfg.dt, cfg.steps, {true, cfg.record_every});
  const double t_end = res.state.t;

  std::vector<Check> checks;
  checks.push_back(check_less_equal("aborted", res.aborted ? 1.0 : 0.0, 0.0));
  checks.push_back(check_less("stationarity_rel", l2_norm(modulus(res.state.psi) - q) / l2_norm(q), 1e-3));
  // The solitary wave rotates as exp(i t); compare on the circle.
  const double dphase = std::remainder(mean_phase(q, res.state.psi) - t_end, 2.0 * kPi);
  checks.push_back(check_less("phase_drift", std::abs(dphase), 1e-3));
  const auto c0 = mass_and_energy(psi0);
  const auto c1 = mass_and_energy(res.state);
  checks.push_back(check_less("mass_drift_rel", rel(c1.mass, c0.mass), 1e-8));
  // E[Q] vanishes, so energy drift is measured against the kinetic part.
  checks.push_back(check_less("energy_drift_over_kinetic", std::abs(c1.total - c0.total) / c0.kinetic, 1e-5));

  for (const auto& snap : res.snapshots) {
    const auto step = static_cast<long>(std::lround(snap.t / cfg.dt));
    std::ostringstream name;
    name << "psi_" << std::setw(6) << std::setfill('0') << step << ".csv";
    write_csv(cfg.out_dir / name.str(), snap.psi);
  }
  write_csv(cfg.out_dir / "psi_final.csv", res.state.psi);

  json body{{"source", p.source},  {"n", q.size()},          {"r_max", q.grid().r_max()},
            {"dt", cfg.dt},        {"steps", cfg.steps},     {"steps_completed", res.steps_completed},
            {"t_final", t_end},    {"series", res.series},   {"initial", c0},
            {"final", c1}};
  write_json(cfg.out_dir / "evolution.json", report(finish(std::move(body), checks), t0));
  return status_of(checks, log);
}

// ---------------------------------------------------------------- selftest

std::mt19937_64 shard_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{seed, index};
  return std::mt19937_64(seq);
}

RadialField random_field(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(8, 600);
  std::uniform_real_distribution<double> radius(1.0, 300.0);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  const RadialGrid g(size(rng), radius(rng));
  std::vector<double> v(g.size());
  for (auto& x : v) x = value(rng);
  return RadialField(g, std::move(v));
}

int run_selftest(const RunConfig& cfg, std::ostream& log, Clock::time_point t0) {
  std::vector<Check> checks;
  constexpr int kCases = 100;

  double round_trip = 0.0, plancherel = 0.0;
  for (int i = 0; i < kCases; ++i) {
    auto rng = shard_rng(cfg.seed, static_cast<std::uint64_t>(i));
    const auto u = random_field(rng);
    const auto uhat = forward_transform(u);
    round_trip = std::max(round_trip, l2_norm(inverse_transform(uhat) - u) / l2_norm(u));
    const double lhs = quadrature_3d(u * u);
    plancherel = std::max(plancherel, std::abs(lhs - spectral_quadrature_3d(uhat * uhat)) / lhs);
  }
  checks.push_back(check_less("transform_round_trip", round_trip, 100 * 2.220446049250313e-16));
  checks.push_back(check_less("plancherel", plancherel, 1e-10));

  {
    const RadialGrid g(2048, 40.0);
    const auto uhat = forward_transform(RadialField::sample(g, [](double r) { return std::exp(-0.5 * r * r); }));
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size() && g.xi(k) <= 10.0; ++k) {
      worst = std::max(worst, std::abs(uhat[k] - std::exp(-0.5 * g.xi(k) * g.xi(k))));
    }
    checks.push_back(check_less("gaussian_transform_pair", worst, 1e-8));
  }
  {
    const RadialGrid g(4096, 400.0);
    const auto phat = forward_transform(RadialField::sample(g, [](double r) { return poisson_kernel(1.0, r); }));
    const double c = std::pow(2.0 * kPi, -1.5);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) worst = std::max(worst, std::abs(phat[k] - c * std::exp(-g.xi(k))));
    checks.push_back(check_less("poisson_transform_pair", worst, 1e-4));
  }

  double abel_worst = 0.0;
  for (int n = 0; n <= 30; ++n) {
    for (double a : {1.0, 2.0, 3.0}) {
      for (double b : {1.0, 2.0, 3.0}) {
        abel_worst = std::max(abel_worst, static_cast<double>(abel_identity(n, a, b).rel_err));
      }
    }
  }
  checks.push_back(check_less("abel_identity", abel_worst, 1e-12));

  {
    // Uniform unit-mass ball; r = 1 is the node 1000 and takes the mean density.
    const RadialGrid g(3999, 4.0);
    const double rho0 = 3.0 / (4.0 * kPi);
    const auto rho = RadialField::sample(g, [rho0](double r) {
      if (std::abs(r - 1.0) < 1e-9) return 0.5 * rho0;
      return r < 1.0 ? rho0 : 0.0;
    });
    const auto phi = newton_potential(rho);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double r = g.r(j);
      const double exact = r < 1.0 ? 0.5 * (3.0 - r * r) : 1.0 / r;
      worst = std::max(worst, std::abs(phi[j] - exact));
    }
    checks.push_back(check_less("newton_uniform_ball", worst, 1e-6));
  }

  json body{{"seed", cfg.seed}, {"random_cases", kCases}};
  write_json(cfg.out_dir / "selftest.json", report(finish(std::move(body), checks), t0));
  return status_of(checks, log);
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const DivergenceError*>(&e)) return "divergence";
  if (dynamic_cast<const PremiseViolation*>(&e)) return "premise_violation";
  if (dynamic_cast<const CertificateFailure*>(&e)) return "certificate_failure";
  if (dynamic_cast<const ResolutionError*>(&e)) return "resolution";
  if (dynamic_cast<const GridMismatch*>(&e)) return "grid_mismatch";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid_argument";
  if (dynamic_cast<const NumericError*>(&e)) return "numeric";
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  return "error";
}

}  // namespace

Check check_less(std::string name, double value, double limit) {
  return {std::move(name), value, "<", limit, 0.0, value < limit};
}
Check check_less_equal(std::string name, double value, double limit) {
  return {std::move(name), value, "<=", limit, 0.0, value <= limit};
}
Check check_greater(std::string name, double value, double limit) {
  return {std::move(name), value, ">", limit, 0.0, value > limit};
}
Check check_between(std::string name, double value, double lo, double hi) {
  return {std::move(name), value, "in", lo, hi, value > lo && value < hi};
}

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name}, {"value", c.value}, {"relation", c.relation}, {"pass", c.pass}};
  if (c.relation == "in") {
    j["limit"] = json::array({c.limit, c.limit_hi});
  } else {
    j["limit"] = c.limit;
  }
}

std::string first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return c.name;
  }
  return {};
}

json make_meta(double elapsed_seconds) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ts;
  ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
#if defined(__clang__)
  const std::string compiler = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  const std::string compiler = std::string("gcc ") + __VERSION__;
#else
  const std::string compiler = "unknown";
#endif
  return json{{"generated_at", ts.str()},
              {"tool_version", kToolVersion},
              {"compiler", compiler},
              {"elapsed_seconds", elapsed_seconds}};
}

int run_pipeline(const RunConfig& cfg, std::ostream& log) {
  const auto t0 = Clock::now();
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec || !fs::is_directory(cfg.out_dir)) {
    log << "error: out_dir: cannot create " << cfg.out_dir.string() << '\n';
    return kUsage;
  }
  try {
    write_json(cfg.out_dir / "run_config.json", to_json(cfg));
  } catch (const std::exception& e) {
    log << "error: out_dir: " << e.what() << '\n';
    return kUsage;
  }

  try {
    switch (cfg.command) {
      case Command::solve:
        return run_solve(cfg, log, t0);
      case Command::verify:
        return run_verify(cfg, log, t0);
      case Command::linearize:
        return run_linearize(cfg, log, t0);
      case Command::certify:
        return run_certify(cfg, log, t0);
      case Command::evolve:
        return run_evolve(cfg, log, t0);
      case Command::selftest:
        return run_selftest(cfg, log, t0);
    }
  } catch (const std::exception& e) {
    const auto kind = error_kind(e);
    json err{{"command", to_string(cfg.command)}, {"type", kind}, {"message", e.what()}};
    if (const auto* u = dynamic_cast<const UsageError*>(&e)) err["key"] = u->key();
    write_json(cfg.out_dir / "error.json", report(json{{"error", err}}, t0));
    log << "error (" << kind << "): " << e.what() << '\n';
    return kind == "usage" ? kUsage : kModuleError;
  }
  return kModuleError;
}

}  // namespace bosonstar::app
