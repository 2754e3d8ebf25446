#include "bosonstar/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bosonstar/operators.hpp"
#include "bosonstar/transform.hpp"

namespace bosonstar {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Negative parts above this fraction of max|u| are not round-off.
constexpr double kProjectionLimit = 1e-8;

Symbol shifted_inverse(double m, double mu) {
  return [m, mu](double xi) { return 1.0 / (std::hypot(xi, m) + mu); };
}

// Clamps negative samples to zero and returns the largest clamped magnitude.
double project_nonnegative(std::vector<double>& v) {
  double worst = 0.0;
  for (auto& x : v) {
    if (x < 0.0) {
      worst = std::max(worst, -x);
      x = 0.0;
    }
  }
  return worst;
}

}  // namespace

RadialField make_initial_field(const RadialGrid& grid, const InitialGuess& guess) {
  return std::visit(
      overloaded{
          [&](const init::Gaussian& gs) {
            if (!(gs.width > 0.0)) throw InvalidArgument("init.width: must be > 0");
            const double a = 0.5 / (gs.width * gs.width);
            return RadialField::sample(grid, [a](double r) { return std::exp(-a * r * r); });
          },
          [&](const init::Lorentzian&) {
            return RadialField::sample(grid, [](double r) {
              const double q = 1.0 + r * r;
              return 1.0 / (q * q);
            });
          },
          [&](const init::Custom& c) { return RadialField(grid, c.values); },
      },
      guess);
}

void SolverConfig::validate() const {
  if (!(gamma > 1.0)) throw InvalidArgument("gamma: must be > 1");
  if (!(tol_residual > 0.0)) throw InvalidArgument("tol_residual: must be > 0");
  if (max_iter < 1) throw InvalidArgument("max_iter: must be >= 1");
  if (!(m >= 0.0)) throw InvalidArgument("m: must be >= 0");
  if (!(mu > -m)) throw InvalidArgument("mu: must exceed -m");
}

double equation_residual(const RadialField& u, double m, double mu) {
  const double norm = l2_norm(u);
  if (norm == 0.0) throw InvalidArgument("equation_residual: zero field");
  auto res = apply_multiplier(u, symbols::relativistic(m));
  res += mu * u;
  res -= hartree_term(u);
  return l2_norm(res) / norm;
}

GroundStateReport solve_ground_state(const SolverConfig& cfg) {
  cfg.validate();
  const auto& g = cfg.grid;
  RadialField u = make_initial_field(g, cfg.init);
  {
    std::vector<double> v(u.values().begin(), u.values().end());
    const double scale = *std::max_element(v.begin(), v.end());
    if (!(scale > 0.0)) throw InvalidArgument("init: must not vanish identically");
    if (project_nonnegative(v) > kProjectionLimit * scale) {
      throw InvalidArgument("init: must be nonnegative");
    }
    u = RadialField(g, std::move(v));
  }

  const auto kinetic = symbols::relativistic(cfg.m);
  const auto inverse = shifted_inverse(cfg.m, cfg.mu);
  std::vector<IterationRecord> trace;
  double max_clamp = 0.0;

  for (int it = 0;; ++it) {
    const auto fu = hartree_term(u);
    auto lu = apply_multiplier(u, kinetic);
    lu += cfg.mu * u;
    const double norm = l2_norm(u);
    const double residual = l2_norm(lu - fu) / norm;
    const double s = inner_product(lu, u) / inner_product(fu, u);
    trace.push_back({it, residual, s});

    if (!std::isfinite(residual) || !std::isfinite(s) || !(s > 0.0)) {
      throw DivergenceError("solve_ground_state: iteration left the admissible cone at step " +
                                std::to_string(it),
                            std::move(trace));
    }
    if (residual <= cfg.tol_residual) {
      auto energy = energy_breakdown(u);
      const double n_star = energy.M;
      const double q0 = origin_value(u);
      return GroundStateReport{std::move(u), n_star, energy, residual, it,
                               std::move(trace), q0, max_clamp, cfg.m, cfg.mu};
    }
    if (it >= cfg.max_iter) {
      throw DivergenceError("solve_ground_state: no convergence within " +
                                std::to_string(cfg.max_iter) + " iterations (residual " +
                                std::to_string(residual) + ")",
                            std::move(trace));
    }

    const auto w = apply_multiplier(fu, inverse);
    std::vector<double> next(w.size());
    const double factor = std::pow(s, cfg.gamma);
    for (std::size_t j = 0; j < next.size(); ++j) next[j] = factor * w[j];
    const double peak = *std::max_element(next.begin(), next.end());
    const double clamp = project_nonnegative(next);
    if (clamp > kProjectionLimit * std::max(peak, 0.0)) {
      throw ProjectionFailure("solve_ground_state: negative part " + std::to_string(clamp) +
                              " at step " + std::to_string(it));
    }
    u = RadialField(g, std::move(next));
    max_clamp = std::max(max_clamp, clamp / l2_norm(u));
  }
}

RefineCheck refine_check(const SolverConfig& cfg) {
  SolverConfig fine = cfg;
  fine.grid = RadialGrid(2 * cfg.grid.size(), cfg.grid.r_max());
  if (std::holds_alternative<init::Custom>(fine.init)) fine.init = init::Gaussian{};
  const auto a = solve_ground_state(cfg);
  const auto b = solve_ground_state(fine);
  return {a.N_star, b.N_star, std::abs(a.N_star - b.N_star) / b.N_star};
}

ProbeReport nonexistence_probe(double E, const SolverConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(E)) throw InvalidArgument("E: must be finite");
  if (E < 0.0) {
    SolverConfig gs = cfg;
    gs.mu = -E;
    const auto rep = solve_ground_state(gs);
    return {false, ProbeOutcome::converged, std::sqrt(rep.N_star), rep.residual, rep.iterations};
  }

  const auto& g = cfg.grid;
  RadialField u = make_initial_field(g, cfg.init);
  const double norm0 = l2_norm(u);
  if (!(norm0 > 0.0)) throw InvalidArgument("init: must not vanish identically");
  const auto inverse = shifted_inverse(0.0, 1.0);
  const auto kinetic = symbols::half_laplacian();

  // Growth or decay by this factor settles the outcome.
  constexpr double kEscape = 1e8;
  ProbeReport rep;
  rep.final_norm = norm0;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    auto rhs = hartree_term(u);
    rhs += (E + 1.0) * u;
    auto next = apply_multiplier(rhs, inverse);
    const double norm = l2_norm(next);
    rep.iterations = it;
    rep.final_norm = norm;
    if (!std::isfinite(norm) || norm > kEscape * norm0) {
      rep.collapsed = true;
      rep.outcome = ProbeOutcome::diverged;
      return rep;
    }
    if (norm < norm0 / kEscape) {
      rep.collapsed = true;
      rep.outcome = ProbeOutcome::decayed;
      return rep;
    }
    u = std::move(next);
  }

  auto res = apply_multiplier(u, kinetic);
  res -= E * u;
  res -= hartree_term(u);
  const double residual = l2_norm(res) / l2_norm(u);
  rep.final_residual = residual;
  if (residual <= cfg.tol_residual) {
    throw ConsistencyAlarm("nonexistence_probe: converged nonzero solution at E = " +
                           std::to_string(E) + " (residual " +
                           std::to_string(residual) + ")");
  }
  rep.collapsed = true;
  rep.outcome = ProbeOutcome::stagnated;
  return rep;
}

std::string to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::decayed: return "decayed";
    case ProbeOutcome::diverged: return "diverged";
    case ProbeOutcome::stagnated: return "stagnated";
    case ProbeOutcome::converged: return "converged";
  }
  return "unknown";
}

}  // namespace bosonstar
