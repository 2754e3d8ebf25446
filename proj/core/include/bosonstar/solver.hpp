#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bosonstar/energetics.hpp"
#include "bosonstar/errors.hpp"
#include "bosonstar/field.hpp"

namespace bosonstar {

/// Initial profiles for the ground-state iteration.
namespace init {
struct Gaussian {
  double width = 1.0;  ///< exp(-r^2 / (2 width^2))
};
struct Lorentzian {};  ///< (1 + r^2)^-2
struct Custom {
  std::vector<double> values;  ///< one sample per grid node
};
}  // namespace init

using InitialGuess = std::variant<init::Gaussian, init::Lorentzian, init::Custom>;

/// Samples an initial guess on a grid.
RadialField make_initial_field(const RadialGrid& grid, const InitialGuess& guess);

struct SolverConfig {
  RadialGrid grid{2048, 200.0};
  InitialGuess init = init::Gaussian{};
  double gamma = 1.5;           ///< stabilization exponent, > 1
  double tol_residual = 1e-8;   ///< relative equation residual target, > 0
  int max_iter = 5000;          ///< >= 1
  double m = 0.0;               ///< >= 0
  double mu = 1.0;              ///< > -m

  /// Throws InvalidArgument naming the first offending field.
  void validate() const;
};

/// One row of the iteration history.
struct IterationRecord {
  int iteration = 0;
  double residual = 0.0;       ///< relative equation residual of the iterate
  double stabilization = 0.0;  ///< s_n
};

struct GroundStateReport {
  RadialField Q;
  double N_star = 0.0;          ///< ||Q||^2
  EnergyBreakdown energy;
  double residual = 0.0;        ///< ||sqrt(-Delta+m^2) Q + mu Q - F(Q)|| / ||Q||
  int iterations = 0;
  std::vector<IterationRecord> trace;
  double Q0 = 0.0;              ///< even extrapolation to r = 0
  double max_clamp = 0.0;       ///< largest projected negative part, relative to ||u||
  double m = 0.0;
  double mu = 1.0;
};

/// Thrown when max_iter is reached; carries the full trace.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::vector<IterationRecord> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<IterationRecord>& trace() const noexcept { return trace_; }

 private:
  std::vector<IterationRecord> trace_;
};

/// Negative values beyond round-off appeared and could not be projected away.
class ProjectionFailure : public Error {
 public:
  using Error::Error;
};

/// A nonexistence probe converged to a nonzero solution.
class ConsistencyAlarm : public Error {
 public:
  using Error::Error;
};

/// Relative residual of sqrt(-Delta+m^2) u + mu u - F(u) = 0.
double equation_residual(const RadialField& u, double m = 0.0, double mu = 1.0);

/**
 * Petviashvili iteration on the resolvent form of the ground-state equation:
 *   w = (sqrt(-Delta+m^2) + mu)^-1 F(u),
 *   s = <(sqrt(-Delta+m^2) + mu) u, u> / <F(u), u>,
 *   u <- s^gamma w,
 * projecting onto u >= 0 after each step. Stops on the equation residual.
 */
GroundStateReport solve_ground_state(const SolverConfig& cfg);

struct RefineCheck {
  double N_star_coarse = 0.0;
  double N_star_fine = 0.0;
  double drift = 0.0;  ///< |coarse - fine| / fine
};

/// Solves on (n, r_max) and (2n, r_max) from the same kind of initial guess;
/// a custom guess is replaced by the default Gaussian on the fine grid.
RefineCheck refine_check(const SolverConfig& cfg);

enum class ProbeOutcome {
  decayed,     ///< ||u_n|| fell below the collapse threshold
  diverged,    ///< ||u_n|| grew without bound
  stagnated,   ///< max_iter reached with the residual not converging
  converged,   ///< only returned for E < 0 (ground-state branch)
};

struct ProbeReport {
  bool collapsed = false;  ///< true unless a converged solution was found
  ProbeOutcome outcome = ProbeOutcome::stagnated;
  double final_norm = 0.0;
  std::optional<double> final_residual;  ///< set when the run reached max_iter or converged
  int iterations = 0;
};

/**
 * Runs the unstabilized map u <- (sqrt(-Delta)+1)^-1 (F(u) + (E+1) u) for
 * E >= 0. A converged nonzero solution throws ConsistencyAlarm. For E < 0
 * the problem is the ground-state equation with mu = -E and is delegated to
 * solve_ground_state.
 */
ProbeReport nonexistence_probe(double E, const SolverConfig& cfg);

std::string to_string(ProbeOutcome o);

}  // namespace bosonstar
