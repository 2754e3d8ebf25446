#pragma once

#include <optional>

#include "bosonstar/field.hpp"

namespace bosonstar {

/// Kinetic, mass and interaction energies of a real radial field.
struct EnergyBreakdown {
  double T = 0.0;            ///< ||(-Delta)^{1/4} u||^2
  double M = 0.0;            ///< ||u||^2
  double D = 0.0;            ///< double Coulomb integral of u^2
  std::optional<double> I;   ///< T M / D, absent when D = 0
};

/// T from the spectral side (4 pi dxi sum xi^3 uhat^2); M and D by quadrature
/// against newton_potential. I is left empty for the zero field.
EnergyBreakdown energy_breakdown(const RadialField& u);

/// T M / D; throws InvalidArgument for the zero field.
double weinstein_functional(const RadialField& u);

/// Coupling and eigenvalue of sqrt(-Delta) u - kappa (u^2 * |x|^-1) u = -lambda u,
/// together with the spectral parameter E of the nonexistence problem.
struct RescaleParams {
  double kappa = 1.0;   ///< > 0
  double lambda = 1.0;  ///< > 0
  double E = 0.0;

  void validate() const;
};

/// Relative residual ||sqrt(-Delta) u - kappa F(u) + lambda u|| / ||u||.
double scaled_equation_residual(const RadialField& u, double kappa, double lambda);

/**
 * v(r) = kappa^{1/2} lambda^{-3/2} u(r / lambda) on the grid of u. Then
 * ||v||^2 = kappa ||u||^2 and the relative residual of v is that of u over lambda.
 *
 * Off-node values come from a cubic Hermite interpolant with spectral slopes,
 * limited so that it is monotone wherever the samples are. It is
 * extended evenly through r = 0 and by zero beyond r_max. Throws
 * ResolutionError when more than half of the targets r_j / lambda fall
 * inside the first cell.
 */
RadialField rescale_to_canonical(const RadialField& u, const RescaleParams& p);

/// Virial quantities for V = -newton_potential(u^2).
struct VirialReport {
  double lhs = 0.0;               ///< int (V + r V' - E) u^2
  double rhs = 0.0;               ///< target value of lhs
  double vrv_integral = 0.0;      ///< int (V + r V') u^2
  double mass = 0.0;              ///< ||u||^2
  RadialField newton_lhs;         ///< V + r V' = -4 pi int_r^inf u^2 s ds
  RadialField newton_lhs_fd;      ///< V + r V' with V' from centered differences
};

/// The pointwise field uses the closed suffix-integral form; the difference
/// quotient version is returned alongside as a cross-check.
VirialReport virial_report(const RadialField& u, double E);

/// Lower bound 2/pi on T M / D implied by the sharp Kato inequality.
double kato_lower_bound();

}  // namespace bosonstar
