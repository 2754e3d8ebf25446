#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "bosonstar/field.hpp"

namespace bosonstar {

/// Parameters of the dispersion relation and its derived operators.
struct DispersionParams {
  double m = 0.0;    ///< mass, m >= 0
  double tau = 1.0;  ///< resolvent shift, tau > 0
  double t = 1.0;    ///< semigroup time, t > 0

  /// Throws InvalidArgument naming the first offending field.
  void validate() const;
};

/// A Fourier multiplier evaluated at |xi|.
using Symbol = std::function<double(double)>;
using ComplexSymbol = std::function<std::complex<double>(double)>;

namespace symbols {
Symbol identity();
Symbol half_laplacian();                  ///< |xi|
Symbol relativistic(double m);            ///< sqrt(xi^2 + m^2)
Symbol resolvent(const DispersionParams& p);  ///< 1 / (sqrt(xi^2 + m^2) + tau)
Symbol poisson_semigroup(double t);       ///< exp(-t |xi|)
}  // namespace symbols

/// inverse_transform(symbol(xi_k) * forward_transform(u)).
/// Throws InvalidArgument if the symbol is non-finite at any xi_k.
RadialField apply_multiplier(const RadialField& u, const Symbol& symbol);
ComplexRadialField apply_multiplier(const ComplexRadialField& u, const ComplexSymbol& symbol);

/// Real-space kernel of exp(-t sqrt(-Delta)) on R^3: t / (pi^2 (t^2 + r^2)^2).
double poisson_kernel(double t, double r);

/**
 * Coulomb potential (rho * |x|^-1)(r_j) of a radial density.
 *
 * Newton's theorem reduces the convolution to
 *   (4 pi / r) int_0^r rho s^2 ds + 4 pi int_r^inf rho s ds,
 * evaluated by one prefix and one suffix trapezoid sweep. The kink of
 * min(1/r, 1/s) on the diagonal limits the plain sweep to O(dr^2); local
 * Euler-Maclaurin corrections built from the discrete Laplacian of rho
 * raise this to O(dr^8). Every correction vanishes outside supp rho, so
 * the exterior potential is exactly M/r.
 */
RadialField newton_potential(const RadialField& rho);

/// Same potential through the Fourier multiplier 4 pi / xi^2. The xi -> 0
/// pole is handled by splitting off the monopole; kept as a cross-check.
RadialField newton_potential_spectral(const RadialField& rho);

/// F(u) = newton_potential(u^2) u.
RadialField hartree_term(const RadialField& u);

/// max_j newton_potential(u^2)(r_j) / ((pi/2) <u, sqrt(-Delta) u>).
/// The sharp Kato inequality bounds this by 1. Throws InvalidArgument if u == 0.
double hardy_kato_ratio(const RadialField& u);

/**
 * Dense matrix of the angular-momentum-ell Coulomb operator
 *   g |-> (4 pi/(2 ell+1)) int_0^inf r_<^ell / r_>^(ell+1) g(s) s^2 ds,
 * carrying the same local corrections as newton_potential. For ell = 0 the
 * product with rho equals newton_potential(rho). Symmetric with respect to
 * the r^2-weighted inner product.
 */
Eigen::MatrixXd coulomb_sector_matrix(const RadialGrid& grid, int ell);

}  // namespace bosonstar
