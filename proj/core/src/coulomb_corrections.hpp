#pragma once

#include <span>

#include "bosonstar/grid.hpp"

namespace bosonstar::detail {

/// Adds the ell = 0 diagonal-kink corrections to a trapezoid Coulomb sweep:
///   - pi dr^2/3 rho + pi dr^4/60 L rho - (pi/1512 + pi/720) dr^6 L^2 rho,
/// with L = (1/r) D2 r the radial Laplacian stencil, rho r = 0 at r = 0 and r_max.
void add_monopole_corrections(const RadialGrid& g, std::span<const double> rho,
                              std::span<double> phi);

}  // namespace bosonstar::detail
