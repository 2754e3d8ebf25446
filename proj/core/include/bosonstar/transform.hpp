#pragma once

#include "bosonstar/field.hpp"

namespace bosonstar {

/// \name Discrete radial Fourier pair
///
/// forward:  uhat_k = sqrt(2/pi) (dr/xi_k)  sum_j r_j u_j sin(xi_k r_j)
/// inverse:  u_j    = sqrt(2/pi) (dxi/r_j)  sum_k xi_k uhat_k sin(xi_k r_j)
///
/// Both are a type-I sine transform of the auxiliary sequence r u (resp.
/// xi uhat); on the grid they are exact inverses of each other.
/// @{
SpectralField forward_transform(const RadialField& u);
RadialField inverse_transform(const SpectralField& v);
ComplexSpectralField forward_transform(const ComplexRadialField& u);
ComplexRadialField inverse_transform(const ComplexSpectralField& v);
/// @}

/// 4 pi dr sum_j u_j r_j^2; the endpoints r = 0 and r = r_max contribute zero.
double quadrature_3d(const RadialField& u);

/// 4 pi dxi sum_k v_k xi_k^2, the frequency-side counterpart.
double spectral_quadrature_3d(const SpectralField& v);

/// <a, b> = quadrature_3d(a b).
double inner_product(const RadialField& a, const RadialField& b);

/// sqrt(quadrature_3d(|u|^2)).
double l2_norm(const RadialField& u);
double l2_norm(const ComplexRadialField& u);

/// Value at r = 0 from the even polynomial of degree 8 through the first five nodes.
double origin_value(const RadialField& u);

/// Derivative of the sine interpolant of r u, evaluated at the nodes.
/// Spectrally accurate for fields that are smooth and small near r_max.
RadialField radial_derivative(const RadialField& u);

/// Second-order centered difference; one-sided three-point stencils at the
/// first and last node.
RadialField centered_difference(const RadialField& u);

}  // namespace bosonstar
