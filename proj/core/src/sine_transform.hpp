#pragma once

#include <cstddef>
#include <span>

namespace bosonstar::detail {

/// y_k = 2 sum_{j=1..n} x_j sin(pi j k / (n+1)), k = 1..n (unnormalized DST-I).
void dst1(std::span<const double> x, std::span<double> y);

/// y_j = 2 sum_{k=1..n} x_k cos(pi j k / (n+1)), j = 1..n.
/// The DCT-I of length n+2 with zero end samples, restricted to the interior.
void dct1_interior(std::span<const double> x, std::span<double> y);

}  // namespace bosonstar::detail
