#pragma once

#include <cstddef>
#include <memory>
#include <span>

namespace bosonstar {

/**
 * Interior nodes of the truncated half line and their dual frequencies.
 *
 * r_j = j dr and xi_k = k pi / r_max for j, k = 1..n with dr = r_max/(n+1),
 * so dr * dxi * (n+1) = pi. Neither r = 0 nor r = r_max is a node.
 *
 * Copies share one immutable node table.
 */
class RadialGrid {
 public:
  RadialGrid(std::size_t n, double r_max);

  std::size_t size() const noexcept;
  double r_max() const noexcept;
  double dr() const noexcept;
  double dxi() const noexcept;
  double xi_max() const noexcept;

  std::span<const double> r() const noexcept;
  std::span<const double> xi() const noexcept;
  double r(std::size_t j) const;
  double xi(std::size_t k) const;

  /// 4 pi dr r_j^2, the weights of the r^2-weighted inner product.
  std::span<const double> weights() const noexcept;

  /// True when both grids have the same n and r_max (to 1e-12 relative).
  friend bool operator==(const RadialGrid& a, const RadialGrid& b) noexcept;

 private:
  struct Nodes;
  std::shared_ptr<const Nodes> nodes_;
};

/// Throws GridMismatch unless a == b.
void require_same_grid(const RadialGrid& a, const RadialGrid& b, const char* where);

}  // namespace bosonstar
