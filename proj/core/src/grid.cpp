#include "bosonstar/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bosonstar/errors.hpp"

namespace bosonstar {

struct RadialGrid::Nodes {
  std::size_t n;
  double r_max;
  double dr;
  double dxi;
  std::vector<double> r;
  std::vector<double> xi;
  std::vector<double> w;
};

RadialGrid::RadialGrid(std::size_t n, double r_max) {
  if (n < 4) throw InvalidArgument("grid: n must be at least 4, got " + std::to_string(n));
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw InvalidArgument("grid: r_max must be positive and finite");
  }
  auto nodes = std::make_shared<Nodes>();
  nodes->n = n;
  nodes->r_max = r_max;
  nodes->dr = r_max / static_cast<double>(n + 1);
  nodes->dxi = std::numbers::pi / r_max;
  nodes->r.resize(n);
  nodes->xi.resize(n);
  nodes->w.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double jj = static_cast<double>(j + 1);
    nodes->r[j] = jj * nodes->dr;
    nodes->xi[j] = jj * nodes->dxi;
    nodes->w[j] = 4.0 * std::numbers::pi * nodes->dr * nodes->r[j] * nodes->r[j];
  }
  nodes_ = std::move(nodes);
}

std::size_t RadialGrid::size() const noexcept { return nodes_->n; }
double RadialGrid::r_max() const noexcept { return nodes_->r_max; }
double RadialGrid::dr() const noexcept { return nodes_->dr; }
double RadialGrid::dxi() const noexcept { return nodes_->dxi; }
double RadialGrid::xi_max() const noexcept { return nodes_->xi.back(); }
std::span<const double> RadialGrid::r() const noexcept { return nodes_->r; }
std::span<const double> RadialGrid::xi() const noexcept { return nodes_->xi; }
double RadialGrid::r(std::size_t j) const { return nodes_->r.at(j); }
double RadialGrid::xi(std::size_t k) const { return nodes_->xi.at(k); }
std::span<const double> RadialGrid::weights() const noexcept { return nodes_->w; }

bool operator==(const RadialGrid& a, const RadialGrid& b) noexcept {
  // Tolerates the last-digit drift of an r_max rebuilt from a text node column.
  return a.nodes_ == b.nodes_ ||
         (a.nodes_->n == b.nodes_->n &&
          std::abs(a.nodes_->r_max - b.nodes_->r_max) <= 1e-12 * a.nodes_->r_max);
}

void require_same_grid(const RadialGrid& a, const RadialGrid& b, const char* where) {
  if (!(a == b)) {
    throw GridMismatch(std::string(where) + ": grids differ (n=" + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace bosonstar
