#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bosonstar/operators.hpp"
#include "coulomb_corrections.hpp"

namespace bosonstar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kC2 = kPi / 3.0;
constexpr double kC4 = kPi / 60.0;
constexpr double kC6a = kPi / 1512.0;
constexpr double kC6 = kPi / 1512.0 + kPi / 720.0;

// (1/r) D2 (r x) with zero ghost values at both ends.
std::vector<double> radial_laplacian(std::span<const double> r, double dr, std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> y(n);
  const double h2 = dr * dr;
  for (std::size_t j = 0; j < n; ++j) {
    const double left = j > 0 ? r[j - 1] * x[j - 1] : 0.0;
    const double right = j + 1 < n ? r[j + 1] * x[j + 1] : 0.0;
    y[j] = (left - 2.0 * r[j] * x[j] + right) / (h2 * r[j]);
  }
  return y;
}

}  // namespace

namespace detail {

void add_monopole_corrections(const RadialGrid& g, std::span<const double> rho, std::span<double> phi) {
  const double dr = g.dr();
  const auto r = g.r();
  const auto l1 = radial_laplacian(r, dr, rho);
  const auto l2 = radial_laplacian(r, dr, l1);
  const double h2 = dr * dr, h4 = h2 * h2, h6 = h4 * h2;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    phi[j] += -kC2 * h2 * rho[j] + kC4 * h4 * l1[j] - kC6 * h6 * l2[j];
  }
}

}  // namespace detail

Eigen::MatrixXd coulomb_sector_matrix(const RadialGrid& grid, int ell) {
  if (ell < 0) throw InvalidArgument("coulomb_sector_matrix: ell must be >= 0, got " + std::to_string(ell));
  const auto n = static_cast<Eigen::Index>(grid.size());
  const auto r = grid.r();
  const double dr = grid.dr();
  const double l = ell;
  const double pref = 4.0 * kPi / (2.0 * l + 1.0);

  Eigen::MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double sj = r[j];
    for (Eigen::Index i = 0; i < n; ++i) {
      const double lo = std::min(r[i], sj), hi = std::max(r[i], sj);
      a(i, j) = pref * std::pow(lo / hi, l) / hi * sj * sj * dr;
    }
  }

  // Local corrections; all terms are banded with half-width 2.
  const double h2 = dr * dr, h4 = h2 * h2, h6 = h4 * h2;
  const double ll = l * (l + 1.0);
  const double l4 = ll * (l + 2.0) * (l - 1.0);

  // Entries of the tridiagonal stencils lap = (1/r) D2 r and D2.
  auto d2 = [&](Eigen::Index i, Eigen::Index j) {
    return (i == j ? -2.0 : (std::abs(i - j) == 1 ? 1.0 : 0.0)) / h2;
  };
  auto lap = [&](Eigen::Index i, Eigen::Index j) { return d2(i, j) * r[j] / r[i]; };
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ri2 = r[i] * r[i];
    a(i, i) += -kC2 * h2 + kC4 * h4 * ll / (3.0 * ri2) - kC6a * h6 * l4 / (5.0 * ri2 * ri2);
    for (Eigen::Index j = std::max<Eigen::Index>(0, i - 1); j <= std::min<Eigen::Index>(n - 1, i + 1); ++j) {
      a(i, j) += kC4 * h4 * lap(i, j) - kC6a * h6 * 2.0 * ll / ri2 * d2(i, j);
    }
    for (Eigen::Index j = std::max<Eigen::Index>(0, i - 2); j <= std::min<Eigen::Index>(n - 1, i + 2); ++j) {
      double lap2 = 0.0;
      for (Eigen::Index k = std::max<Eigen::Index>(0, std::max(i, j) - 1);
           k <= std::min<Eigen::Index>(n - 1, std::min(i, j) + 1); ++k) {
        lap2 += lap(i, k) * lap(k, j);
      }
      a(i, j) -= kC6 * h6 * lap2;
    }
  }
  return a;
}

}  // namespace bosonstar
