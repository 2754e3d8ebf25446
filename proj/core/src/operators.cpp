#include "bosonstar/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bosonstar/transform.hpp"
#include "coulomb_corrections.hpp"

namespace bosonstar {
namespace {
constexpr double kPi = std::numbers::pi;
}

void DispersionParams::validate() const {
  if (!(m >= 0.0) || !std::isfinite(m)) throw InvalidArgument("m: must be >= 0");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidArgument("tau: must be > 0");
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("t: must be > 0");
}

namespace symbols {
Symbol identity() {
  return [](double) { return 1.0; };
}
Symbol half_laplacian() {
  return [](double xi) { return xi; };
}
Symbol relativistic(double m) {
  if (!(m >= 0.0)) throw InvalidArgument("m: must be >= 0");
  return [m](double xi) { return std::hypot(xi, m); };
}
Symbol resolvent(const DispersionParams& p) {
  p.validate();
  return [m = p.m, tau = p.tau](double xi) { return 1.0 / (std::hypot(xi, m) + tau); };
}
Symbol poisson_semigroup(double t) {
  if (!(t > 0.0)) throw InvalidArgument("t: must be > 0");
  return [t](double xi) { return std::exp(-t * xi); };
}
}  // namespace symbols

RadialField apply_multiplier(const RadialField& u, const Symbol& symbol) {
  const auto uhat = forward_transform(u);
  const auto xi = u.grid().xi();
  std::vector<double> v(u.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double s = symbol(xi[k]);
    if (!std::isfinite(s)) {
      throw InvalidArgument("apply_multiplier: symbol is not finite at xi = " + std::to_string(xi[k]));
    }
    v[k] = s * uhat[k];
  }
  return inverse_transform(SpectralField(u.grid(), std::move(v)));
}

ComplexRadialField apply_multiplier(const ComplexRadialField& u, const ComplexSymbol& symbol) {
  const auto uhat = forward_transform(u);
  const auto xi = u.grid().xi();
  std::vector<std::complex<double>> v(u.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto s = symbol(xi[k]);
    if (!detail::is_finite(s)) {
      throw InvalidArgument("apply_multiplier: symbol is not finite at xi = " + std::to_string(xi[k]));
    }
    v[k] = s * uhat[k];
  }
  return inverse_transform(ComplexSpectralField(u.grid(), std::move(v)));
}

double poisson_kernel(double t, double r) {
  if (!(t > 0.0)) throw InvalidArgument("poisson_kernel: t must be > 0");
  const double q = t * t + r * r;
  return t / (kPi * kPi * q * q);
}

RadialField newton_potential(const RadialField& rho) {
  const auto& g = rho.grid();
  const std::size_t n = g.size();
  const auto r = g.r();
  const double dr = g.dr();

  // inner_j = int_0^{r_j} rho s^2 ds, outer_j = int_{r_j}^{r_max} rho s ds.
  std::vector<double> inner(n), outer(n);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double f = rho[j] * r[j] * r[j];
    inner[j] = acc + 0.5 * f;
    acc += f;
  }
  acc = 0.0;
  for (std::size_t j = n; j-- > 0;) {
    const double f = rho[j] * r[j];
    outer[j] = acc + 0.5 * f;
    acc += f;
  }

  std::vector<double> phi(n);
  for (std::size_t j = 0; j < n; ++j) {
    phi[j] = 4.0 * kPi * dr * (inner[j] / r[j] + outer[j]);
  }
  detail::add_monopole_corrections(g, rho.values(), phi);
  return RadialField(g, std::move(phi));
}

RadialField newton_potential_spectral(const RadialField& rho) {
  const double mass = quadrature_3d(rho);
  auto phi = apply_multiplier(rho, [](double xi) { return 4.0 * kPi / (xi * xi); });
  // The sine basis pins phi(r_max) = 0; the free-space potential is M/r_max there.
  const double shift = mass / rho.grid().r_max();
  return phi.map([shift](double v) { return v + shift; });
}

RadialField hartree_term(const RadialField& u) {
  const auto phi = newton_potential(u * u);
  return phi * u;
}

double hardy_kato_ratio(const RadialField& u) {
  const auto uhat = forward_transform(u);
  const auto xi = u.grid().xi();
  double t = 0.0;
  for (std::size_t k = 0; k < uhat.size(); ++k) t += xi[k] * xi[k] * xi[k] * uhat[k] * uhat[k];
  t *= 4.0 * kPi * u.grid().dxi();
  if (!(t > 0.0)) throw InvalidArgument("hardy_kato_ratio: zero field");
  const auto phi = newton_potential(u * u);
  const double sup = *std::max_element(phi.values().begin(), phi.values().end());
  return sup / (0.5 * kPi * t);
}

}  // namespace bosonstar
