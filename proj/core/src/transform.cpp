#include "bosonstar/transform.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "sine_transform.hpp"

namespace bosonstar {
namespace {

constexpr double kPi = std::numbers::pi;

// Unnormalized DST-I applied to a * x; the caller supplies the prefactor.
std::vector<double> weighted_dst(std::span<const double> x, std::span<const double> a) {
  std::vector<double> tmp(x.size()), out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) tmp[j] = a[j] * x[j];
  detail::dst1(tmp, out);
  return out;
}

std::vector<double> forward_values(const RadialGrid& g, std::span<const double> u) {
  auto y = weighted_dst(u, g.r());
  const double c = 0.5 * std::sqrt(2.0 / kPi) * g.dr();
  const auto xi = g.xi();
  for (std::size_t k = 0; k < y.size(); ++k) y[k] *= c / xi[k];
  return y;
}

std::vector<double> inverse_values(const RadialGrid& g, std::span<const double> v) {
  auto y = weighted_dst(v, g.xi());
  const double c = 0.5 * std::sqrt(2.0 / kPi) * g.dxi();
  const auto r = g.r();
  for (std::size_t j = 0; j < y.size(); ++j) y[j] *= c / r[j];
  return y;
}

template <typename In, typename Out, typename Kernel>
Out complex_apply(const In& u, Kernel&& kernel) {
  std::vector<double> re(u.size()), im(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    re[j] = u[j].real();
    im[j] = u[j].imag();
  }
  const auto fr = kernel(u.grid(), re);
  const auto fi = kernel(u.grid(), im);
  std::vector<std::complex<double>> out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = {fr[j], fi[j]};
  return Out(u.grid(), std::move(out));
}

}  // namespace

SpectralField forward_transform(const RadialField& u) {
  return SpectralField(u.grid(), forward_values(u.grid(), u.values()));
}

RadialField inverse_transform(const SpectralField& v) {
  return RadialField(v.grid(), inverse_values(v.grid(), v.values()));
}

ComplexSpectralField forward_transform(const ComplexRadialField& u) {
  return complex_apply<ComplexRadialField, ComplexSpectralField>(u, forward_values);
}

ComplexRadialField inverse_transform(const ComplexSpectralField& v) {
  return complex_apply<ComplexSpectralField, ComplexRadialField>(v, inverse_values);
}

double quadrature_3d(const RadialField& u) {
  const auto w = u.grid().weights();
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += w[j] * u[j];
  if (!std::isfinite(s)) throw InvalidArgument("quadrature_3d: non-finite result");
  return s;
}

double spectral_quadrature_3d(const SpectralField& v) {
  const auto xi = v.grid().xi();
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * xi[k] * xi[k];
  return 4.0 * kPi * v.grid().dxi() * s;
}

double inner_product(const RadialField& a, const RadialField& b) {
  require_same_grid(a.grid(), b.grid(), "inner_product");
  const auto w = a.grid().weights();
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += w[j] * a[j] * b[j];
  return s;
}

double l2_norm(const RadialField& u) { return std::sqrt(inner_product(u, u)); }

double l2_norm(const ComplexRadialField& u) {
  const auto w = u.grid().weights();
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += w[j] * std::norm(u[j]);
  return std::sqrt(s);
}

double origin_value(const RadialField& u) {
  // Even polynomial in r through r = h, ..., 5h (degree 8), evaluated at 0;
  // grids with four nodes use degree 4 through the first three.
  if (u.size() < 5) return 1.5 * u[0] - 0.6 * u[1] + 0.1 * u[2];
  return (210.0 * u[0] - 120.0 * u[1] + 45.0 * u[2] - 10.0 * u[3] + u[4]) / 126.0;
}

RadialField radial_derivative(const RadialField& u) {
  const auto& g = u.grid();
  const std::size_t n = g.size();
  const auto r = g.r();
  const auto xi = g.xi();
  // r u = sum_k c_k sin(xi_k r) with c = DST-I(r u) / (n+1).
  auto c = weighted_dst(u.values(), r);
  const double scale = 1.0 / static_cast<double>(n + 1);
  for (std::size_t k = 0; k < n; ++k) c[k] *= scale * xi[k];
  std::vector<double> dv(n);
  detail::dct1_interior(c, dv);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = r[j] * u[j];
    out[j] = (0.5 * dv[j]) / r[j] - v / (r[j] * r[j]);
  }
  return RadialField(g, std::move(out));
}

RadialField centered_difference(const RadialField& u) {
  const std::size_t n = u.size();
  const double h = u.grid().dr();
  std::vector<double> d(n);
  d[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (u[j + 1] - u[j - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
  return RadialField(u.grid(), std::move(d));
}

}  // namespace bosonstar
