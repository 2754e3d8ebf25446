#include "bosonstar/energetics.hpp"

#include <cmath>

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <numbers>
#include <vector>

#include "bosonstar/operators.hpp"
#include "bosonstar/transform.hpp"

namespace bosonstar {
namespace {
constexpr double kPi = std::numbers::pi;

void limit_slopes(const std::vector<double>& x, const std::vector<double>& y, std::vector<double>& d) {
  const std::size_t m = x.size();
  std::vector<double> secant(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) secant[k] = (y[k + 1] - y[k]) / (x[k + 1] - x[k]);
  for (std::size_t k = 0; k < m; ++k) {
    const double left = k > 0 ? secant[k - 1] : secant[0];
    const double right = k + 1 < m ? secant[k] : secant[m - 2];
    if (left * right <= 0.0 || d[k] * right < 0.0) d[k] = 0.0;
  }
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (secant[k] == 0.0) {
      d[k] = d[k + 1] = 0.0;
      continue;
    }
    const double a = d[k] / secant[k], b = d[k + 1] / secant[k];
    const double h = a * a + b * b;
    if (h > 9.0) {
      const double t = 3.0 / std::sqrt(h);
      d[k] = t * a * secant[k];
      d[k + 1] = t * b * secant[k];
    }
  }
}

}  // namespace

EnergyBreakdown energy_breakdown(const RadialField& u) {
  const auto& g = u.grid();
  const auto uhat = forward_transform(u);
  const auto xi = g.xi();
  double t = 0.0;
  for (std::size_t k = 0; k < uhat.size(); ++k) t += xi[k] * xi[k] * xi[k] * uhat[k] * uhat[k];

  EnergyBreakdown e;
  e.T = 4.0 * kPi * g.dxi() * t;
  const auto rho = u * u;
  e.M = quadrature_3d(rho);
  e.D = inner_product(rho, newton_potential(rho));
  if (e.D > 0.0) e.I = e.T * e.M / e.D;
  return e;
}

double weinstein_functional(const RadialField& u) {
  const auto e = energy_breakdown(u);
  if (!e.I) throw InvalidArgument("weinstein_functional: undefined for the zero field");
  return *e.I;
}

void RescaleParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw InvalidArgument("kappa: must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda: must be > 0");
  if (!std::isfinite(E)) throw InvalidArgument("E: must be finite");
}

double scaled_equation_residual(const RadialField& u, double kappa, double lambda) {
  const double norm = l2_norm(u);
  if (norm == 0.0) throw InvalidArgument("scaled_equation_residual: zero field");
  auto res = apply_multiplier(u, symbols::half_laplacian());
  res -= kappa * hartree_term(u);
  res += lambda * u;
  return l2_norm(res) / norm;
}

RadialField rescale_to_canonical(const RadialField& u, const RescaleParams& p) {
  p.validate();
  const auto& g = u.grid();
  const std::size_t n = g.size();
  const auto r = g.r();

  std::size_t inside_first_cell = 0;
  for (double rj : r) inside_first_cell += (rj / p.lambda < r[0]) ? 1 : 0;
  if (2 * inside_first_cell > n) {
    throw ResolutionError("rescale_to_canonical: lambda = " + std::to_string(p.lambda) +
                          " maps most nodes inside the first cell");
  }
  if (p.kappa == 1.0 && p.lambda == 1.0) return u;

  // Knots: mirrored first node, extrapolated origin, the samples, and the
  // Dirichlet zero at r_max. Slopes are the spectral derivative, limited
  // (Fritsch-Carlson) so that the cubic is monotone on every monotone run.
  const auto du = radial_derivative(u);
  std::vector<double> x, y, d;
  x.reserve(n + 3);
  y.reserve(n + 3);
  d.reserve(n + 3);
  x.push_back(-r[0]);
  y.push_back(u[0]);
  d.push_back(-du[0]);
  x.push_back(0.0);
  y.push_back(origin_value(u));
  d.push_back(0.0);
  for (std::size_t j = 0; j < n; ++j) {
    x.push_back(r[j]);
    y.push_back(u[j]);
    d.push_back(du[j]);
  }
  x.push_back(g.r_max());
  y.push_back(0.0);
  d.push_back(-u[n - 1] / g.dr());
  limit_slopes(x, y, d);
  boost::math::interpolators::cubic_hermite<std::vector<double>> spline(std::move(x), std::move(y),
                                                                         std::move(d));

  const double amp = std::sqrt(p.kappa) / std::pow(p.lambda, 1.5);
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = r[j] / p.lambda;
    v[j] = s >= g.r_max() ? 0.0 : amp * spline(s);
  }
  return RadialField(g, std::move(v));
}

VirialReport virial_report(const RadialField& u, double E) {
  const auto& g = u.grid();
  const std::size_t n = g.size();
  const auto r = g.r();
  const double dr = g.dr();

  // int_{r_j}^{r_max} u^2 s ds: trapezoid suffix sum plus the leading
  // Euler-Maclaurin endpoint term dr^2/12 h'(r_j).
  std::vector<double> h(n);
  for (std::size_t j = 0; j < n; ++j) h[j] = u[j] * u[j] * r[j];
  const auto dh = centered_difference(RadialField(g, h));
  std::vector<double> tail(n);
  double acc = 0.0;
  for (std::size_t j = n; j-- > 0;) {
    tail[j] = -4.0 * kPi * (dr * (acc + 0.5 * h[j]) + dr * dr / 12.0 * dh[j]);
    acc += h[j];
  }
  RadialField closed(g, std::move(tail));

  const auto rho = u * u;
  const auto v = newton_potential(rho) * -1.0;
  const auto dv = centered_difference(v);
  std::vector<double> fd(n);
  for (std::size_t j = 0; j < n; ++j) fd[j] = v[j] + r[j] * dv[j];

  const double mass = quadrature_3d(rho);
  const double vrv = inner_product(closed, rho);
  return VirialReport{vrv - E * mass, 0.0, vrv, mass, std::move(closed), RadialField(g, std::move(fd))};
}

double kato_lower_bound() { return 2.0 / kPi; }

}  // namespace bosonstar
