#include "bosonstar/analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bosonstar/transform.hpp"

namespace bosonstar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kImages = 30;

// sum_{k=-K..K} (r - 2 k R)^-p
double image_sum(double r, double R, int p) {
  double s = 0.0;
  for (int k = -kImages; k <= kImages; ++k) s += std::pow(r - 2.0 * k * R, -p);
  return s;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

FitWindow default_far_field_window(const RadialGrid& grid) {
  return {0.4 * grid.r_max(), 0.8 * grid.r_max()};
}

DecayFitReport fit_far_field(const RadialField& u, const RadialField& f, FitWindow window,
                             FarFieldModel model) {
  require_same_grid(u.grid(), f.grid(), "fit_far_field");
  const auto& g = u.grid();
  const double R = g.r_max();
  const double slack = 1e-9 * R;
  if (!(window.lo < window.hi) || window.lo < 0.4 * R - slack || window.hi > 0.85 * R + slack) {
    throw InvalidArgument("fit_far_field: window (" + std::to_string(window.lo) + ", " +
                          std::to_string(window.hi) + ") outside [0.4, 0.85] r_max");
  }
  const auto du = centered_difference(u);
  const auto r = g.r();

  // Least squares y = c * phi for the two laws.
  double n4 = 0.0, d4 = 0.0, n5 = 0.0, d5 = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (r[j] < window.lo || r[j] > window.hi) continue;
    const double rj = r[j], r3 = rj * rj * rj, r4 = r3 * rj;
    double phi = 1.0, chi = 1.0;
    if (model == FarFieldModel::dirichlet_images) {
      const double s3 = image_sum(rj, R, 3);
      const double s4 = image_sum(rj, R, 4);
      phi = r3 * s3;
      chi = 0.25 * (3.0 * r4 * s4 + r3 * s3);
    }
    n4 += r4 * u[j] * phi;
    d4 += phi * phi;
    n5 += r4 * rj * du[j] * chi;
    d5 += chi * chi;
    ++count;
  }
  if (count < 2) throw InvalidArgument("fit_far_field: window contains fewer than two nodes");

  DecayFitReport rep;
  rep.model = model;
  rep.window = window;
  rep.c4_est = n4 / d4;
  rep.c5_est = n5 / d5;
  rep.c4_theory = quadrature_3d(f) / (kPi * kPi);
  rep.c5_theory = -4.0 * rep.c4_theory;
  rep.rel_err_4 = std::abs(rep.c4_est - rep.c4_theory) / std::abs(rep.c4_theory);
  rep.rel_err_5 = std::abs(rep.c5_est - rep.c5_theory) / std::abs(rep.c5_theory);
  return rep;
}

FourierFitReport fit_fourier_decay(const SpectralField& uhat, FitWindow window) {
  if (!(window.lo < window.hi)) throw InvalidArgument("fit_fourier_decay: empty window");
  const auto xi = uhat.grid().xi();
  std::vector<double> x, y;
  for (std::size_t k = 0; k < uhat.size(); ++k) {
    if (xi[k] < window.lo || xi[k] > window.hi) continue;
    if (!(uhat[k] > 0.0)) break;  // shrink the window at the first nonpositive sample
    x.push_back(xi[k]);
    y.push_back(std::log(uhat[k]));
  }
  if (x.size() < 3) {
    throw InvalidArgument("fit_fourier_decay: fewer than three positive samples in window");
  }
  FourierFitReport rep;
  rep.requested = window;
  rep.used = {x.front(), x.back()};
  rep.points = x.size();
  const auto all = fit_line(x, y);
  rep.sigma_est = -all.slope;
  rep.r_squared = all.r_squared;

  const std::size_t half = x.size() / 2;
  if (half >= 2 && x.size() - half >= 2) {
    const auto lo = fit_line({x.begin(), x.begin() + half}, {y.begin(), y.begin() + half});
    const auto hi = fit_line({x.begin() + half, x.end()}, {y.begin() + half, y.end()});
    rep.slope_low_half = lo.slope;
    rep.slope_high_half = hi.slope;
    const double ref = std::max(std::abs(lo.slope), std::abs(hi.slope));
    if (ref > 0.0 && std::abs(hi.slope - lo.slope) > 0.2 * ref) {
      rep.classification = DecayClass::super_exponential;
    }
  } else {
    rep.slope_low_half = rep.slope_high_half = all.slope;
  }
  return rep;
}

AbelReport abel_identity(int n, double a, double b) {
  if (n < 0 || n > 60) throw InvalidArgument("abel_identity: n must lie in [0, 60]");
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("abel_identity: a and b must be > 0");
  const long double A = a, B = b, N = n;

  // Neumaier summation; all terms are positive but span many decades.
  long double sum = 0.0L, comp = 0.0L, binom = 1.0L;
  for (int l = 0; l <= n; ++l) {
    const long double term = binom * std::pow(l + A, static_cast<long double>(l - 1)) *
                             std::pow(N - l + B, static_cast<long double>(n - l - 1));
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    binom = binom * static_cast<long double>(n - l) / static_cast<long double>(l + 1);
  }
  AbelReport rep;
  rep.lhs = sum + comp;
  rep.rhs = (A + B) / (A * B) * std::pow(N + A + B, N - 1.0L);
  rep.abs_err = std::fabs(rep.lhs - rep.rhs);
  rep.rel_err = rep.abs_err / std::fabs(rep.rhs);
  return rep;
}

std::string to_string(FarFieldModel m) {
  return m == FarFieldModel::dirichlet_images ? "dirichlet_images" : "free_space";
}

std::string to_string(DecayClass c) {
  return c == DecayClass::exponential ? "exponential" : "super_exponential";
}

}  // namespace bosonstar
