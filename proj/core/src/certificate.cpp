#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bosonstar/analysis.hpp"
#include "bosonstar/transform.hpp"

namespace bosonstar {
namespace {

constexpr double kPi = std::numbers::pi;

// Inverse transform with the xi = 0 trapezoid end restored for a profile
// behaving like pole / xi^2 near the origin.
std::vector<double> inverse_with_pole(const SpectralField& v, double pole) {
  const auto u = inverse_transform(v);
  const double end = std::sqrt(2.0 / kPi) * 0.5 * v.grid().dxi() * pole;
  std::vector<double> out(u.values().begin(), u.values().end());
  for (auto& x : out) x += end;
  return out;
}

// 4 pi dxi sum g xi^2 (+ the xi = 0 end for g ~ pole / xi^2).
double l1_norm(const SpectralField& g, double pole = 0.0) {
  return spectral_quadrature_3d(g) + 2.0 * kPi * g.grid().dxi() * pole;
}

std::string describe(const char* what, double xi, double excess) {
  std::ostringstream os;
  os << what << " fails at xi = " << xi << " by " << excess << " (relative)";
  return os.str();
}

}  // namespace

double pole_strength(const SpectralField& v) {
  const auto xi = v.grid().xi();
  auto a = [&](std::size_t k) { return xi[k] * xi[k] * v[k]; };
  return 1.5 * a(0) - 0.6 * a(1) + 0.1 * a(2);
}

SpectralField radial_convolution(const SpectralField& a, const SpectralField& b, double a_pole,
                                 double b_pole) {
  require_same_grid(a.grid(), b.grid(), "radial_convolution");
  const auto& g = a.grid();
  const auto ca = inverse_with_pole(a, a_pole);
  const auto cb = inverse_with_pole(b, b_pole);
  std::vector<double> prod(ca.size());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = ca[j] * cb[j];
  const double c = std::pow(2.0 * kPi, 1.5);
  return forward_transform(RadialField(g, std::move(prod))).map([c](double x) { return c * x; });
}

AnalyticityCertificate certify_analyticity(const SpectralField& uhat, const CertificateOptions& opts) {
  if (opts.checked_n < 0) throw InvalidArgument("checked_n: must be >= 0");
  const auto& g = uhat.grid();
  const auto xi = g.xi();
  const std::size_t n = g.size();
  const auto f = uhat.map([](double x) { return std::abs(x); });
  const double finf = *std::max_element(f.values().begin(), f.values().end());
  if (!(finf > 0.0)) throw InvalidArgument("certify_analyticity: f vanishes identically");

  AnalyticityCertificate cert;
  cert.alpha = 1.0 / (2.0 * kPi * kPi);
  cert.lambda = 1.0;

  // w = (uhat * uhat) / (2 pi^2 xi^2), W = |w|.
  const auto conv = radial_convolution(uhat, uhat);
  std::vector<double> wv(n);
  for (std::size_t k = 0; k < n; ++k) wv[k] = std::abs(cert.alpha * conv[k] / (xi[k] * xi[k]));
  const SpectralField W(g, std::move(wv));
  cert.pole = pole_strength(W);

  // Premise 1: (xi + lambda) f <= W * f.
  const auto wf = radial_convolution(W, f, cert.pole, 0.0);
  double scale1 = 0.0;
  for (std::size_t k = 0; k < n; ++k) scale1 = std::max(scale1, (xi[k] + cert.lambda) * f[k]);
  // Premise 2: xi^2 W <= alpha f * f.
  const auto ff = radial_convolution(f, f);
  double scale2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) scale2 = std::max(scale2, cert.alpha * ff[k]);

  const double band = opts.warning_band * g.xi_max();
  cert.premise_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double e1 = ((xi[k] + cert.lambda) * f[k] - wf[k]) / scale1;
    const double e2 = (xi[k] * xi[k] * W[k] - cert.alpha * ff[k]) / scale2;
    cert.premise_slack = std::min(cert.premise_slack, -e1);
    for (int which : {1, 2}) {
      const double e = which == 1 ? e1 : e2;
      if (e <= opts.premise_tol) continue;
      const char* what = which == 1 ? "premise (|xi|+1) f <= W*f" : "premise xi^2 W <= alpha f*f";
      if (xi[k] > band) {
        cert.warnings.push_back(describe(what, xi[k], e));
        continue;
      }
      throw PremiseViolation(describe(what, xi[k], e), which, xi[k], e);
    }
  }

  std::vector<double> xw(n);
  for (std::size_t k = 0; k < n; ++k) xw[k] = xi[k] * W[k];
  cert.norm_W1 = l1_norm(W, cert.pole);
  cert.norm_xiW1 = l1_norm(SpectralField(g, std::move(xw)));
  cert.norm_f1 = l1_norm(f);
  cert.norm_finf = finf;

  const double f1sq = cert.norm_f1 * cert.norm_f1;
  cert.c = std::sqrt(cert.norm_W1 / (cert.alpha * f1sq));
  cert.a = std::max({cert.norm_W1 / cert.lambda, cert.norm_xiW1 / (2.0 * cert.alpha * cert.c * f1sq),
                     cert.alpha * cert.c * cert.c * cert.c * f1sq});
  cert.b = cert.a / cert.c;
  cert.sigma = 1.0 / (2.0 * cert.b * std::numbers::e);

  for (const auto& row : moment_growth_table(uhat, cert, opts.checked_n)) {
    if (row.ratio > 1.0) {
      throw CertificateFailure("certify_analyticity: moment bound violated at n = " +
                                   std::to_string(row.n) + " (ratio " + std::to_string(row.ratio) + ")",
                               row.n);
    }
  }
  cert.checked_n = opts.checked_n;
  return cert;
}

std::vector<MomentRow> moment_growth_table(const SpectralField& uhat, const AnalyticityCertificate& cert,
                                           int n_max) {
  if (n_max < 0) throw InvalidArgument("moment_growth_table: n_max must be >= 0");
  const auto xi = uhat.grid().xi();
  double finf = 0.0;
  for (double v : uhat.values()) finf = std::max(finf, std::abs(v));
  std::vector<MomentRow> rows;
  for (int m = 0; m <= n_max; ++m) {
    MomentRow row;
    row.n = m;
    for (std::size_t k = 0; k < uhat.size(); ++k) {
      row.measured = std::max(row.measured, std::pow(xi[k], m) * std::abs(uhat[k]));
    }
    row.bound = cert.a * std::pow(cert.b, m) * std::pow(2.0 * m + 1.0, m - 1.0) * finf;
    row.ratio = row.measured / row.bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bosonstar
