#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bosonstar/errors.hpp"
#include "bosonstar/field.hpp"

namespace bosonstar {

// ---------------------------------------------------------------------------
// Far field

/// How the box truncation enters the far-field model.
enum class FarFieldModel {
  /// r u ~ c sum_k (r - 2 k r_max)^-3: the odd images generated by the
  /// Dirichlet condition at r_max. Appropriate for resolvent outputs
  /// computed on the grid.
  dirichlet_images,
  /// r^4 u ~ c: the free-space law, for fields given in closed form.
  free_space,
};

struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

struct DecayFitReport {
  double c4_est = 0.0;       ///< coefficient of r^-4 in u
  double c4_theory = 0.0;    ///< int f / pi^2
  double c5_est = 0.0;       ///< coefficient of r^-5 in u'
  double c5_theory = 0.0;    ///< -4 int f / pi^2
  FitWindow window;
  double rel_err_4 = 0.0;
  double rel_err_5 = 0.0;
  FarFieldModel model = FarFieldModel::dirichlet_images;
};

/// Default real-space window [0.4, 0.8] r_max.
FitWindow default_far_field_window(const RadialGrid& grid);

/**
 * Least-squares far-field coefficients of u = (sqrt(-Delta)+1)^-1 f.
 * u' is taken by centered differences. The window must lie in
 * [0.4, 0.85] r_max; otherwise InvalidArgument.
 */
DecayFitReport fit_far_field(const RadialField& u, const RadialField& f, FitWindow window,
                             FarFieldModel model = FarFieldModel::dirichlet_images);

// ---------------------------------------------------------------------------
// Fourier decay

enum class DecayClass { exponential, super_exponential };

struct FourierFitReport {
  double sigma_est = 0.0;   ///< minus the slope of log|uhat| against xi
  double r_squared = 0.0;
  FitWindow requested;
  FitWindow used;           ///< after dropping nonpositive samples
  std::size_t points = 0;
  double slope_low_half = 0.0;
  double slope_high_half = 0.0;
  DecayClass classification = DecayClass::exponential;
};

inline constexpr FitWindow kDefaultFourierWindow{5.0, 15.0};

/// Linear fit of log uhat over the window. The window is cut at the first
/// nonpositive sample; fewer than three usable samples throws InvalidArgument.
/// The fit is super-exponential when the slopes of the two window halves
/// differ by more than 20%.
FourierFitReport fit_fourier_decay(const SpectralField& uhat, FitWindow window = kDefaultFourierWindow);

// ---------------------------------------------------------------------------
// Abel identity

struct AbelReport {
  long double lhs = 0.0L;
  long double rhs = 0.0L;
  long double abs_err = 0.0L;
  long double rel_err = 0.0L;
};

/// sum_l C(n,l) (l+a)^(l-1) (n-l+b)^(n-l-1) against (a+b)/(ab) (n+a+b)^(n-1),
/// in long double with compensated summation. Requires 0 <= n <= 60, a, b > 0.
AbelReport abel_identity(int n, double a, double b);

// ---------------------------------------------------------------------------
// Analyticity certificate

/// (A * B)(xi) for radial profiles on the frequency grid, via the transform
/// pair. a_pole and b_pole are lim xi^2 A and lim xi^2 B at xi -> 0; they
/// restore the xi = 0 end of the inverse sine sum for profiles ~ 1/xi^2.
SpectralField radial_convolution(const SpectralField& a, const SpectralField& b,
                                 double a_pole = 0.0, double b_pole = 0.0);

/// lim_{xi -> 0} xi^2 v from the even quadratic through the first three nodes.
double pole_strength(const SpectralField& v);

struct AnalyticityCertificate {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double sigma = 0.0;      ///< 1 / (2 b e)
  double alpha = 0.0;      ///< 1 / (2 pi^2)
  double lambda = 1.0;
  double norm_W1 = 0.0;    ///< ||W||_1
  double norm_xiW1 = 0.0;  ///< || |xi| W ||_1
  double norm_f1 = 0.0;    ///< ||f||_1
  double norm_finf = 0.0;  ///< ||f||_inf
  double pole = 0.0;       ///< lim xi^2 W
  double premise_slack = 0.0;   ///< min_k (W*f - (xi+1) f) / max (xi+1) f
  int checked_n = 0;
  std::vector<std::string> warnings;
};

/// The grid premise (|xi|+lambda) f <= W*f or xi^2 W <= alpha f*f fails.
class PremiseViolation : public Error {
 public:
  PremiseViolation(const std::string& what, int inequality, double xi, double excess)
      : Error(what), inequality_(inequality), xi_(xi), excess_(excess) {}
  int inequality() const noexcept { return inequality_; }
  double xi() const noexcept { return xi_; }
  double excess() const noexcept { return excess_; }

 private:
  int inequality_;
  double xi_;
  double excess_;
};

/// The moment bound failed for some n although the premise held.
class CertificateFailure : public Error {
 public:
  CertificateFailure(const std::string& what, int n) : Error(what), n_(n) {}
  int n() const noexcept { return n_; }

 private:
  int n_;
};

struct CertificateOptions {
  int checked_n = 12;
  double premise_tol = 1e-7;   ///< relative to max (xi+lambda) f
  double warning_band = 0.95;  ///< premise failures above this fraction of xi_max only warn
};

/**
 * Constants (a, b, sigma) bounding || |xi|^n f ||_inf <= a b^n (2n+1)^(n-1) ||f||_inf
 * for f = |uhat|, with w = (uhat * uhat) / (2 pi^2 xi^2) and W = |w|.
 * The premises are checked first (PremiseViolation), then the moment bound
 * for n = 0..checked_n (CertificateFailure). f == 0 throws InvalidArgument.
 */
AnalyticityCertificate certify_analyticity(const SpectralField& uhat,
                                           const CertificateOptions& opts = {});

struct MomentRow {
  int n = 0;
  double measured = 0.0;  ///< max_k xi_k^n f_k
  double bound = 0.0;     ///< a b^n (2n+1)^(n-1) ||f||_inf
  double ratio = 0.0;
};

std::vector<MomentRow> moment_growth_table(const SpectralField& uhat,
                                           const AnalyticityCertificate& cert, int n_max);

std::string to_string(FarFieldModel m);
std::string to_string(DecayClass c);

}  // namespace bosonstar
