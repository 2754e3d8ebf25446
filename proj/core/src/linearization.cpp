#include "bosonstar/linearization.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bosonstar/operators.hpp"
#include "bosonstar/solver.hpp"
#include "bosonstar/transform.hpp"
#include "sine_transform.hpp"

namespace bosonstar {
namespace {

Eigen::VectorXd sqrt_weights(const RadialGrid& g) {
  const auto w = g.weights();
  Eigen::VectorXd s(static_cast<Eigen::Index>(w.size()));
  for (Eigen::Index j = 0; j < s.size(); ++j) s(j) = std::sqrt(w[j]);
  return s;
}

// D^{1/2} A D^{-1/2}, symmetric whenever A is weighted-symmetric.
Eigen::MatrixXd to_symmetric_frame(const Eigen::MatrixXd& a, const Eigen::VectorXd& s) {
  return s.asDiagonal() * a * s.cwiseInverse().asDiagonal();
}

Eigen::MatrixXd from_symmetric_frame(const Eigen::MatrixXd& b, const Eigen::VectorXd& s) {
  return s.cwiseInverse().asDiagonal() * b * s.asDiagonal();
}

Eigen::MatrixXd kinetic_l0(const RadialGrid& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  const auto r = g.r();
  const auto xi = g.xi();
  // B = S diag(xi) S with S the orthonormal DST-I; column j from two transforms.
  Eigen::MatrixXd b(n, n);
  std::vector<double> e(n, 0.0), t(n), col(n);
  const double scale = 1.0 / (2.0 * static_cast<double>(n + 1));
  for (Eigen::Index j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    detail::dst1(e, t);
    for (Eigen::Index k = 0; k < n; ++k) t[k] *= xi[k];
    detail::dst1(t, col);
    for (Eigen::Index i = 0; i < n; ++i) b(i, j) = scale * col[i];
  }
  b = 0.5 * (b + b.transpose()).eval();
  Eigen::VectorXd rv(n);
  for (Eigen::Index j = 0; j < n; ++j) rv(j) = r[j];
  return rv.cwiseInverse().asDiagonal() * b * rv.asDiagonal();
}

Eigen::MatrixXd kinetic_bessel(const RadialGrid& g, int ell) {
  const auto n = static_cast<Eigen::Index>(g.size());
  const auto r = g.r();
  const double nu = ell + 0.5;
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(n));
  boost::math::cyl_bessel_j_zero(nu, 1, static_cast<unsigned>(n), std::back_inserter(zeros));
  // Modes above the grid Nyquist frequency alias onto lower ones; for
  // ell >= 3 fewer than n modes are resolvable.
  const double nyquist = std::numbers::pi * static_cast<double>(n + 1);
  const auto m_count = static_cast<Eigen::Index>(
      std::lower_bound(zeros.begin(), zeros.end(), nyquist) - zeros.begin());

  // In the frame s = sqrt(weights): B = Psi diag(k) Psi^+ with Psi = diag(s) Phi.
  // Psi is square and invertible when every mode is resolvable.
  const Eigen::VectorXd s = sqrt_weights(g);
  Eigen::VectorXd k(m_count);
  Eigen::MatrixXd psi(n, m_count);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    k(m) = zeros[static_cast<std::size_t>(m)] / g.r_max();
    for (Eigen::Index j = 0; j < n; ++j) {
      psi(j, m) = s(j) * boost::math::sph_bessel(static_cast<unsigned>(ell), k(m) * r[j]);
    }
  }
  const Eigen::MatrixXd pinv =
      psi.colPivHouseholderQr().solve(Eigen::MatrixXd::Identity(n, n));
  Eigen::MatrixXd b = psi * k.asDiagonal() * pinv;
  if (!b.allFinite()) throw NumericError("kinetic_sector_matrix: Bessel basis is singular");
  b = 0.5 * (b + b.transpose()).eval();
  return from_symmetric_frame(b, s);
}

void require_converged(const RadialField& Q, double tol, const char* where) {
  const double res = equation_residual(Q);
  if (!(res <= tol)) {
    throw InvalidArgument(std::string(where) + ": Q has equation residual " + std::to_string(res) +
                          " above " + std::to_string(tol));
  }
}

Eigen::VectorXd to_vector(const RadialField& u) {
  return Eigen::Map<const Eigen::VectorXd>(u.values().data(), static_cast<Eigen::Index>(u.size()));
}

RadialField to_field(const RadialGrid& g, const Eigen::VectorXd& v) {
  return RadialField(g, std::vector<double>(v.data(), v.data() + v.size()));
}

SectorOperator assemble(const RadialField& Q, int ell, LinearizedKind kind) {
  const auto& g = Q.grid();
  const auto n = static_cast<Eigen::Index>(g.size());
  SectorOperator op{kind, ell, g, {}, kinetic_sector_matrix(g, ell), {}, Eigen::MatrixXd::Zero(n, n)};
  op.potential = -to_vector(newton_potential(Q * Q));
  if (kind == LinearizedKind::plus) {
    const Eigen::VectorXd q = to_vector(Q);
    op.exchange = -2.0 * q.asDiagonal() * coulomb_sector_matrix(g, ell) * q.asDiagonal();
  }
  op.matrix = op.kinetic + op.exchange;
  op.matrix.diagonal().array() += 1.0 + op.potential.array();
  return op;
}

}  // namespace

RadialField SectorOperator::apply(const RadialField& g) const {
  require_same_grid(grid, g.grid(), "SectorOperator::apply");
  return to_field(grid, matrix * to_vector(g));
}

Eigen::MatrixXd kinetic_sector_matrix(const RadialGrid& grid, int ell) {
  if (ell < 0) throw InvalidArgument("ell: must be >= 0, got " + std::to_string(ell));
  return ell == 0 ? kinetic_l0(grid) : kinetic_bessel(grid, ell);
}

SectorOperator assemble_Lminus(const RadialField& Q, double residual_tol) {
  require_converged(Q, residual_tol, "assemble_Lminus");
  return assemble(Q, 0, LinearizedKind::minus);
}

SectorOperator assemble_Lplus(const RadialField& Q, int ell, double residual_tol) {
  if (ell < 0) throw InvalidArgument("ell: must be >= 0, got " + std::to_string(ell));
  require_converged(Q, residual_tol, "assemble_Lplus");
  return assemble(Q, ell, LinearizedKind::plus);
}

double weighted_asymmetry(const Eigen::MatrixXd& a, const RadialGrid& grid) {
  const Eigen::VectorXd s = sqrt_weights(grid);
  const Eigen::MatrixXd b = to_symmetric_frame(a, s);
  return (b - b.transpose()).norm() / b.norm();
}

double weighted_operator_norm(const Eigen::MatrixXd& a, const RadialGrid& grid) {
  const Eigen::VectorXd s = sqrt_weights(grid);
  const Eigen::MatrixXd b = to_symmetric_frame(a, s);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(b);
  return svd.singularValues()(0);
}

namespace {
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> symmetric_eigensolve(const SectorOperator& op,
                                                                    bool vectors) {
  const Eigen::VectorXd s = sqrt_weights(op.grid);
  Eigen::MatrixXd b = to_symmetric_frame(op.matrix, s);
  b = 0.5 * (b + b.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      b, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("sector eigensolve did not converge");
  return es;
}
}  // namespace

std::vector<double> sector_spectrum(const SectorOperator& op) {
  const auto es = symmetric_eigensolve(op, false);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<Eigenpair> kernel_scan(const SectorOperator& op, double threshold) {
  if (!(threshold > 0.0)) throw InvalidArgument("kernel_scan: threshold must be > 0");
  const auto es = symmetric_eigensolve(op, true);
  const Eigen::VectorXd s = sqrt_weights(op.grid);
  std::vector<Eigenpair> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam) >= threshold) continue;
    Eigen::VectorXd v = s.cwiseInverse().asDiagonal() * es.eigenvectors().col(i);
    // Fix the sign so the largest-magnitude component is positive.
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
    out.push_back({lam, to_field(op.grid, v)});
  }
  return out;
}

double weighted_cosine(const RadialField& a, const RadialField& b) {
  const double na = l2_norm(a), nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) throw InvalidArgument("weighted_cosine: zero field");
  return std::abs(inner_product(a, b)) / (na * nb);
}

KernelDecayReport kernel_element_decay(const RadialField& v) {
  KernelDecayReport rep;
  rep.l1_norm = quadrature_3d(v.map([](double x) { return std::abs(x); }));
  const auto vhat = forward_transform(v);
  for (double x : vhat.values()) rep.fourier_sup = std::max(rep.fourier_sup, std::abs(x));
  rep.l1_norm_finite = std::isfinite(rep.l1_norm);
  rep.fourier_bounded = std::isfinite(rep.fourier_sup);
  return rep;
}

}  // namespace bosonstar
