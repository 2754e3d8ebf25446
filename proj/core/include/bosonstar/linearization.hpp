#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bosonstar/field.hpp"

namespace bosonstar {

enum class LinearizedKind { minus, plus };

/**
 * Dense realization of L- or L+ restricted to angular momentum ell.
 *
 * matrix = kinetic + I + diag(potential) + exchange acts on radial profiles
 * sampled at the grid nodes and is symmetric in the r^2-weighted product
 * <f, g> = 4 pi dr sum f g r^2. exchange is zero for L-.
 */
struct SectorOperator {
  LinearizedKind kind = LinearizedKind::minus;
  int ell = 0;
  RadialGrid grid;
  Eigen::MatrixXd matrix;
  Eigen::MatrixXd kinetic;    ///< sqrt(-Delta_ell)
  Eigen::VectorXd potential;  ///< V = -newton_potential(Q^2)
  Eigen::MatrixXd exchange;   ///< W_ell

  RadialField apply(const RadialField& g) const;
};

/**
 * sqrt(-Delta_ell) with a Dirichlet condition at r_max.
 *
 * ell = 0: the sine transform conjugating diag(xi), exact on the grid.
 * ell >= 1: the eigenfunctions j_ell(k_m r) with j_ell(k_m r_max) = 0,
 * sampled at the nodes, give K = Phi diag(k) Phi^-1; the result is then
 * projected onto the weighted-symmetric matrices.
 */
Eigen::MatrixXd kinetic_sector_matrix(const RadialGrid& grid, int ell);

/// Default residual bound on Q accepted by the assemblers.
inline constexpr double kDefaultAssemblyTolerance = 1e-6;

/// L- = sqrt(-Delta_0) + 1 + V. Throws InvalidArgument if the equation
/// residual of Q exceeds residual_tol.
SectorOperator assemble_Lminus(const RadialField& Q, double residual_tol = kDefaultAssemblyTolerance);

/// L+_ell = sqrt(-Delta_ell) + 1 + V + W_ell with
/// (W_ell g)(r) = -(8 pi/(2 ell+1)) Q(r) int r_<^ell/r_>^(ell+1) Q(s) g(s) s^2 ds.
SectorOperator assemble_Lplus(const RadialField& Q, int ell,
                              double residual_tol = kDefaultAssemblyTolerance);

/// ||A - A^T_w|| / ||A|| in the Frobenius norm of the symmetrized matrix.
double weighted_asymmetry(const Eigen::MatrixXd& a, const RadialGrid& grid);

/// Operator norm induced by the r^2-weighted product.
double weighted_operator_norm(const Eigen::MatrixXd& a, const RadialGrid& grid);

/// All eigenvalues, ascending, of a weighted-symmetric operator.
std::vector<double> sector_spectrum(const SectorOperator& op);

struct Eigenpair {
  double value;
  RadialField vector;  ///< unit length in the weighted product
};

/// Eigenpairs with |value| < threshold, ascending by value.
std::vector<Eigenpair> kernel_scan(const SectorOperator& op, double threshold);

/// |<a, b>| / (||a|| ||b||) in the weighted product.
double weighted_cosine(const RadialField& a, const RadialField& b);

struct KernelDecayReport {
  double l1_norm = 0.0;       ///< quadrature_3d(|v|)
  double fourier_sup = 0.0;   ///< max_k |vhat(xi_k)|
  bool l1_norm_finite = true;
  bool fourier_bounded = true;
};

/// Integrability diagnostics of a (near) kernel element.
KernelDecayReport kernel_element_decay(const RadialField& v);

}  // namespace bosonstar
