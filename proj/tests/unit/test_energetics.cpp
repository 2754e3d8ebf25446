#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include <bosonstar/energetics.hpp>
#include <bosonstar/operators.hpp>
#include <bosonstar/solver.hpp>
#include <bosonstar/transform.hpp>

#include "oracles/generators.hpp"
#include "oracles/oracles.hpp"
#include "support/ground_state.hpp"

using namespace bosonstar;

namespace {

constexpr std::uint64_t kSeed = 4242;

RadialField gaussian(const RadialGrid& g) {
  return RadialField::sample(g, [](double r) { return std::exp(-0.5 * r * r); });
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// D as the O(n^2) double sum 16 pi^2 dr^2 sum_ij rho_i rho_j r_i^2 r_j^2 / max(r_i, r_j).
double direct_interaction(const RadialField& u) {
  const auto& g = u.grid();
  const auto r = g.r();
  long double s = 0.0L;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double a = u[i] * u[i] * r[i] * r[i];
    for (std::size_t j = 0; j < g.size(); ++j) {
      s += a * u[j] * u[j] * r[j] * r[j] / std::max(r[i], r[j]);
    }
  }
  return static_cast<double>(16.0 * oracle::pi * oracle::pi * g.dr() * g.dr() * s);
}

// Partially converged profile: the residual stays near 1e-3. The grid is
// fine enough that Q(2r) is resolved to the cubic's h^4 error.
const GroundStateReport& rough_ground_state() {
  static const GroundStateReport rep = [] {
    SolverConfig cfg;
    cfg.grid = RadialGrid(4096, 100.0);
    cfg.tol_residual = 1e-3;
    return solve_ground_state(cfg);
  }();
  return rep;
}

}  // namespace

TEST(EnergyBreakdown, GaussianClosedForms) {
  const RadialGrid g(4096, 80.0);
  const auto e = energy_breakdown(gaussian(g));
  EXPECT_LT(rel(e.T, oracle::gaussian::kinetic), 1e-6);
  EXPECT_LT(rel(e.M, oracle::gaussian::mass), 1e-6);
  EXPECT_LT(rel(e.D, oracle::gaussian::interaction), 1e-6);
  ASSERT_TRUE(e.I.has_value());
  EXPECT_LT(rel(*e.I, oracle::gaussian::functional), 1e-6);
  EXPECT_NEAR(e.T, 6.28319, 1e-5);
  EXPECT_NEAR(e.M, 5.56833, 1e-5);
  EXPECT_NEAR(e.D, 24.7394, 1e-4);
}

TEST(EnergyBreakdown, ZeroField) {
  const auto z = RadialField::zeros(RadialGrid(64, 8.0));
  const auto e = energy_breakdown(z);
  EXPECT_EQ(e.T, 0.0);
  EXPECT_EQ(e.M, 0.0);
  EXPECT_EQ(e.D, 0.0);
  EXPECT_FALSE(e.I.has_value());
  EXPECT_THROW(weinstein_functional(z), InvalidArgument);
}

TEST(EnergyBreakdown, InteractionMatchesDoubleSum) {
  // The double sum carries an O(dr^2) error from the Coulomb kink.
  const RadialGrid g(1024, 20.0);
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto rng = gen::rng_for(kSeed, i);
    const auto u = gen::smooth_field(g, rng);
    const double d = energy_breakdown(u).D;
    EXPECT_LT(rel(direct_interaction(u), d), 1e-3) << "case " << i;
  }
}

TEST(Weinstein, ScaleInvariantUnderAmplitudeAndDilation) {
  // Dilating the grid together with the profile keeps the samples, so the
  // discrete functional is invariant to round-off.
  const RadialGrid g(1024, 40.0);
  const auto u = gaussian(g);
  const double i0 = weinstein_functional(u);
  for (double mu : {2.0, 5.0}) {
    for (double lambda : {0.5, 3.0}) {
      const RadialGrid gl(1024, 40.0 * lambda);
      const RadialField v(gl, std::vector<double>(u.values().begin(), u.values().end()));
      EXPECT_LT(rel(weinstein_functional(mu * v), i0), 1e-10) << "mu " << mu << ", lambda " << lambda;
    }
  }
}

TEST(Weinstein, DilatedGaussianOnFixedGrid) {
  const RadialGrid g(4096, 80.0);
  for (double lambda : {0.5, 3.0}) {
    const auto u = RadialField::sample(g, [lambda](double r) { return 2.0 * std::exp(-0.5 * r * r / (lambda * lambda)); });
    EXPECT_LT(rel(weinstein_functional(u), std::sqrt(2.0)), 1e-5) << "lambda " << lambda;
  }
}

TEST(EnergyProperty, Homogeneity) {
  const RadialGrid g(512, 30.0);
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = gen::rng_for(kSeed + 1, i);
    const auto u = gen::smooth_field(g, rng);
    std::uniform_real_distribution<double> cdist(-4.0, 4.0);
    const double c = cdist(rng);
    const auto a = energy_breakdown(u);
    const auto b = energy_breakdown(c * u);
    EXPECT_LT(rel(b.T, c * c * a.T), 1e-13) << "case " << i;
    EXPECT_LT(rel(b.M, c * c * a.M), 1e-13) << "case " << i;
    EXPECT_LT(rel(b.D, c * c * c * c * a.D), 1e-13) << "case " << i;
  }
}

TEST(EnergyProperty, InteractionPositiveAndKatoBound) {
  const RadialGrid g(1024, 40.0);
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = gen::rng_for(kSeed + 2, i);
    const auto u = gen::smooth_field(g, rng);
    const auto e = energy_breakdown(u);
    ASSERT_GT(e.M, 0.0);
    EXPECT_GT(e.D, 0.0) << "case " << i;
    ASSERT_TRUE(e.I.has_value());
    EXPECT_GE(*e.I, kato_lower_bound() - 1e-3) << "case " << i;
  }
}

TEST(KatoLowerBound, Value) {
  EXPECT_NEAR(kato_lower_bound(), 0.63662, 1e-5);
  EXPECT_NEAR(2.0 * kato_lower_bound(), 4.0 / oracle::pi, 1e-15);
  EXPECT_NEAR(2.0 * kato_lower_bound(), 1.27324, 1e-5);
  EXPECT_GT(oracle::gaussian::functional, kato_lower_bound());
}

TEST(RescaleParams, Validation) {
  EXPECT_THROW((RescaleParams{0.0, 1.0, 0.0}.validate()), InvalidArgument);
  EXPECT_THROW((RescaleParams{1.0, -1.0, 0.0}.validate()), InvalidArgument);
  EXPECT_NO_THROW((RescaleParams{2.0, 0.5, -3.0}.validate()));
}

TEST(Rescale, CanonicalParametersAreIdentity) {
  const auto& q = rough_ground_state().Q;
  const auto v = rescale_to_canonical(q, {1.0, 1.0, 0.0});
  for (std::size_t j = 0; j < q.size(); ++j) EXPECT_EQ(v[j], q[j]);
}

TEST(Rescale, ResidualAndMassTransform) {
  // u = kappa^{-1/2} lambda^{3/2} Q(lambda r) solves the (kappa, lambda)
  // equation. For lambda = 2, Q(2 r_j) is the node 2j+1 of Q, so u is exact
  // on the grid and only the inverse map interpolates.
  const auto& rep = rough_ground_state();
  const auto& q = rep.Q;
  const auto& g = q.grid();
  const double rho_q = equation_residual(q);
  ASSERT_GT(rho_q, 1e-5);
  for (double kappa : {0.5, 1.0, 3.0}) {
    for (int lambda : {1, 2}) {
      std::vector<double> raw(g.size(), 0.0);
      for (std::size_t j = 0; j < g.size(); ++j) {
        const std::size_t src = lambda * (j + 1) - 1;
        if (src < g.size()) raw[j] = std::pow(kappa, -0.5) * std::pow(lambda, 1.5) * q[src];
      }
      const RadialField u(g, std::move(raw));
      const double rho = scaled_equation_residual(u, kappa, lambda);
      const auto v = rescale_to_canonical(u, {kappa, static_cast<double>(lambda), 0.0});
      EXPECT_LE(equation_residual(v), 2.0 * rho) << "kappa " << kappa << ", lambda " << lambda;
      EXPECT_LT(rel(quadrature_3d(v * v), kappa * quadrature_3d(u * u)), 1e-6)
          << "kappa " << kappa << ", lambda " << lambda;
    }
  }
}

TEST(Rescale, ConsistentWithConvergedProfile) {
  // v(r) = kappa^{1/2} lambda^{-3/2} u(r/lambda) of the scaled solution
  // reproduces Q to interpolation accuracy.
  const auto& q = support::ground_state().Q;
  const auto& g = q.grid();
  std::vector<double> raw(g.size(), 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t src = 2 * (j + 1) - 1;
    if (src < g.size()) raw[j] = std::pow(2.0, -0.5) * std::pow(2.0, 1.5) * q[src];
  }
  const auto v = rescale_to_canonical(RadialField(g, std::move(raw)), {2.0, 2.0, 0.0});
  EXPECT_LT(l2_norm(v - q) / l2_norm(q), 1e-4);
}

TEST(Rescale, LargeLambdaIsResolutionError) {
  const RadialGrid g(256, 10.0);
  EXPECT_THROW(rescale_to_canonical(gaussian(g), {1.0, 1000.0, 0.0}), ResolutionError);
  EXPECT_THROW(rescale_to_canonical(gaussian(g), {-1.0, 1.0, 0.0}), InvalidArgument);
}

TEST(Virial, PointwiseFieldMatchesClosedForm) {
  // For u = exp(-r^2/2): -4 pi int_r^inf exp(-s^2) s ds = -2 pi exp(-r^2).
  const RadialGrid g(2048, 40.0);
  const auto rep = virial_report(gaussian(g), 0.0);
  const auto exact = RadialField::sample(g, [](double r) { return -2.0 * oracle::pi * std::exp(-r * r); });
  EXPECT_LT(l2_norm(rep.newton_lhs - exact) / l2_norm(exact), 1e-6);
  EXPECT_LT(l2_norm(rep.newton_lhs_fd - exact) / l2_norm(exact), 1e-3);
}

TEST(Virial, PointwiseNonpositiveOnRandomFields) {
  const RadialGrid g(1024, 40.0);
  for (std::uint64_t i = 0; i < 30; ++i) {
    auto rng = gen::rng_for(kSeed + 3, i);
    const auto rep = virial_report(gen::smooth_field(g, rng), 0.5);
    const double scale = std::abs(rep.newton_lhs[0]);
    for (double v : rep.newton_lhs.values()) ASSERT_LE(v, 1e-8 * scale) << "case " << i;
  }
}

TEST(Virial, GroundStateIdentity) {
  const auto& rep = support::ground_state();
  const auto v = virial_report(rep.Q, -1.0);
  EXPECT_LT(rel(v.vrv_integral, -rep.N_star), 1e-4);
  EXPECT_LT(std::abs(v.lhs) / rep.N_star, 1e-4);
  EXPECT_EQ(v.rhs, 0.0);
  for (double x : v.newton_lhs.values()) EXPECT_LE(x, 0.0);
}

TEST(Virial, ZeroFieldHasZeroLhs) {
  const auto v = virial_report(RadialField::zeros(RadialGrid(64, 8.0)), 0.3);
  EXPECT_EQ(v.lhs, 0.0);
  EXPECT_EQ(v.mass, 0.0);
}
