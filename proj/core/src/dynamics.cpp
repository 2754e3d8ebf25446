#include "bosonstar/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "bosonstar/operators.hpp"
#include "bosonstar/transform.hpp"

namespace bosonstar {
namespace {

using cplx = std::complex<double>;

RadialField density(const ComplexRadialField& psi) {
  return psi.map([](cplx z) { return std::norm(z); });
}

// psi * exp(i h Phi(|psi|^2)); |psi| and hence Phi are unchanged by the step.
std::optional<ComplexRadialField> phase_step(const ComplexRadialField& psi, double h) {
  const auto phi = newton_potential(density(psi));
  std::vector<cplx> out(psi.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = psi[j] * std::polar(1.0, h * phi[j]);
    if (!detail::is_finite(out[j])) return std::nullopt;
  }
  return ComplexRadialField(psi.grid(), std::move(out));
}

}  // namespace

ConservedQuantities mass_and_energy(const WaveField& w) {
  const auto& g = w.psi.grid();
  const auto psihat = forward_transform(w.psi);
  const auto xi = g.xi();
  double kin = 0.0;
  for (std::size_t k = 0; k < psihat.size(); ++k) {
    kin += xi[k] * xi[k] * std::hypot(xi[k], w.m) * std::norm(psihat[k]);
  }
  ConservedQuantities q;
  const auto rho = density(w.psi);
  q.mass = quadrature_3d(rho);
  q.kinetic = 4.0 * std::numbers::pi * g.dxi() * kin;
  q.potential = -0.5 * inner_product(rho, newton_potential(rho));
  q.total = q.kinetic + q.potential;
  return q;
}

EvolveResult evolve(const WaveField& psi0, double dt, int steps, const EvolveOptions& opts) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt: must be > 0");
  if (steps < 0) throw InvalidArgument("steps: must be >= 0");
  if (!(psi0.m >= 0.0)) throw InvalidArgument("m: must be >= 0");
  if (opts.record_every < 0) throw InvalidArgument("record_every: must be >= 0");

  const double m = psi0.m;
  const ComplexSymbol kinetic = [dt, m](double xi) { return std::polar(1.0, -dt * std::hypot(xi, m)); };

  EvolveResult res{psi0, 0, false, {}, {}};
  auto record = [&](const WaveField& w) {
    res.series.push_back({w.t, mass_and_energy(w)});
    res.snapshots.push_back(w);
  };
  if (opts.record_every > 0) record(psi0);

  ComplexRadialField psi = psi0.psi;
  for (int s = 1; s <= steps; ++s) {
    try {
      std::optional<ComplexRadialField> next = psi;
      if (opts.interaction) next = phase_step(*next, 0.5 * dt);
      if (next) next = apply_multiplier(*next, kinetic);
      if (next && opts.interaction) next = phase_step(*next, 0.5 * dt);
      if (!next) {
        res.aborted = true;
        break;
      }
      psi = std::move(*next);
    } catch (const InvalidArgument&) {
      // A non-finite intermediate; keep the last finite state.
      res.aborted = true;
      break;
    }
    res.steps_completed = s;
    res.state = WaveField{psi, psi0.t + s * dt, m};
    if (opts.record_every > 0 && s % opts.record_every == 0) record(res.state);
  }
  return res;
}

double mean_phase(const RadialField& Q, const ComplexRadialField& psi) {
  require_same_grid(Q.grid(), psi.grid(), "mean_phase");
  const auto w = Q.grid().weights();
  cplx s = 0.0;
  for (std::size_t j = 0; j < Q.size(); ++j) s += w[j] * Q[j] * psi[j];
  return std::arg(s);
}

}  // namespace bosonstar
