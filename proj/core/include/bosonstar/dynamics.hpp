#pragma once

#include <vector>

#include "bosonstar/field.hpp"

namespace bosonstar {

/// State of i psi_t = sqrt(-Delta+m^2) psi - (|x|^-1 * |psi|^2) psi.
struct WaveField {
  ComplexRadialField psi;
  double t = 0.0;
  double m = 0.0;
};

struct ConservedQuantities {
  double mass = 0.0;       ///< ||psi||^2
  double kinetic = 0.0;    ///< <psi, sqrt(-Delta+m^2) psi>
  double potential = 0.0;  ///< -(1/2) <|psi|^2, |x|^-1 * |psi|^2>
  double total = 0.0;
};

ConservedQuantities mass_and_energy(const WaveField& w);

struct EvolveOptions {
  bool interaction = true;  ///< false gives the free relativistic flow
  int record_every = 0;     ///< > 0 stores a snapshot and conserved sample every k steps
};

struct TimeSample {
  double t = 0.0;
  ConservedQuantities q;
};

struct EvolveResult {
  WaveField state;                  ///< last finite state
  int steps_completed = 0;
  bool aborted = false;             ///< a step produced non-finite values
  std::vector<TimeSample> series;   ///< includes t = 0 when recording
  std::vector<WaveField> snapshots;
};

/**
 * Strang splitting: half step of the local phase exp(+i dt/2 Phi) with
 * Phi = newton_potential(|psi|^2), full step of exp(-i dt sqrt(xi^2+m^2)) in
 * frequency space, half step of the phase with Phi refreshed. Both substeps
 * preserve the discrete mass. A non-finite step stops the run and returns
 * the previous state.
 *
 * Accuracy is documented for dt <= 0.01; larger steps are allowed.
 */
EvolveResult evolve(const WaveField& psi0, double dt, int steps, const EvolveOptions& opts = {});

/// arg <Q, psi> in the weighted product.
double mean_phase(const RadialField& Q, const ComplexRadialField& psi);

}  // namespace bosonstar
