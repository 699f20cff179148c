#pragma once

#include <vector>

#include "chmsav/grid.hpp"
#include "chmsav/msav.hpp"
#include "chmsav/spectral.hpp"

namespace chmsav {

/// The four monitored functionals at one step. The stepper conserves mass
/// and the modified energy to round-off; momentum and the Hamiltonian drift
/// at O(tau^2) on smooth data.
struct InvariantSample {
  long n = 0;
  double t = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  double hamiltonian = 0.0;
  double modified_energy = 0.0;
};

/// h * sum_j U_j.
double mass(const RealField& u, const PeriodicGrid& grid);

/// h * sum_j (U_j^2 + (D1 U)_j^2).
double momentum(const RealField& u, const SpectralOperators& ops,
                const PeriodicGrid& grid);

/// -(h/2) * sum_j (U_j^3 + U_j (D1 U)_j^2). Not conserved by the scheme.
double hamiltonian_energy(const RealField& u, const SpectralOperators& ops,
                          const PeriodicGrid& grid);

/// (1/8) <U - D2 U, U>_h - Q1^2/2 + Q2^2/2 + C1/2 - C2/2. Conserved exactly.
double modified_energy(const RealField& u, double q1, double q2,
                       const SpectralOperators& ops, const PeriodicGrid& grid,
                       const SchemeParams& params);

InvariantSample sample_invariants(const MsavState& state,
                                  const SpectralOperators& ops,
                                  const PeriodicGrid& grid,
                                  const SchemeParams& params);

/// Relative drifts against sample 0: |f_n - f_0| / max(|f_0|, 1).
struct DriftSample {
  long n = 0;
  double t = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  double hamiltonian = 0.0;
  double modified_energy = 0.0;
};

/// Rejects an empty series.
std::vector<DriftSample> drift_series(
    const std::vector<InvariantSample>& samples);

}  // namespace chmsav
