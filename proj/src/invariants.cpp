#include "chmsav/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace chmsav {

double mass(const RealField& u, const PeriodicGrid& grid) {
  double s = 0.0;
  for (double x : u) s += x;
  return grid.h * s;
}

double momentum(const RealField& u, const SpectralOperators& ops,
                const PeriodicGrid& grid) {
  const RealField ux = apply_d1(ops, u);
  double s = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    s += u[j] * u[j] + ux[j] * ux[j];
  }
  return grid.h * s;
}

double hamiltonian_energy(const RealField& u, const SpectralOperators& ops,
                          const PeriodicGrid& grid) {
  const RealField ux = apply_d1(ops, u);
  double s = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    s += u[j] * u[j] * u[j] + u[j] * ux[j] * ux[j];
  }
  return -0.5 * grid.h * s;
}

double modified_energy(const RealField& u, double q1, double q2,
                       const SpectralOperators& ops, const PeriodicGrid& grid,
                       const SchemeParams& params) {
  const RealField d2u = apply_d2(ops, u);
  double quad = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    quad += (u[j] - d2u[j]) * u[j];
  }
  quad *= grid.h;
  return 0.125 * quad - 0.5 * q1 * q1 + 0.5 * q2 * q2 + 0.5 * params.C1 -
         0.5 * params.C2;
}

InvariantSample sample_invariants(const MsavState& state,
                                  const SpectralOperators& ops,
                                  const PeriodicGrid& grid,
                                  const SchemeParams& params) {
  InvariantSample s;
  s.n = state.n;
  s.t = state.t;
  s.mass = mass(state.u_curr, grid);
  s.momentum = momentum(state.u_curr, ops, grid);
  s.hamiltonian = hamiltonian_energy(state.u_curr, ops, grid);
  s.modified_energy =
      modified_energy(state.u_curr, state.q1, state.q2, ops, grid, params);
  return s;
}

std::vector<DriftSample> drift_series(
    const std::vector<InvariantSample>& samples) {
  if (samples.empty()) {
    throw std::invalid_argument("drift_series: empty sample list");
  }
  const InvariantSample& ref = samples.front();
  auto drift = [](double f, double f0) {
    return std::abs(f - f0) / std::max(std::abs(f0), 1.0);
  };
  std::vector<DriftSample> out;
  out.reserve(samples.size());
  for (const InvariantSample& s : samples) {
    DriftSample d;
    d.n = s.n;
    d.t = s.t;
    d.mass = drift(s.mass, ref.mass);
    d.momentum = drift(s.momentum, ref.momentum);
    d.hamiltonian = drift(s.hamiltonian, ref.hamiltonian);
    d.modified_energy = drift(s.modified_energy, ref.modified_energy);
    out.push_back(d);
  }
  return out;
}

}  // namespace chmsav
