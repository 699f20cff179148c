#pragma once

#include <functional>
#include <utility>

#include "chmsav/grid.hpp"
#include "chmsav/spectral.hpp"

namespace chmsav {

/// Time-stepping parameters. C1/C2 shift the square-root radicands; both
/// split densities are pointwise nonnegative, so 0 works for the experiments.
struct SchemeParams {
  double tau = 0.0;           // time step, > 0 for stepping
  double C1 = 0.0;
  double C2 = 0.0;
  double eps_radicand = 1e-12;
  double T = 0.0;             // final time
  long M = 0;                 // step count, round(T/tau)
};

/// Fills M = round(T/tau). T = 0 gives M = 0 (no steps).
SchemeParams make_params(double tau, double T, double c1 = 0.0, double c2 = 0.0,
                         double eps_radicand = 1e-12);

/// True when |M*tau - T| <= 1e-9 * max(|T|, tau).
bool params_time_consistent(const SchemeParams& params);

/// Full state of the three-level recurrence at step n. u_prev is empty until
/// the startup step has run (n >= 1).
struct MsavState {
  RealField u_curr;
  RealField u_prev;
  double q1 = 0.0;
  double q2 = 0.0;
  long n = 0;
  double t = 0.0;
};

/// Normalized variational-derivative vectors of the two split energies,
/// both evaluated at the same extrapolated state.
struct SplitGradients {
  RealField g1;  // (dg/du - D1 dg/dux) / (2 sqrt(<g,1>_h + C1))
  RealField g2;  // (dh/du - D1 dh/dux) / (2 sqrt(<h,1>_h + C2))
};

/// Split energy densities g = (u + 1/2)^2 (u^2 + ux^2) and
/// h = u^2 (u^2 + ux^2); both >= 0 pointwise.
double g_density(double u, double ux);
double h_density(double u, double ux);

/// Partial derivatives (d/du, d/dux) of the split densities.
std::pair<double, double> g_partials(double u, double ux);
std::pair<double, double> h_partials(double u, double ux);

/// Builds G1, G2 at the given (extrapolated) state. Throws RadicandTooSmall
/// when a radicand falls below params.eps_radicand.
SplitGradients assemble_gradients(const RealField& hat_u,
                                  const SpectralOperators& ops,
                                  const PeriodicGrid& grid,
                                  const SchemeParams& params);

/// Initial auxiliary variables Q1_0 = sqrt(<g(U0, D1 U0),1>_h + C1), and
/// likewise Q2_0 with h and C2.
std::pair<double, double> init_aux(const RealField& u0,
                                   const SpectralOperators& ops,
                                   const PeriodicGrid& grid,
                                   const SchemeParams& params);

struct HalfStep {
  RealField u_half;
  double q1_half = 0.0;
  double q2_half = 0.0;
};

/// One linearly implicit half step with the gradients frozen: eliminates the
/// auxiliary variables, solves the 2x2 reduced system, reconstructs U^{n+1/2}
/// via Ainv, and updates Q via Qi^{n+1/2} = Qi^n + <Gi, U^{n+1/2} - U^n>_h.
HalfStep solve_half_step(const SplitGradients& grads, const MsavState& state,
                         const SpectralOperators& ops, const PeriodicGrid& grid,
                         const SchemeParams& params);

/// l2_h norm of the residual of the implicit update equation at the half
/// step; bounded by round-off (~1e-10 ||U^n||) when the solve is correct.
double half_step_residual(const SplitGradients& grads, const MsavState& state,
                          const HalfStep& half, const SpectralOperators& ops,
                          const PeriodicGrid& grid, const SchemeParams& params);

/// Startup step (n = 0 -> 1): gradients are assembled at U^0 itself.
MsavState startup_step(const MsavState& state, const SpectralOperators& ops,
                       const PeriodicGrid& grid, const SchemeParams& params);

/// Generic step (n -> n+1, n >= 1): gradients are assembled at the
/// extrapolant (3 U^n - U^{n-1}) / 2.
MsavState step(const MsavState& state, const SpectralOperators& ops,
               const PeriodicGrid& grid, const SchemeParams& params);

using StepObserver = std::function<void(const MsavState&)>;

/// Observer stride used when the caller passes stride <= 0: every step for
/// N <= 64, every 100 steps otherwise.
long default_observer_stride(int n_nodes);

/// Runs init_aux, the startup step, and M-1 generic steps. The observer is
/// invoked at n = 0, every `stride` steps, and at the final step. Failures
/// are rethrown as SolverFailure carrying the step index.
MsavState run(const RealField& u0, const SchemeParams& params,
              const SpectralOperators& ops, const PeriodicGrid& grid,
              const StepObserver& observer = {}, long stride = 0);

namespace detail {

/// Frozen-gradient linear machinery of one half step.
struct ReducedSystem {
  RealField dg1, dg2;        // D G1, D G2
  RealField gamma1, gamma2;  // -tau/2 Ainv D G1, +tau/2 Ainv D G2
  double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
};

ReducedSystem build_reduced(const SplitGradients& grads,
                            const SpectralOperators& ops,
                            const PeriodicGrid& grid,
                            const SchemeParams& params);

/// Solves [I - tau/8 D1] u = -tau/2 D G1 <G1,u>_h + tau/2 D G2 <G2,u>_h + r
/// for u. Linear in r once the gradients are frozen.
RealField reduced_solve(const ReducedSystem& sys, const SplitGradients& grads,
                        const RealField& r, const SpectralOperators& ops,
                        const PeriodicGrid& grid);

}  // namespace detail

}  // namespace chmsav
