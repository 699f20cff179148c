#include "chmsav/msav.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chmsav/errors.hpp"

namespace chmsav {

SchemeParams make_params(double tau, double T, double c1, double c2,
                         double eps_radicand) {
  if (tau <= 0.0) {
    throw std::invalid_argument("make_params: tau must be > 0");
  }
  if (T < 0.0) {
    throw std::invalid_argument("make_params: T must be >= 0");
  }
  if (eps_radicand <= 0.0) {
    throw std::invalid_argument("make_params: eps_radicand must be > 0");
  }
  SchemeParams p;
  p.tau = tau;
  p.T = T;
  p.C1 = c1;
  p.C2 = c2;
  p.eps_radicand = eps_radicand;
  p.M = std::lround(T / tau);
  return p;
}

bool params_time_consistent(const SchemeParams& params) {
  const double target = std::max(std::abs(params.T), params.tau);
  return std::abs(static_cast<double>(params.M) * params.tau - params.T) <=
         1e-9 * target;
}

double g_density(double u, double ux) {
  const double s = u + 0.5;
  return s * s * (u * u + ux * ux);
}

double h_density(double u, double ux) {
  return u * u * (u * u + ux * ux);
}

std::pair<double, double> g_partials(double u, double ux) {
  const double s = u + 0.5;
  return {2.0 * s * (2.0 * u * u + ux * ux + 0.5 * u), 2.0 * ux * s * s};
}

std::pair<double, double> h_partials(double u, double ux) {
  return {4.0 * u * u * u + 2.0 * u * ux * ux, 2.0 * ux * u * u};
}

namespace {

struct SplitEval {
  RealField du_g, dux_g;  // dg/du, dg/dux at the nodes
  RealField du_h, dux_h;
  double rad_g = 0.0;  // <g,1>_h + C1
  double rad_h = 0.0;  // <h,1>_h + C2
};

SplitEval eval_split(const RealField& u, const SpectralOperators& ops,
                     const PeriodicGrid& grid, const SchemeParams& params,
                     bool want_partials) {
  const int n = grid.N;
  const RealField ux = apply_d1(ops, u);

  SplitEval ev;
  if (want_partials) {
    ev.du_g.resize(n);
    ev.dux_g.resize(n);
    ev.du_h.resize(n);
    ev.dux_h.resize(n);
  }
  double sum_g = 0.0, sum_h = 0.0;
  for (int j = 0; j < n; ++j) {
    sum_g += g_density(u[j], ux[j]);
    sum_h += h_density(u[j], ux[j]);
    if (want_partials) {
      std::tie(ev.du_g[j], ev.dux_g[j]) = g_partials(u[j], ux[j]);
      std::tie(ev.du_h[j], ev.dux_h[j]) = h_partials(u[j], ux[j]);
    }
  }
  ev.rad_g = grid.h * sum_g + params.C1;
  ev.rad_h = grid.h * sum_h + params.C2;
  if (ev.rad_g < params.eps_radicand || ev.rad_h < params.eps_radicand) {
    throw RadicandTooSmall(
        "radicand below eps_radicand (raise C1/C2): <g>+C1 = " +
        std::to_string(ev.rad_g) + ", <h>+C2 = " + std::to_string(ev.rad_h));
  }
  return ev;
}

}  // namespace

SplitGradients assemble_gradients(const RealField& hat_u,
                                  const SpectralOperators& ops,
                                  const PeriodicGrid& grid,
                                  const SchemeParams& params) {
  const int n = grid.N;
  SplitEval ev = eval_split(hat_u, ops, grid, params, /*want_partials=*/true);

  const RealField d1_dux_g = apply_d1(ops, ev.dux_g);
  const RealField d1_dux_h = apply_d1(ops, ev.dux_h);
  const double denom_g = 2.0 * std::sqrt(ev.rad_g);
  const double denom_h = 2.0 * std::sqrt(ev.rad_h);

  SplitGradients grads;
  grads.g1.resize(n);
  grads.g2.resize(n);
  for (int j = 0; j < n; ++j) {
    grads.g1[j] = (ev.du_g[j] - d1_dux_g[j]) / denom_g;
    grads.g2[j] = (ev.du_h[j] - d1_dux_h[j]) / denom_h;
  }
  return grads;
}

std::pair<double, double> init_aux(const RealField& u0,
                                   const SpectralOperators& ops,
                                   const PeriodicGrid& grid,
                                   const SchemeParams& params) {
  SplitEval ev = eval_split(u0, ops, grid, params, /*want_partials=*/false);
  return {std::sqrt(ev.rad_g), std::sqrt(ev.rad_h)};
}

namespace detail {

ReducedSystem build_reduced(const SplitGradients& grads,
                            const SpectralOperators& ops,
                            const PeriodicGrid& grid,
                            const SchemeParams& params) {
  const int n = grid.N;
  ReducedSystem sys;
  sys.dg1 = apply_d(ops, grads.g1);
  sys.dg2 = apply_d(ops, grads.g2);
  sys.gamma1 = apply_a_inv(ops, sys.dg1);
  sys.gamma2 = apply_a_inv(ops, sys.dg2);
  const double half_tau = params.tau / 2.0;
  for (int j = 0; j < n; ++j) {
    sys.gamma1[j] *= -half_tau;
    sys.gamma2[j] *= half_tau;
  }
  sys.m11 = 1.0 - inner(grads.g1, sys.gamma1, grid);
  sys.m12 = -inner(grads.g1, sys.gamma2, grid);
  sys.m21 = -inner(grads.g2, sys.gamma1, grid);
  sys.m22 = 1.0 - inner(grads.g2, sys.gamma2, grid);
  return sys;
}

RealField reduced_solve(const ReducedSystem& sys, const SplitGradients& grads,
                        const RealField& r, const SpectralOperators& ops,
                        const PeriodicGrid& grid) {
  RealField u = apply_a_inv(ops, r);  // b = Ainv r
  const double rhs1 = inner(grads.g1, u, grid);
  const double rhs2 = inner(grads.g2, u, grid);

  const double det = sys.m11 * sys.m22 - sys.m12 * sys.m21;
  const double scale = std::max(std::abs(sys.m11 * sys.m22),
                                std::abs(sys.m12 * sys.m21));
  if (std::abs(det) < 1e-14 * std::max(scale, 1.0)) {
    throw SingularReducedSystem("2x2 reduced system is singular, |det| = " +
                                std::to_string(std::abs(det)));
  }
  const double s1 = (rhs1 * sys.m22 - sys.m12 * rhs2) / det;
  const double s2 = (sys.m11 * rhs2 - sys.m21 * rhs1) / det;

  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] += sys.gamma1[j] * s1 + sys.gamma2[j] * s2;
  }
  return u;
}

}  // namespace detail

HalfStep solve_half_step(const SplitGradients& grads, const MsavState& state,
                         const SpectralOperators& ops, const PeriodicGrid& grid,
                         const SchemeParams& params) {
  const int n = grid.N;
  const detail::ReducedSystem sys =
      detail::build_reduced(grads, ops, grid, params);

  // r^n = U^n - tau/2 D G1 (Q1^n - <G1,U^n>_h) + tau/2 D G2 (Q2^n - <G2,U^n>_h)
  const double w1 = state.q1 - inner(grads.g1, state.u_curr, grid);
  const double w2 = state.q2 - inner(grads.g2, state.u_curr, grid);
  const double half_tau = params.tau / 2.0;
  RealField r(n);
  for (int j = 0; j < n; ++j) {
    r[j] = state.u_curr[j] - half_tau * sys.dg1[j] * w1 +
           half_tau * sys.dg2[j] * w2;
  }

  HalfStep half;
  half.u_half = detail::reduced_solve(sys, grads, r, ops, grid);

  RealField diff(n);
  for (int j = 0; j < n; ++j) diff[j] = half.u_half[j] - state.u_curr[j];
  half.q1_half = state.q1 + inner(grads.g1, diff, grid);
  half.q2_half = state.q2 + inner(grads.g2, diff, grid);
  return half;
}

double half_step_residual(const SplitGradients& grads, const MsavState& state,
                          const HalfStep& half, const SpectralOperators& ops,
                          const PeriodicGrid& grid,
                          const SchemeParams& params) {
  const int n = grid.N;
  // delta_t U^n = D(-G1 Q1^{n+1/2} + G2 Q2^{n+1/2} + (U^{n+1/2} - D2 U^{n+1/2})/4)
  const RealField d2u = apply_d2(ops, half.u_half);
  RealField w(n);
  for (int j = 0; j < n; ++j) {
    w[j] = -grads.g1[j] * half.q1_half + grads.g2[j] * half.q2_half +
           0.25 * (half.u_half[j] - d2u[j]);
  }
  const RealField dw = apply_d(ops, w);
  RealField res(n);
  for (int j = 0; j < n; ++j) {
    res[j] = 2.0 * (half.u_half[j] - state.u_curr[j]) / params.tau - dw[j];
  }
  return norm_l2(res, grid);
}

MsavState startup_step(const MsavState& state, const SpectralOperators& ops,
                       const PeriodicGrid& grid, const SchemeParams& params) {
  if (state.n != 0) {
    throw std::logic_error("startup_step: requires state at n = 0");
  }
  const SplitGradients grads =
      assemble_gradients(state.u_curr, ops, grid, params);
  const HalfStep half = solve_half_step(grads, state, ops, grid, params);

  MsavState next;
  next.u_prev = state.u_curr;
  next.u_curr.resize(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    next.u_curr[j] = 2.0 * half.u_half[j] - state.u_curr[j];
  }
  next.q1 = 2.0 * half.q1_half - state.q1;
  next.q2 = 2.0 * half.q2_half - state.q2;
  next.n = 1;
  next.t = params.tau;
  return next;
}

MsavState step(const MsavState& state, const SpectralOperators& ops,
               const PeriodicGrid& grid, const SchemeParams& params) {
  if (state.n < 1 || state.u_prev.empty()) {
    throw std::logic_error("step: requires n >= 1 with U^{n-1} present");
  }
  const int n = grid.N;
  RealField hat(n);
  for (int j = 0; j < n; ++j) {
    hat[j] = 1.5 * state.u_curr[j] - 0.5 * state.u_prev[j];
  }
  const SplitGradients grads = assemble_gradients(hat, ops, grid, params);
  const HalfStep half = solve_half_step(grads, state, ops, grid, params);

  MsavState next;
  next.u_prev = state.u_curr;
  next.u_curr.resize(n);
  for (int j = 0; j < n; ++j) {
    next.u_curr[j] = 2.0 * half.u_half[j] - state.u_curr[j];
  }
  next.q1 = 2.0 * half.q1_half - state.q1;
  next.q2 = 2.0 * half.q2_half - state.q2;
  next.n = state.n + 1;
  next.t = static_cast<double>(next.n) * params.tau;
  return next;
}

long default_observer_stride(int n_nodes) { return n_nodes <= 64 ? 1 : 100; }

MsavState run(const RealField& u0, const SchemeParams& params,
              const SpectralOperators& ops, const PeriodicGrid& grid,
              const StepObserver& observer, long stride) {
  validate_field(u0, grid);
  if (stride <= 0) stride = default_observer_stride(grid.N);

  MsavState state;
  state.u_curr = u0;
  long at_step = 0;
  try {
    std::tie(state.q1, state.q2) = init_aux(u0, ops, grid, params);
    if (observer) observer(state);
    if (params.M >= 1) {
      at_step = 1;
      state = startup_step(state, ops, grid, params);
      if (observer && (state.n % stride == 0 || state.n == params.M)) {
        observer(state);
      }
    }
    while (state.n < params.M) {
      at_step = state.n + 1;
      state = step(state, ops, grid, params);
      if (observer && (state.n % stride == 0 || state.n == params.M)) {
        observer(state);
      }
    }
  } catch (const std::exception& e) {
    throw SolverFailure("solver aborted at step " + std::to_string(at_step) +
                        ": " + e.what());
  }
  return state;
}

}  // namespace chmsav
