#include "chmsav/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chmsav/errors.hpp"
#include "chmsav/quadrature.hpp"

namespace chmsav {

TravelingWave build_traveling_wave(const TravelingWaveParams& params) {
  if (params.n_tab < 64) {
    throw std::invalid_argument("build_traveling_wave: n_tab must be >= 64");
  }
  const double m = params.m;
  const double mm = params.m_max;
  const double c = params.c;
  const double z = c - mm - m;
  if (!(z < m && m < mm && mm < c)) {
    throw AdmissibilityViolation(
        "traveling wave requires z < m < M < c with z = c - M - m");
  }
  const double amp = mm - m;
  const double a_coef = (c - m) / amp;
  const double b_coef = (m - z) / amp;

  auto integrand = [&](double t) {
    const double s = std::sin(t);
    const double num = a_coef - s * s;
    if (num < 0.0) {
      throw QuadratureFailure("traveling-wave integrand became non-real");
    }
    return std::sqrt(num) / std::sqrt(b_coef + s * s);
  };

  const GaussLegendre& rule = gauss_legendre_32();
  const int nt = params.n_tab;
  const double dtheta = std::numbers::pi / nt;

  TravelingWave wave;
  wave.c = c;
  wave.xs.resize(nt + 1);
  wave.phis.resize(nt + 1);
  wave.xs[0] = 0.0;
  wave.phis[0] = m;
  for (int j = 1; j <= nt; ++j) {
    const double th0 = (j - 1) * dtheta;
    const double th1 = j * dtheta;
    wave.xs[j] = wave.xs[j - 1] + 2.0 * integrate_panel(rule, th0, th1,
                                                        integrand);
    const double s = std::sin(th1);
    wave.phis[j] = m + amp * s * s;
  }
  wave.period = wave.xs.back();
  wave.spline = CubicSpline(wave.xs, wave.phis);
  return wave;
}

double eval_traveling_wave(const TravelingWave& wave, double x, double t) {
  double arg = std::fmod(x - wave.c * t, wave.period);
  if (arg < 0.0) arg += wave.period;
  return wave.spline(arg);
}

RealField peakon_superposition(const PeriodicGrid& grid,
                               const std::vector<Peak>& peaks, double L,
                               PeakonBranch branch) {
  if (peaks.empty()) {
    throw std::invalid_argument("peakon_superposition: no peaks given");
  }
  if (std::abs(L - grid.L) > 1e-9 * std::max(1.0, std::abs(L))) {
    throw std::invalid_argument(
        "peakon_superposition: L must equal the grid length");
  }
  const double norm = std::cosh(L / 2.0);
  RealField u(grid.N, 0.0);
  for (int j = 0; j < grid.N; ++j) {
    const double x = grid.nodes[j];
    for (const Peak& p : peaks) {
      const double dx = x - p.center;
      double arg;
      if (std::abs(dx) <= L / 2.0) {
        arg = dx;
      } else if (branch == PeakonBranch::verbatim) {
        arg = L - dx;
      } else {
        arg = L - std::abs(dx);
      }
      u[j] += p.amplitude / norm * std::cosh(arg);
    }
  }
  return u;
}

RealField discontinuous_profile(const PeriodicGrid& grid) {
  if (std::abs(grid.a + 30.0) > 1e-9 || std::abs(grid.b - 30.0) > 1e-9) {
    throw std::invalid_argument(
        "discontinuous_profile: grid domain must be [-30, 30]");
  }
  RealField u(grid.N);
  for (int j = 0; j < grid.N; ++j) {
    const double d = 3.0 + std::abs(grid.nodes[j]);
    u[j] = 10.0 / (d * d);
  }
  return u;
}

}  // namespace chmsav
