#pragma once

#include <vector>

#include "chmsav/grid.hpp"
#include "chmsav/spline.hpp"

namespace chmsav {

/// Parameters of the smooth periodic traveling wave u(x,t) = phi(x - ct),
/// admissible when z < m < M < c where z = c - M - m.
struct TravelingWaveParams {
  double m = 0.3;      // wave minimum
  double m_max = 0.7;  // wave maximum
  double c = 1.0;      // speed
  int n_tab = 2048;    // tabulation resolution, >= 64
};

/// One full wave period tabulated as (x_j, phi_j) pairs plus the fitted
/// spline. xs has n_tab + 1 entries covering theta in [0, pi]; phi runs
/// m -> M -> m over [0, period]. Immutable after construction.
struct TravelingWave {
  std::vector<double> xs;
  std::vector<double> phis;
  double period = 0.0;
  double c = 0.0;
  CubicSpline spline;
};

/// Tabulates phi implicitly via x(theta) = 2 * integral_0^theta
/// sqrt(A - sin^2 t) / sqrt(B + sin^2 t) dt with A = (c-m)/(M-m) and
/// B = (m-z)/(M-m), one 32-point Gauss-Legendre panel per theta interval,
/// then fits a not-a-knot cubic spline through the table.
TravelingWave build_traveling_wave(const TravelingWaveParams& params);

/// phi((x - c t) mod period), wrapped into [0, period).
double eval_traveling_wave(const TravelingWave& wave, double x, double t);

/// Which cosh branch to use for x - x_i < -L/2. `verbatim` keeps
/// cosh(L - (x - x_i)); `symmetric` uses cosh(L - |x - x_i|). The two agree
/// on the windows evaluated by the stock experiments.
enum class PeakonBranch { verbatim, symmetric };

struct Peak {
  double amplitude = 0.0;  // c_i
  double center = 0.0;     // x_i
};

/// Sum of periodized peakons phi_i(x) = c_i/cosh(L/2) * cosh(x - x_i) for
/// |x - x_i| <= L/2 and the wrapped branch otherwise. L must equal the grid
/// length.
RealField peakon_superposition(const PeriodicGrid& grid,
                               const std::vector<Peak>& peaks, double L,
                               PeakonBranch branch = PeakonBranch::verbatim);

/// u0(x) = 10 / (3 + |x|)^2 on the [-30, 30] domain.
RealField discontinuous_profile(const PeriodicGrid& grid);

}  // namespace chmsav
