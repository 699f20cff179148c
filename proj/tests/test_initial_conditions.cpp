#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chmsav/errors.hpp"
#include "chmsav/initial_conditions.hpp"

using namespace chmsav;

TEST_CASE("traveling wave for the reference parameters") {
  const TravelingWave wave = build_traveling_wave({0.3, 0.7, 1.0, 2048});
  // z = 0, A = 1.75, B = 0.75, period about 6.56
  CHECK(wave.period == doctest::Approx(6.56).epsilon(2e-3));
  CHECK(wave.phis.front() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(wave.phis[1024] == doctest::Approx(0.7).epsilon(1e-14));  // theta = pi/2
  CHECK(wave.phis.back() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(wave.xs.front() == 0.0);
  for (std::size_t i = 0; i + 1 < wave.xs.size(); ++i) {
    CHECK(wave.xs[i] < wave.xs[i + 1]);
  }
}

TEST_CASE("period self-converges under table refinement") {
  const TravelingWave coarse = build_traveling_wave({0.3, 0.7, 1.0, 2048});
  const TravelingWave fine = build_traveling_wave({0.3, 0.7, 1.0, 4096});
  CHECK(std::abs(coarse.period - fine.period) < 1e-8);
}

TEST_CASE("traveling wave rejects inadmissible parameters") {
  CHECK_THROWS_AS(build_traveling_wave({0.7, 0.3, 1.0, 256}),
                  AdmissibilityViolation);
  CHECK_THROWS_AS(build_traveling_wave({0.3, 1.2, 1.0, 256}),
                  AdmissibilityViolation);
  // z = c - M - m >= m
  CHECK_THROWS_AS(build_traveling_wave({0.1, 0.2, 1.0, 256}),
                  AdmissibilityViolation);
  CHECK_THROWS_AS(build_traveling_wave({0.3, 0.7, 1.0, 32}),
                  std::invalid_argument);
}

TEST_CASE("spline reproduces the table and respects the range") {
  const TravelingWave wave = build_traveling_wave({0.3, 0.7, 1.0, 2048});
  for (std::size_t i = 0; i < wave.xs.size(); i += 17) {
    CHECK(std::abs(wave.spline(wave.xs[i]) - wave.phis[i]) < 1e-10);
    CHECK(wave.phis[i] >= 0.3 - 1e-14);
    CHECK(wave.phis[i] <= 0.7 + 1e-14);
  }
  // spline overshoot between nodes stays tiny
  for (std::size_t i = 0; i + 1 < wave.xs.size(); i += 11) {
    const double mid = 0.5 * (wave.xs[i] + wave.xs[i + 1]);
    const double v = wave.spline(mid);
    CHECK(v > 0.3 - 1e-6);
    CHECK(v < 0.7 + 1e-6);
  }
}

TEST_CASE("eval wraps in space and time") {
  const TravelingWave wave = build_traveling_wave({0.3, 0.7, 1.0, 1024});
  for (std::size_t k = 0; k < wave.xs.size(); k += 101) {
    CHECK(eval_traveling_wave(wave, wave.xs[k], 0.0) ==
          doctest::Approx(wave.phis[k]).epsilon(1e-10));
  }
  for (double x : {-3.0, 0.37, 5.2, 11.0}) {
    for (double t : {0.0, 0.8, 4.1}) {
      const double base = eval_traveling_wave(wave, x, t);
      CHECK(eval_traveling_wave(wave, x + wave.period, t) ==
            doctest::Approx(base).epsilon(1e-12));
      CHECK(eval_traveling_wave(wave, x, t + wave.period / wave.c) ==
            doctest::Approx(base).epsilon(1e-10));
    }
  }
}

TEST_CASE("two-peakon superposition hits the printed parameters") {
  const PeriodicGrid g = build_grid(0.0, 25.0, 1024);
  const std::vector<Peak> peaks = {{3.0, -8.0}, {1.0, 0.0}};
  const RealField u = peakon_superposition(g, peaks, 25.0);

  // node 0: both offsets fall in the |x - xi| <= L/2 branch
  const double want0 =
      3.0 / std::cosh(12.5) * std::cosh(8.0) + 1.0 / std::cosh(12.5);
  CHECK(u[0] == doctest::Approx(want0).epsilon(1e-12));

  // cosh(x - xi) maxes out where |x - xi| = L/2, so the taller crest (value
  // about c1 = 3) sits at x1 + L/2 = 4.5
  double umax = 0.0;
  int jmax = 0;
  for (int j = 0; j < g.N; ++j) {
    if (u[j] > umax) {
      umax = u[j];
      jmax = j;
    }
  }
  CHECK(std::abs(g.nodes[jmax] - 4.5) < 2.0 * g.h);
  CHECK(umax > 2.9);
  CHECK(umax < 3.05);
}

TEST_CASE("three-peakon superposition evaluates everywhere finite") {
  const PeriodicGrid g = build_grid(0.0, 30.0, 512);
  const std::vector<Peak> peaks = {{2.0, -5.0}, {1.0, -3.0}, {0.8, -1.0}};
  const RealField u = peakon_superposition(g, peaks, 30.0);
  for (double v : u) {
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
  }
}

TEST_CASE("peakon branch switch is continuous across |x - xi| = L/2") {
  const double L = 25.0;
  const PeriodicGrid g = build_grid(0.0, L, 16);
  const std::vector<Peak> peak = {{1.0, 0.0}};
  for (const PeakonBranch branch :
       {PeakonBranch::verbatim, PeakonBranch::symmetric}) {
    auto eval = [&](double x) {
      const double dx = x;
      const double arg = std::abs(dx) <= L / 2.0
                             ? dx
                             : (branch == PeakonBranch::verbatim
                                    ? L - dx
                                    : L - std::abs(dx));
      return std::cosh(arg) / std::cosh(L / 2.0);
    };
    const double eps = 1e-9;
    CHECK(std::abs(eval(L / 2.0 - eps) - eval(L / 2.0 + eps)) < 1e-6);
  }
  // both branches agree on the evaluated window x - xi >= 0
  const RealField verbatim =
      peakon_superposition(g, peak, L, PeakonBranch::verbatim);
  const RealField symmetric =
      peakon_superposition(g, peak, L, PeakonBranch::symmetric);
  for (int j = 0; j < g.N; ++j) {
    CHECK(verbatim[j] == symmetric[j]);
  }
}

TEST_CASE("peakon superposition validates its inputs") {
  const PeriodicGrid g = build_grid(0.0, 25.0, 16);
  CHECK_THROWS_AS(peakon_superposition(g, {}, 25.0), std::invalid_argument);
  CHECK_THROWS_AS(peakon_superposition(g, {{1.0, 0.0}}, 30.0),
                  std::invalid_argument);
}

TEST_CASE("discontinuous profile values and symmetry") {
  const PeriodicGrid g = build_grid(-30.0, 30.0, 1024);
  const RealField u = discontinuous_profile(g);
  const int j0 = 512;  // x = 0
  CHECK(g.nodes[j0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(u[j0] == doctest::Approx(10.0 / 9.0).epsilon(1e-14));
  CHECK(u[0] == doctest::Approx(10.0 / 1089.0).epsilon(1e-14));
  // even symmetry on mirrored nodes
  for (int j = 1; j < g.N / 2; ++j) {
    CHECK(u[j0 - j] == doctest::Approx(u[j0 + j]).epsilon(1e-14));
  }

  const PeriodicGrid wrong = build_grid(0.0, 60.0, 64);
  CHECK_THROWS_AS(discontinuous_profile(wrong), std::invalid_argument);
}
