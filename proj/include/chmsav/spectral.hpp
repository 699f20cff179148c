#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "chmsav/fft.hpp"
#include "chmsav/grid.hpp"

namespace chmsav {

/// Per-mode Fourier symbols of the four linear operators used by the scheme:
/// the first and second differentiation matrices D1 and D2, the skew
/// operator D = (I - D2)^{-1} D1, and Ainv = (I - tau/8 D1)^{-1}.
///
/// Full-spectrum arrays are indexed k = 0..N-1 in DFT order, i.e. the
/// frequencies 0, 1, ..., N/2-1, [N/2], 1-N/2, ..., -1. The odd-derivative
/// symbol is zero at the Nyquist index so real fields map to real fields;
/// the even-derivative symbol keeps -(mu N/2)^2 there.
///
/// Immutable after construction and safe to share across threads; per-call
/// FFT scratch comes from an internally synchronized pool.
struct SpectralOperators {
  double tau = 0.0;
  std::vector<std::complex<double>> lambda1;       // D1 symbol
  std::vector<double> lambda2;                     // D2 symbol, all <= 0
  std::vector<std::complex<double>> symbol_d;      // lambda1 / (1 - lambda2)
  std::vector<std::complex<double>> symbol_a_inv;  // 1 / (1 - tau/8 lambda1)

  // Half-spectrum views (modes 0..N/2) driving the r2c/c2r fast path.
  // The r2c representation enforces conjugate symmetry structurally, so
  // operator outputs are exactly real.
  std::vector<std::complex<double>> half_d1;
  std::vector<double> half_d2;
  std::vector<std::complex<double>> half_d;
  std::vector<std::complex<double>> half_a_inv;

  std::shared_ptr<detail::FftWorkspacePool> fft;
};

/// Precomputes symbols and the FFT workspace for a grid. tau >= 0.
SpectralOperators build_symbols(const PeriodicGrid& grid, double tau);

RealField apply_d1(const SpectralOperators& ops, const RealField& u);
RealField apply_d2(const SpectralOperators& ops, const RealField& u);

/// D = (I - D2)^{-1} D1. Annihilates the mean.
RealField apply_d(const SpectralOperators& ops, const RealField& u);

/// Exact inverse of I - (tau/8) D1.
RealField apply_a_inv(const SpectralOperators& ops, const RealField& u);

/// Explicit cotangent-formula differentiation matrix, row-major N x N.
/// Test oracle; rejects N above `cap`.
std::vector<double> dense_d1(const PeriodicGrid& grid, int cap = 64);

/// Explicit cosecant-formula second-derivative matrix, row-major N x N.
std::vector<double> dense_d2(const PeriodicGrid& grid, int cap = 64);

}  // namespace chmsav
