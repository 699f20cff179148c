#include "chmsav/spectral.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace chmsav {

SpectralOperators build_symbols(const PeriodicGrid& grid, double tau) {
  if (tau < 0.0) {
    throw std::invalid_argument("build_symbols: tau must be >= 0");
  }
  const int n = grid.N;
  const double mu = grid.mu;

  SpectralOperators ops;
  ops.tau = tau;
  ops.lambda1.resize(n);
  ops.lambda2.resize(n);
  ops.symbol_d.resize(n);
  ops.symbol_a_inv.resize(n);

  for (int k = 0; k < n; ++k) {
    // DFT ordering: frequency k for k <= N/2, k - N afterwards.
    const int freq = (k <= n / 2) ? k : k - n;
    const std::complex<double> l1 =
        (k == n / 2) ? std::complex<double>(0.0, 0.0)
                     : std::complex<double>(0.0, mu * freq);
    const double l2 = -(mu * freq) * (mu * freq);
    ops.lambda1[k] = l1;
    ops.lambda2[k] = l2;
    ops.symbol_d[k] = l1 / (1.0 - l2);
    ops.symbol_a_inv[k] = 1.0 / (1.0 - (tau / 8.0) * l1);
  }

  const int half = n / 2 + 1;
  ops.half_d1.assign(ops.lambda1.begin(), ops.lambda1.begin() + half);
  ops.half_d2.assign(ops.lambda2.begin(), ops.lambda2.begin() + half);
  ops.half_d.assign(ops.symbol_d.begin(), ops.symbol_d.begin() + half);
  ops.half_a_inv.assign(ops.symbol_a_inv.begin(),
                        ops.symbol_a_inv.begin() + half);

  ops.fft = std::make_shared<detail::FftWorkspacePool>(n);
  return ops;
}

namespace {

template <typename Symbol>
RealField apply_symbol(const SpectralOperators& ops,
                       const std::vector<Symbol>& sym, const RealField& u) {
  assert(u.size() == ops.lambda1.size());
  auto ws = ops.fft->acquire();
  std::copy(u.begin(), u.end(), ws->real_buf());
  ws->forward();
  std::complex<double>* s = ws->spec_buf();
  for (std::size_t k = 0; k < sym.size(); ++k) {
    s[k] *= sym[k];
  }
  ws->inverse_scaled();
  return RealField(ws->real_buf(), ws->real_buf() + u.size());
}

}  // namespace

RealField apply_d1(const SpectralOperators& ops, const RealField& u) {
  return apply_symbol(ops, ops.half_d1, u);
}

RealField apply_d2(const SpectralOperators& ops, const RealField& u) {
  return apply_symbol(ops, ops.half_d2, u);
}

RealField apply_d(const SpectralOperators& ops, const RealField& u) {
  return apply_symbol(ops, ops.half_d, u);
}

RealField apply_a_inv(const SpectralOperators& ops, const RealField& u) {
  return apply_symbol(ops, ops.half_a_inv, u);
}

std::vector<double> dense_d1(const PeriodicGrid& grid, int cap) {
  if (grid.N > cap) {
    throw std::invalid_argument("dense_d1: N exceeds the oracle cap");
  }
  const int n = grid.N;
  const double mu = grid.mu;
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      if (j == l) continue;
      const double sign = ((j + l) % 2 == 0) ? 1.0 : -1.0;
      const double arg = mu * (grid.nodes[j] - grid.nodes[l]) / 2.0;
      m[static_cast<std::size_t>(j) * n + l] =
          0.5 * mu * sign * std::cos(arg) / std::sin(arg);
    }
  }
  return m;
}

std::vector<double> dense_d2(const PeriodicGrid& grid, int cap) {
  if (grid.N > cap) {
    throw std::invalid_argument("dense_d2: N exceeds the oracle cap");
  }
  const int n = grid.N;
  const double mu = grid.mu;
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  const double diag = -mu * mu * (static_cast<double>(n) * n + 2.0) / 12.0;
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      if (j == l) {
        m[static_cast<std::size_t>(j) * n + l] = diag;
        continue;
      }
      const double sign = ((j + l + 1) % 2 == 0) ? 1.0 : -1.0;
      const double s = std::sin(mu * (grid.nodes[j] - grid.nodes[l]) / 2.0);
      m[static_cast<std::size_t>(j) * n + l] = 0.5 * mu * mu * sign / (s * s);
    }
  }
  return m;
}

}  // namespace chmsav
