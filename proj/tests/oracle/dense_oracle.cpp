#include "dense_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "chmsav/spectral.hpp"

namespace chmsav::oracle {

Mat from_raw(int n, std::vector<double> values) {
  Mat m;
  m.n = n;
  m.a = std::move(values);
  if (m.a.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("from_raw: size mismatch");
  }
  return m;
}

std::vector<double> matvec(const Mat& m, const std::vector<double>& v) {
  std::vector<double> out(m.n, 0.0);
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat c;
  c.n = a.n;
  c.a.assign(static_cast<std::size_t>(a.n) * a.n, 0.0);
  for (int i = 0; i < a.n; ++i) {
    for (int k = 0; k < a.n; ++k) {
      const double aik = a.at(i, k);
      for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

std::vector<double> solve(Mat a, std::vector<double> b) {
  const int n = a.n;
  if (static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("solve: size mismatch");
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(a.at(row, col)) > std::abs(a.at(pivot, col))) pivot = row;
    }
    if (a.at(pivot, col) == 0.0) {
      throw std::runtime_error("solve: singular matrix");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    for (int row = col + 1; row < n; ++row) {
      const double f = a.at(row, col) / a.at(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a.at(row, j) -= f * a.at(col, j);
      b[row] -= f * b[col];
    }
  }
  for (int row = n - 1; row >= 0; --row) {
    double s = b[row];
    for (int j = row + 1; j < n; ++j) s -= a.at(row, j) * b[j];
    b[row] = s / a.at(row, row);
  }
  return b;
}

namespace {

Mat identity(int n) {
  Mat m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat i_minus_d2(const PeriodicGrid& grid) {
  const int n = grid.N;
  Mat m = from_raw(n, dense_d2(grid, kOracleCap));
  for (auto& v : m.a) v = -v;
  for (int i = 0; i < n; ++i) m.at(i, i) += 1.0;
  return m;
}

}  // namespace

Mat dense_d_matrix(const PeriodicGrid& grid) {
  const int n = grid.N;
  const Mat d1 = from_raw(n, dense_d1(grid, kOracleCap));
  const Mat lhs = i_minus_d2(grid);
  Mat d;
  d.n = n;
  d.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int col = 0; col < n; ++col) {
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = d1.at(i, col);
    const std::vector<double> x = solve(lhs, rhs);
    for (int i = 0; i < n; ++i) d.at(i, col) = x[i];
  }
  return d;
}

RealField dense_apply_d(const PeriodicGrid& grid, const RealField& u) {
  const Mat d1 = from_raw(grid.N, dense_d1(grid, kOracleCap));
  return solve(i_minus_d2(grid), matvec(d1, u));
}

RealField dense_apply_a_inv(const PeriodicGrid& grid, double tau,
                            const RealField& u) {
  const int n = grid.N;
  Mat a = from_raw(n, dense_d1(grid, kOracleCap));
  for (auto& v : a.a) v *= -tau / 8.0;
  for (int i = 0; i < n; ++i) a.at(i, i) += 1.0;
  return solve(std::move(a), u);
}

SplitGradients dense_gradients(const RealField& hat_u,
                               const PeriodicGrid& grid,
                               const SchemeParams& params) {
  const int n = grid.N;
  const Mat d1 = from_raw(n, dense_d1(grid, kOracleCap));
  const RealField ux = matvec(d1, hat_u);

  RealField du_g(n), dux_g(n), du_h(n), dux_h(n);
  double sum_g = 0.0, sum_h = 0.0;
  for (int j = 0; j < n; ++j) {
    sum_g += g_density(hat_u[j], ux[j]);
    sum_h += h_density(hat_u[j], ux[j]);
    std::tie(du_g[j], dux_g[j]) = g_partials(hat_u[j], ux[j]);
    std::tie(du_h[j], dux_h[j]) = h_partials(hat_u[j], ux[j]);
  }
  const double denom_g = 2.0 * std::sqrt(grid.h * sum_g + params.C1);
  const double denom_h = 2.0 * std::sqrt(grid.h * sum_h + params.C2);
  const RealField d1_dux_g = matvec(d1, dux_g);
  const RealField d1_dux_h = matvec(d1, dux_h);

  SplitGradients grads;
  grads.g1.resize(n);
  grads.g2.resize(n);
  for (int j = 0; j < n; ++j) {
    grads.g1[j] = (du_g[j] - d1_dux_g[j]) / denom_g;
    grads.g2[j] = (du_h[j] - d1_dux_h[j]) / denom_h;
  }
  return grads;
}

DenseHalfStep dense_half_step(const MsavState& state, const RealField& hat_u,
                              const PeriodicGrid& grid,
                              const SchemeParams& params) {
  return dense_half_step_with_gradients(
      state, dense_gradients(hat_u, grid, params), grid, params);
}

DenseHalfStep dense_half_step_with_gradients(const MsavState& state,
                                             const SplitGradients& grads,
                                             const PeriodicGrid& grid,
                                             const SchemeParams& params) {
  const int n = grid.N;
  const Mat dmat = dense_d_matrix(grid);
  const Mat im_d2 = i_minus_d2(grid);
  const Mat d_im_d2 = matmul(dmat, im_d2);
  const RealField dg1 = matvec(dmat, grads.g1);
  const RealField dg2 = matvec(dmat, grads.g2);

  // Unknowns X = (U^{n+1/2}, Q1^{n+1/2}, Q2^{n+1/2}); assemble the coupled
  // system row by row, exactly as written before any elimination.
  const int dim = n + 2;
  Mat sys;
  sys.n = dim;
  sys.a.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  std::vector<double> rhs(dim, 0.0);

  const double half_tau = params.tau / 2.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sys.at(i, j) = -(half_tau / 4.0) * d_im_d2.at(i, j);
    }
    sys.at(i, i) += 1.0;
    sys.at(i, n) = half_tau * dg1[i];
    sys.at(i, n + 1) = -half_tau * dg2[i];
    rhs[i] = state.u_curr[i];
  }
  const double g1_un = inner(grads.g1, state.u_curr, grid);
  const double g2_un = inner(grads.g2, state.u_curr, grid);
  for (int j = 0; j < n; ++j) {
    sys.at(n, j) = -grid.h * grads.g1[j];
    sys.at(n + 1, j) = -grid.h * grads.g2[j];
  }
  sys.at(n, n) = 1.0;
  sys.at(n + 1, n + 1) = 1.0;
  rhs[n] = state.q1 - g1_un;
  rhs[n + 1] = state.q2 - g2_un;

  const std::vector<double> x = solve(std::move(sys), std::move(rhs));
  DenseHalfStep out;
  out.u_half.assign(x.begin(), x.begin() + n);
  out.q1_half = x[n];
  out.q2_half = x[n + 1];
  return out;
}

DenseFunctionals dense_functionals(const RealField& u,
                                   const PeriodicGrid& grid) {
  const Mat d1 = from_raw(grid.N, dense_d1(grid, kOracleCap));
  const RealField ux = matvec(d1, u);
  DenseFunctionals f;
  double m = 0.0, mom = 0.0, ham = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    m += u[j];
    mom += u[j] * u[j] + ux[j] * ux[j];
    ham += u[j] * u[j] * u[j] + u[j] * ux[j] * ux[j];
  }
  f.mass = grid.h * m;
  f.momentum = grid.h * mom;
  f.hamiltonian = -0.5 * grid.h * ham;
  return f;
}

}  // namespace chmsav::oracle
