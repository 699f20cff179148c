#include "chmsav/grid.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chmsav {

PeriodicGrid build_grid(double a, double b, int n) {
  if (!(b > a)) {
    throw std::invalid_argument("build_grid: requires b > a");
  }
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("build_grid: N must be even and >= 4");
  }
  PeriodicGrid g;
  g.a = a;
  g.b = b;
  g.L = b - a;
  g.N = n;
  g.h = g.L / n;
  g.mu = 2.0 * std::numbers::pi / g.L;
  g.nodes.resize(n);
  for (int j = 0; j < n; ++j) {
    g.nodes[j] = a + j * g.h;
  }
  return g;
}

double inner(const RealField& u, const RealField& v, const PeriodicGrid& grid) {
  assert(u.size() == v.size() && static_cast<int>(u.size()) == grid.N);
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    s += u[j] * v[j];
  }
  return grid.h * s;
}

double mean(const RealField& u) {
  if (u.empty()) return 0.0;
  double s = 0.0;
  for (double x : u) s += x;
  return s / static_cast<double>(u.size());
}

double norm_l2(const RealField& u, const PeriodicGrid& grid) {
  return std::sqrt(inner(u, u, grid));
}

double norm_inf(const RealField& u) {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return m;
}

void validate_field(const RealField& u, const PeriodicGrid& grid) {
  if (static_cast<int>(u.size()) != grid.N) {
    throw std::invalid_argument("field length does not match the grid");
  }
  for (double x : u) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("field contains a non-finite entry");
    }
  }
}

}  // namespace chmsav
