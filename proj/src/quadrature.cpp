#include "chmsav/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chmsav {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: n must be >= 1");
  }
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th root from the top.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n and P_{n-1} by the three-term recurrence.
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] =
        2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& gauss_legendre_32() {
  static const GaussLegendre rule = gauss_legendre(32);
  return rule;
}

double integrate_panel(const GaussLegendre& rule, double a, double b,
                       const std::function<double(double)>& f) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * s;
}

}  // namespace chmsav
