#pragma once

#include <functional>
#include <vector>

namespace chmsav {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computes an n-point rule by Newton iteration on the Legendre recurrence.
GaussLegendre gauss_legendre(int n);

/// Shared 32-point rule.
const GaussLegendre& gauss_legendre_32();

/// Single-panel integral of f over [a, b].
double integrate_panel(const GaussLegendre& rule, double a, double b,
                       const std::function<double(double)>& f);

}  // namespace chmsav
