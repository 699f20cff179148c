#pragma once

#include <vector>

namespace chmsav {

/// Cubic interpolating spline with not-a-knot end conditions over strictly
/// increasing abscissae. Evaluation outside [x_front, x_back] extrapolates
/// with the boundary polynomial.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;

  bool empty() const { return x_.empty(); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> b_;   // per-interval linear coefficient
  std::vector<double> m_;   // second derivatives at the knots
};

}  // namespace chmsav
