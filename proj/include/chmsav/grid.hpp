#pragma once

#include <vector>

namespace chmsav {

/// A solution snapshot: one real sample per grid node.
using RealField = std::vector<double>;

/// Equispaced collocation grid on [a, b) with periodic identification.
/// Node j = 0 coincides with a; the point b is the periodic image of a and
/// is not stored, so `nodes` has exactly N entries.
struct PeriodicGrid {
  double a = 0.0;
  double b = 0.0;
  double L = 0.0;   // domain length b - a
  int N = 0;        // node count, even, >= 4
  double h = 0.0;   // mesh size L / N
  double mu = 0.0;  // fundamental wave number 2*pi/L
  std::vector<double> nodes;
};

/// Builds the periodic grid. Rejects b <= a and odd or too-small N.
PeriodicGrid build_grid(double a, double b, int n);

/// Discrete inner product <u,v>_h = h * sum_j u_j v_j.
double inner(const RealField& u, const RealField& v, const PeriodicGrid& grid);

/// Arithmetic mean of the samples.
double mean(const RealField& u);

/// Grid-weighted l2 norm sqrt(<u,u>_h).
double norm_l2(const RealField& u, const PeriodicGrid& grid);

/// Max norm.
double norm_inf(const RealField& u);

/// Throws std::invalid_argument unless u has grid.N finite entries.
void validate_field(const RealField& u, const PeriodicGrid& grid);

}  // namespace chmsav
