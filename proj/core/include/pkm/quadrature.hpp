#pragma once

#include <vector>

namespace pkm {

/// Positive-weight quadrature rule on an interval, exact for polynomials up to
/// exact_degree. Nodes are strictly interior and listed in ascending order.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
  double a = -1.0, b = 1.0;
};

/// N-point Gauss-Legendre rule on [a, b]; exact_degree = 2N-1. Nodes come from
/// Newton iteration on the Legendre recurrence (tolerance 1e-14), paired
/// symmetrically about the midpoint.
QuadratureRule gauss_legendre(int N, double a, double b);

}  // namespace pkm
