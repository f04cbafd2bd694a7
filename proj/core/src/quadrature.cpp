#include "pkm/quadrature.hpp"

#include <cmath>

#include "pkm/errors.hpp"

namespace pkm {

QuadratureRule gauss_legendre(int N, double a, double b) {
  detail::require(N >= 1, "gauss_legendre: N must be >= 1");
  detail::require(a < b, "gauss_legendre: empty interval");

  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(N));
  rule.weights.resize(static_cast<size_t>(N));
  rule.exact_degree = 2 * N - 1;
  rule.a = a;
  rule.b = b;

  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const int half_count = (N + 1) / 2;
  for (int i = 0; i < half_count; ++i) {
    // Tricomi-style initial guess for the i-th positive root.
    double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence: (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < N; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = N * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-14) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Mirror about the midpoint; nodes ascend.
    rule.nodes[static_cast<size_t>(i)] = mid - half * x;
    rule.nodes[static_cast<size_t>(N - 1 - i)] = mid + half * x;
    rule.weights[static_cast<size_t>(i)] = half * w;
    rule.weights[static_cast<size_t>(N - 1 - i)] = half * w;
  }
  if (N % 2 == 1) rule.nodes[static_cast<size_t>(N / 2)] = mid;
  return rule;
}

}  // namespace pkm
