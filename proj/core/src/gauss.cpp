#include "pkm/gauss.hpp"

#include <cmath>
#include <string>

#include "pkm/errors.hpp"
#include "pkm/quadrature.hpp"

namespace pkm {

double gauss_moment(int ell, double sigma) {
  detail::require(ell >= 0, "gauss_moment: ell must be >= 0");
  detail::require(sigma >= 0.0, "gauss_moment: sigma must be >= 0");
  if (ell % 2 == 1) return 0.0;
  double dfact = 1.0;  // (ell-1)!! = 1*3*...*(ell-1)
  for (int i = 1; i < ell; i += 2) dfact *= i;
  return std::pow(sigma, ell) * dfact;
}

ChebPoly1 apply_gauss(const ChebPoly1& p, double sigma) {
  detail::require(sigma >= 0.0, "apply_gauss: sigma must be >= 0");
  detail::require(p.degree() <= kMonomialBridgeMaxDegree,
                  "apply_gauss: degree exceeds the monomial bridge limit (30)");
  if (sigma == 0.0) return p;
  const std::vector<double> mono = to_monomial(p);
  const int d = static_cast<int>(mono.size()) - 1;
  // Smoothing a monomial: x^k -> sum_l C(k,2l) sigma^{2l} (2l-1)!! x^{k-2l}.
  std::vector<double> out(mono.size(), 0.0);
  for (int k = 0; k <= d; ++k) {
    if (mono[static_cast<size_t>(k)] == 0.0) continue;
    double binom = 1.0;  // C(k, 2l), updated incrementally
    for (int l = 0; 2 * l <= k; ++l) {
      if (l > 0) {
        binom *= static_cast<double>(k - 2 * l + 2) * (k - 2 * l + 1);
        binom /= static_cast<double>(2 * l) * (2 * l - 1);
      }
      out[static_cast<size_t>(k - 2 * l)] +=
          mono[static_cast<size_t>(k)] * binom * gauss_moment(2 * l, sigma);
    }
  }
  return from_monomial(out);
}

double sup_error_bound(int k, double sigma) {
  detail::require(k >= 1, "sup_error_bound: k must be >= 1");
  detail::require(sigma >= 0.0, "sup_error_bound: sigma must be >= 0");
  const double k2s = static_cast<double>(k) * k * sigma;
  double sum = 0.0;
  double dfact_2l = 1.0;   // (2l-1)!!
  double dfact_4l = 1.0;   // (4l-1)!!
  double fact_2l = 1.0;    // (2l)!
  for (int l = 1; 2 * l <= k; ++l) {
    dfact_2l *= 2.0 * l - 1.0;
    dfact_4l *= (4.0 * l - 3.0) * (4.0 * l - 1.0);
    fact_2l *= (2.0 * l - 1.0) * (2.0 * l);
    sum += dfact_2l / (fact_2l * dfact_4l) * std::pow(k2s, 2.0 * l);
  }
  return sum;
}

double cheb_error_bound(int k, double sigma) {
  detail::require(k >= 1, "cheb_error_bound: k must be >= 1");
  detail::require(static_cast<double>(k) * k * sigma <= 1.0,
                  "cheb_error_bound: hypothesis k^2 sigma <= 1 fails");
  return std::pow(static_cast<double>(k), 4.5) * sigma * sigma;
}

double tail_bound_form(double gamma) { return 2.0 * std::sqrt(2.0) * std::exp(-gamma * gamma); }

double tail_bound(int k, double sigma, double R, double gamma) {
  detail::require(k >= 1, "tail_bound: k must be >= 1");
  detail::require(k * sigma * sigma <= 1.0, "tail_bound: hypothesis k sigma^2 <= 1 fails");
  detail::require(gamma >= 1.0, "tail_bound: hypothesis gamma >= 1 fails");
  detail::require(R >= 1.0, "tail_bound: hypothesis R >= 1 fails");
  const double needed = gamma * (2.0 + std::sqrt(2.0)) * std::sqrt(static_cast<double>(k)) * sigma;
  detail::require(R - 1.0 >= needed - 1e-15,
                  "tail_bound: hypothesis R-1 >= gamma (2+sqrt 2) sqrt(k) sigma fails");
  return tail_bound_form(gamma);
}

double chernoff_tail(double c, double sigma) {
  detail::require(c >= 0.0, "chernoff_tail: c must be >= 0");
  detail::require(sigma > 0.0, "chernoff_tail: sigma must be positive");
  return 2.0 * std::exp(-c * c / (2.0 * sigma * sigma));
}

TruncatedGaussEval::TruncatedGaussEval(ChebPoly1 p, double sigma, double R, int nodes)
    : p_(std::move(p)), sigma_(sigma), R_(R) {
  detail::require(sigma > 0.0, "TruncatedGaussEval: sigma must be positive");
  detail::require(R > 0.0, "TruncatedGaussEval: R must be positive");
  detail::require(nodes >= 64, "TruncatedGaussEval: nodes must be >= 64");
  nodes_ = nodes;
}

double TruncatedGaussEval::operator()(double x) const {
  const double pref = 1.0 / (std::sqrt(2.0 * M_PI) * sigma_);
  auto integrate = [&](int panels) {
    double total = 0.0;
    const double width = 2.0 * R_ / panels;
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double lo = -R_ + pnl * width;
      const QuadratureRule gl = gauss_legendre(nodes_, lo, lo + width);
      for (size_t j = 0; j < gl.nodes.size(); ++j) {
        const double y = gl.nodes[j];
        const double z = (x - y) / sigma_;
        total += gl.weights[j] * pref * std::exp(-0.5 * z * z) * eval1(p_, y);
      }
    }
    return total;
  };
  // The integrand is analytic; double panels until stationary.
  int panels = std::max(4, static_cast<int>(std::ceil(2.0 * R_ / std::max(sigma_, 1e-3))) / 8);
  double prev = integrate(panels);
  for (int it = 0; it < 12; ++it) {
    panels *= 2;
    const double cur = integrate(panels);
    if (std::abs(cur - prev) < 1e-11) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace pkm
