#pragma once

#include <vector>

#include "pkm/cheb.hpp"

namespace pkm {

/// Moment E[Z^ell] of N(0, sigma^2): sigma^ell (ell-1)!! for even ell, 0 for odd.
double gauss_moment(int ell, double sigma);

/// Exact image of p under convolution with the N(0, sigma^2) density, computed
/// through the monomial bridge (degree-preserving). Requires deg(p) <= 30.
/// sigma == 0 is the identity.
ChebPoly1 apply_gauss(const ChebPoly1& p, double sigma);

/// Upper bound on sup |T_k - smoothed T_k| over [-1,1]:
///   sum_{l=1}^{floor(k/2)} (2l-1)!! / ((2l)! (4l-1)!!) * (k^2 sigma)^{2l}.
double sup_error_bound(int k, double sigma);

/// Coefficient-norm bound k^{9/2} sigma^2, valid when k^2 sigma <= 1 (checked).
double cheb_error_bound(int k, double sigma);

/// Bound 2*sqrt(2)*exp(-gamma^2) on the sup distance between the full and the
/// [-R,R]-truncated convolution of T_k. Hypotheses (checked, each named on
/// failure): k sigma^2 <= 1, gamma >= 1, R >= 1, R-1 >= gamma (2+sqrt 2) sqrt(k) sigma.
double tail_bound(int k, double sigma, double R, double gamma);

/// Formula value 2*sqrt(2)*exp(-gamma^2) with no hypothesis checking.
double tail_bound_form(double gamma);

/// Gaussian concentration 2 exp(-c^2 / (2 sigma^2)); sigma must be positive.
double chernoff_tail(double c, double sigma);

/// Quadrature evaluator for the truncated convolution
///   x -> integral_{-R}^{R} exp(-(x-y)^2/(2 sigma^2))/(sqrt(2 pi) sigma) p(y) dy,
/// which is not a polynomial in x. Panel counts double until two successive
/// evaluations agree to 1e-11.
class TruncatedGaussEval {
 public:
  /// nodes: Gauss-Legendre points per panel, >= 64 required.
  TruncatedGaussEval(ChebPoly1 p, double sigma, double R, int nodes);

  double operator()(double x) const;

 private:
  ChebPoly1 p_;
  double sigma_, R_;
  int nodes_;
};

}  // namespace pkm
