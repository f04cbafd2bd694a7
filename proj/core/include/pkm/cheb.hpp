#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace pkm {

/// Dense univariate polynomial in the Chebyshev-T basis: p = sum_k c[k] T_k.
///
/// Trailing coefficients that are exactly zero are trimmed on construction;
/// degree bookkeeping is never changed by thresholding (see trimmed() for an
/// explicit tolerance-based cleanup).
class ChebPoly1 {
 public:
  ChebPoly1() : c_{0.0} {}
  explicit ChebPoly1(std::vector<double> coeffs);

  static ChebPoly1 basis(int k);        // T_k
  static ChebPoly1 constant(double v);  // v * T_0

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
  }

  /// Copy with coefficients of magnitude <= tol zeroed and the tail re-trimmed.
  ChebPoly1 trimmed(double tol) const;

  ChebPoly1& operator+=(const ChebPoly1& q);
  ChebPoly1& operator-=(const ChebPoly1& q);
  ChebPoly1& operator*=(double s);

 private:
  std::vector<double> c_;  // size degree()+1, finite, exact-zero tail removed
};

ChebPoly1 operator+(ChebPoly1 p, const ChebPoly1& q);
ChebPoly1 operator-(ChebPoly1 p, const ChebPoly1& q);
ChebPoly1 operator*(ChebPoly1 p, double s);
ChebPoly1 operator*(double s, ChebPoly1 p);

/// Clenshaw evaluation of p at x. Total function; agrees with cos(k acos x)
/// on [-1,1] and with the polynomial extension elsewhere.
double eval1(const ChebPoly1& p, double x);

/// Product via T_j T_k = (T_{j+k} + T_{|j-k|}) / 2. Result degree is exactly
/// deg(p) + deg(q) unless a leading cancellation is exact.
ChebPoly1 mul1(const ChebPoly1& p, const ChebPoly1& q);

/// Exact order-th derivative (order >= 1) in Chebyshev coefficients.
ChebPoly1 derivative1(const ChebPoly1& p, int order = 1);

/// k^{2l} / (2l-1)!!, the classical bound on |T_k^{(l)}| over [-1,1].
/// Throws std::overflow_error when k^{2l} exceeds double range.
double markov_bound(int k, int ell);

/// Sum of absolute Chebyshev coefficients.
double norm_1cheb(const ChebPoly1& p);

/// Lower bound on sup_{[-1,1]} |p| from a Chebyshev-Lobatto grid of the given
/// size (>= deg+1) plus golden-section refinement near the best samples.
double sup_norm_sampled(const ChebPoly1& p, int grid_size);

/// Same sampling scheme on an arbitrary interval [a, b].
double sup_norm_sampled(const ChebPoly1& p, int grid_size, double a, double b);

/// Monomial coefficient vector (index k -> coefficient of x^k). Conditioning
/// degrades with degree; a warning is emitted above degree 30.
std::vector<double> to_monomial(const ChebPoly1& p);
ChebPoly1 from_monomial(const std::vector<double>& mono);

/// s(q(x)) expanded in the Chebyshev basis (degree deg(s)*deg(q)).
ChebPoly1 compose1(const ChebPoly1& s, const ChebPoly1& q);

/// U_k (second kind) expressed in Chebyshev-T coefficients, via U_k = T_{k+1}'/(k+1).
ChebPoly1 cheb_u_in_t(int k);

/// Sparse multivariate polynomial: finite map multi-index -> coefficient over
/// the tensor basis T_alpha(x) = prod_i T_{alpha_i}(x_i). Stored coefficients
/// are nonzero and finite; the map is ordered, so iteration is deterministic.
class ChebPolyN {
 public:
  using Index = std::vector<int>;
  using TermMap = std::map<Index, double>;

  explicit ChebPolyN(int n);
  ChebPolyN(int n, TermMap terms);

  static ChebPolyN constant(int n, double v);
  static ChebPolyN basis(const Index& alpha);         // T_alpha
  static ChebPolyN from_univariate(const ChebPoly1& p, int n, int axis);

  int vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_along(int axis) const;
  double coeff(const Index& alpha) const;

  void add_term(const Index& alpha, double coef);     // accumulates; drops exact zeros

  ChebPolyN& operator+=(const ChebPolyN& q);
  ChebPolyN& operator-=(const ChebPolyN& q);
  ChebPolyN& operator*=(double s);

  /// Copy with coefficients of magnitude <= tol removed.
  ChebPolyN trimmed(double tol) const;

  /// Requires vars() == 1.
  ChebPoly1 to_univariate() const;

 private:
  int n_;
  TermMap terms_;
};

ChebPolyN operator+(ChebPolyN p, const ChebPolyN& q);
ChebPolyN operator-(ChebPolyN p, const ChebPolyN& q);
ChebPolyN operator*(ChebPolyN p, double s);
ChebPolyN operator*(double s, ChebPolyN p);

double evalN(const ChebPolyN& p, std::span<const double> x);
ChebPolyN mulN(const ChebPolyN& p, const ChebPolyN& q);
double norm_1cheb(const ChebPolyN& p);

/// Partial derivative along one axis, exact in Chebyshev coefficients.
ChebPolyN derivative_axis(const ChebPolyN& p, int axis);

/// Global residual tolerance used when comparing polynomials in the
/// coefficient 1-norm (certificate verification, round-trip checks).
inline constexpr double kResidualTol = 1e-10;

/// Degree above which monomial-basis bridging is flagged as ill-conditioned.
inline constexpr int kMonomialBridgeMaxDegree = 30;

}  // namespace pkm
