#include "pkm/cheb.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "pkm/errors.hpp"

namespace pkm {

namespace {

void check_finite(const std::vector<double>& c) {
  for (double v : c)
    detail::require(std::isfinite(v), "ChebPoly1: non-finite coefficient");
}

std::vector<double> trim_exact(std::vector<double> c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  return c;
}

}  // namespace

ChebPoly1::ChebPoly1(std::vector<double> coeffs) : c_(trim_exact(std::move(coeffs))) {
  check_finite(c_);
}

ChebPoly1 ChebPoly1::basis(int k) {
  detail::require(k >= 0, "ChebPoly1::basis: k must be >= 0");
  std::vector<double> c(static_cast<size_t>(k) + 1, 0.0);
  c[static_cast<size_t>(k)] = 1.0;
  return ChebPoly1(std::move(c));
}

ChebPoly1 ChebPoly1::constant(double v) { return ChebPoly1({v}); }

ChebPoly1 ChebPoly1::trimmed(double tol) const {
  std::vector<double> c = c_;
  for (double& v : c)
    if (std::abs(v) <= tol) v = 0.0;
  return ChebPoly1(std::move(c));
}

ChebPoly1& ChebPoly1::operator+=(const ChebPoly1& q) {
  if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), 0.0);
  for (size_t k = 0; k < q.c_.size(); ++k) c_[k] += q.c_[k];
  c_ = trim_exact(std::move(c_));
  return *this;
}

ChebPoly1& ChebPoly1::operator-=(const ChebPoly1& q) {
  if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), 0.0);
  for (size_t k = 0; k < q.c_.size(); ++k) c_[k] -= q.c_[k];
  c_ = trim_exact(std::move(c_));
  return *this;
}

ChebPoly1& ChebPoly1::operator*=(double s) {
  detail::require(std::isfinite(s), "ChebPoly1: non-finite scalar");
  for (double& v : c_) v *= s;
  c_ = trim_exact(std::move(c_));
  return *this;
}

ChebPoly1 operator+(ChebPoly1 p, const ChebPoly1& q) { return p += q; }
ChebPoly1 operator-(ChebPoly1 p, const ChebPoly1& q) { return p -= q; }
ChebPoly1 operator*(ChebPoly1 p, double s) { return p *= s; }
ChebPoly1 operator*(double s, ChebPoly1 p) { return p *= s; }

double eval1(const ChebPoly1& p, double x) {
  const auto& c = p.coeffs();
  const int d = p.degree();
  if (d == 0) return c[0];
  // Clenshaw recurrence, descending.
  double b1 = 0.0, b2 = 0.0;
  const double x2 = 2.0 * x;
  for (int k = d; k >= 1; --k) {
    double t = x2 * b1 - b2 + c[static_cast<size_t>(k)];
    b2 = b1;
    b1 = t;
  }
  return x * b1 - b2 + c[0];
}

ChebPoly1 mul1(const ChebPoly1& p, const ChebPoly1& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0.0) continue;
    for (size_t k = 0; k < b.size(); ++k) {
      if (b[k] == 0.0) continue;
      const double w = 0.5 * a[j] * b[k];
      out[j + k] += w;
      out[static_cast<size_t>(std::abs(static_cast<long>(j) - static_cast<long>(k)))] += w;
    }
  }
  return ChebPoly1(std::move(out));
}

ChebPoly1 derivative1(const ChebPoly1& p, int order) {
  detail::require(order >= 1, "derivative1: order must be >= 1");
  std::vector<double> c = p.coeffs();
  for (int pass = 0; pass < order; ++pass) {
    const int d = static_cast<int>(c.size()) - 1;
    if (d == 0) {
      c.assign(1, 0.0);
      continue;
    }
    std::vector<double> dc(static_cast<size_t>(d), 0.0);
    // d_{k-1} = d_{k+1} + 2k c_k, descending; the k = 0 slot is halved.
    double next1 = 0.0, next2 = 0.0;  // d_k, d_{k+1} one and two steps ahead
    for (int k = d; k >= 1; --k) {
      const double val = next2 + 2.0 * k * c[static_cast<size_t>(k)];
      dc[static_cast<size_t>(k - 1)] = val;
      next2 = next1;
      next1 = val;
    }
    dc[0] *= 0.5;
    c = std::move(dc);
  }
  return ChebPoly1(std::move(c));
}

double markov_bound(int k, int ell) {
  detail::require(k >= 0, "markov_bound: k must be >= 0");
  detail::require(ell >= 1, "markov_bound: ell must be >= 1");
  if (k == 0) return 0.0;
  const double log_pow = 2.0 * ell * std::log(static_cast<double>(k));
  if (log_pow > std::log(std::numeric_limits<double>::max()))
    throw std::overflow_error("markov_bound: k^{2l} exceeds double range");
  double dfact = 1.0;
  for (int i = 1; i <= ell; ++i) dfact *= 2.0 * i - 1.0;
  return std::pow(static_cast<double>(k), 2.0 * ell) / dfact;
}

double norm_1cheb(const ChebPoly1& p) {
  double s = 0.0;
  for (double v : p.coeffs()) s += std::abs(v);
  return s;
}

namespace {

// Golden-section maximization of |p| on [lo, hi].
double refine_abs_max(const ChebPoly1& p, double lo, double hi) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = std::abs(eval1(p, x1));
  double f2 = std::abs(eval1(p, x2));
  for (int it = 0; it < 80 && (b - a) > 1e-15; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = std::abs(eval1(p, x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = std::abs(eval1(p, x1));
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double sup_norm_sampled(const ChebPoly1& p, int grid_size, double a, double b) {
  detail::require(grid_size >= p.degree() + 1,
                  "sup_norm_sampled: grid_size must be >= deg(p)+1");
  detail::require(a < b, "sup_norm_sampled: empty interval");
  const int m = std::max(grid_size, 2);
  std::vector<double> xs(static_cast<size_t>(m));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int j = 0; j < m; ++j)
    xs[static_cast<size_t>(j)] = mid + half * std::cos(M_PI * j / (m - 1));
  double best = 0.0;
  int best_j = 0;
  for (int j = 0; j < m; ++j) {
    const double v = std::abs(eval1(p, xs[static_cast<size_t>(j)]));
    if (v > best) {
      best = v;
      best_j = j;
    }
  }
  // Nodes descend from b to a; refine inside the bracketing neighbours.
  const double hi = (best_j == 0) ? b : xs[static_cast<size_t>(best_j - 1)];
  const double lo = (best_j == m - 1) ? a : xs[static_cast<size_t>(best_j + 1)];
  return std::max(best, refine_abs_max(p, lo, hi));
}

double sup_norm_sampled(const ChebPoly1& p, int grid_size) {
  return sup_norm_sampled(p, grid_size, -1.0, 1.0);
}

std::vector<double> to_monomial(const ChebPoly1& p) {
  const int d = p.degree();
  if (d > kMonomialBridgeMaxDegree)
    std::cerr << "pkm: warning: monomial conversion at degree " << d
              << " (> " << kMonomialBridgeMaxDegree << ") is ill-conditioned\n";
  // T_{k+1} = 2x T_k - T_{k-1} carried in monomial coefficients.
  std::vector<double> out(static_cast<size_t>(d) + 1, 0.0);
  std::vector<double> tkm1{1.0};      // T_0
  std::vector<double> tk{0.0, 1.0};   // T_1
  out[0] += p.coeff(0);
  if (d >= 1)
    for (size_t i = 0; i < 2; ++i) out[i] += p.coeff(1) * tk[i];
  for (int k = 2; k <= d; ++k) {
    std::vector<double> tkp1(static_cast<size_t>(k) + 1, 0.0);
    for (size_t i = 0; i < tk.size(); ++i) tkp1[i + 1] += 2.0 * tk[i];
    for (size_t i = 0; i < tkm1.size(); ++i) tkp1[i] -= tkm1[i];
    const double ck = p.coeff(k);
    if (ck != 0.0)
      for (size_t i = 0; i < tkp1.size(); ++i) out[i] += ck * tkp1[i];
    tkm1 = std::move(tk);
    tk = std::move(tkp1);
  }
  return out;
}

ChebPoly1 from_monomial(const std::vector<double>& mono) {
  detail::require(!mono.empty(), "from_monomial: empty coefficient vector");
  const int d = static_cast<int>(mono.size()) - 1;
  if (d > kMonomialBridgeMaxDegree)
    std::cerr << "pkm: warning: monomial conversion at degree " << d
              << " (> " << kMonomialBridgeMaxDegree << ") is ill-conditioned\n";
  // x^{k+1} in Chebyshev coefficients from x^k via x T_j = (T_{j+1} + T_{|j-1|})/2.
  std::vector<double> out(static_cast<size_t>(d) + 1, 0.0);
  std::vector<double> xk{1.0};  // x^0
  out[0] += mono[0];
  for (int k = 1; k <= d; ++k) {
    std::vector<double> xk1(xk.size() + 1, 0.0);
    for (size_t j = 0; j < xk.size(); ++j) {
      if (xk[j] == 0.0) continue;
      xk1[j + 1] += 0.5 * xk[j];
      xk1[j >= 1 ? j - 1 : 1] += 0.5 * xk[j];
    }
    xk = std::move(xk1);
    const double mk = mono[static_cast<size_t>(k)];
    if (mk != 0.0)
      for (size_t j = 0; j < xk.size(); ++j) out[j] += mk * xk[j];
  }
  return ChebPoly1(std::move(out));
}

ChebPoly1 compose1(const ChebPoly1& s, const ChebPoly1& q) {
  // T_k(q) by the three-term recurrence in polynomial arithmetic.
  ChebPoly1 acc = ChebPoly1::constant(s.coeff(0));
  if (s.degree() == 0) return acc;
  ChebPoly1 tkm1 = ChebPoly1::constant(1.0);
  ChebPoly1 tk = q;
  acc += s.coeff(1) * tk;
  for (int k = 2; k <= s.degree(); ++k) {
    ChebPoly1 tkp1 = 2.0 * mul1(q, tk) - tkm1;
    if (s.coeff(k) != 0.0) acc += s.coeff(k) * tkp1;
    tkm1 = std::move(tk);
    tk = std::move(tkp1);
  }
  return acc;
}

ChebPoly1 cheb_u_in_t(int k) {
  detail::require(k >= 0, "cheb_u_in_t: k must be >= 0");
  ChebPoly1 d = derivative1(ChebPoly1::basis(k + 1), 1);
  return d * (1.0 / (k + 1));
}

// ---------------------------------------------------------------------------
// ChebPolyN
// ---------------------------------------------------------------------------

ChebPolyN::ChebPolyN(int n) : n_(n) {
  detail::require(n >= 1, "ChebPolyN: n must be >= 1");
}

ChebPolyN::ChebPolyN(int n, TermMap terms) : n_(n), terms_(std::move(terms)) {
  detail::require(n >= 1, "ChebPolyN: n must be >= 1");
  for (auto it = terms_.begin(); it != terms_.end();) {
    detail::require(static_cast<int>(it->first.size()) == n_,
                    "ChebPolyN: multi-index arity mismatch");
    for (int a : it->first)
      detail::require(a >= 0, "ChebPolyN: negative multi-index entry");
    detail::require(std::isfinite(it->second), "ChebPolyN: non-finite coefficient");
    if (it->second == 0.0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

ChebPolyN ChebPolyN::constant(int n, double v) {
  ChebPolyN p(n);
  p.add_term(Index(static_cast<size_t>(n), 0), v);
  return p;
}

ChebPolyN ChebPolyN::basis(const Index& alpha) {
  ChebPolyN p(static_cast<int>(alpha.size()));
  p.add_term(alpha, 1.0);
  return p;
}

ChebPolyN ChebPolyN::from_univariate(const ChebPoly1& p, int n, int axis) {
  detail::require(axis >= 0 && axis < n, "from_univariate: axis out of range");
  ChebPolyN out(n);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0.0) continue;
    Index alpha(static_cast<size_t>(n), 0);
    alpha[static_cast<size_t>(axis)] = k;
    out.add_term(alpha, p.coeff(k));
  }
  return out;
}

int ChebPolyN::total_degree() const {
  int d = 0;
  for (const auto& [alpha, c] : terms_) {
    int s = 0;
    for (int a : alpha) s += a;
    d = std::max(d, s);
  }
  return d;
}

int ChebPolyN::degree_along(int axis) const {
  detail::require(axis >= 0 && axis < n_, "degree_along: axis out of range");
  int d = 0;
  for (const auto& [alpha, c] : terms_)
    d = std::max(d, alpha[static_cast<size_t>(axis)]);
  return d;
}

double ChebPolyN::coeff(const Index& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0.0 : it->second;
}

void ChebPolyN::add_term(const Index& alpha, double coef) {
  detail::require(static_cast<int>(alpha.size()) == n_,
                  "ChebPolyN::add_term: arity mismatch");
  detail::require(std::isfinite(coef), "ChebPolyN::add_term: non-finite coefficient");
  if (coef == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0.0) terms_.erase(it);
  }
}

ChebPolyN& ChebPolyN::operator+=(const ChebPolyN& q) {
  detail::require(n_ == q.n_, "ChebPolyN: dimension mismatch");
  for (const auto& [alpha, c] : q.terms_) add_term(alpha, c);
  return *this;
}

ChebPolyN& ChebPolyN::operator-=(const ChebPolyN& q) {
  detail::require(n_ == q.n_, "ChebPolyN: dimension mismatch");
  for (const auto& [alpha, c] : q.terms_) add_term(alpha, -c);
  return *this;
}

ChebPolyN& ChebPolyN::operator*=(double s) {
  detail::require(std::isfinite(s), "ChebPolyN: non-finite scalar");
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= s;
  return *this;
}

ChebPolyN ChebPolyN::trimmed(double tol) const {
  TermMap out;
  for (const auto& [alpha, c] : terms_)
    if (std::abs(c) > tol) out.emplace(alpha, c);
  return ChebPolyN(n_, std::move(out));
}

ChebPoly1 ChebPolyN::to_univariate() const {
  detail::require(n_ == 1, "to_univariate: polynomial is not univariate");
  std::vector<double> c(static_cast<size_t>(degree_along(0)) + 1, 0.0);
  for (const auto& [alpha, v] : terms_) c[static_cast<size_t>(alpha[0])] = v;
  return ChebPoly1(std::move(c));
}

ChebPolyN operator+(ChebPolyN p, const ChebPolyN& q) { return p += q; }
ChebPolyN operator-(ChebPolyN p, const ChebPolyN& q) { return p -= q; }
ChebPolyN operator*(ChebPolyN p, double s) { return p *= s; }
ChebPolyN operator*(double s, ChebPolyN p) { return p *= s; }

double evalN(const ChebPolyN& p, std::span<const double> x) {
  detail::require(static_cast<int>(x.size()) == p.vars(),
                  "evalN: dimension mismatch");
  const int n = p.vars();
  // Tabulate T_0..T_dmax per axis, then sum products.
  std::vector<std::vector<double>> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int di = p.degree_along(i);
    auto& ti = t[static_cast<size_t>(i)];
    ti.resize(static_cast<size_t>(di) + 1);
    ti[0] = 1.0;
    if (di >= 1) ti[1] = x[static_cast<size_t>(i)];
    for (int k = 2; k <= di; ++k)
      ti[static_cast<size_t>(k)] =
          2.0 * x[static_cast<size_t>(i)] * ti[static_cast<size_t>(k - 1)] -
          ti[static_cast<size_t>(k - 2)];
  }
  double s = 0.0;
  for (const auto& [alpha, c] : p.terms()) {
    double prod = c;
    for (int i = 0; i < n; ++i)
      prod *= t[static_cast<size_t>(i)][static_cast<size_t>(alpha[static_cast<size_t>(i)])];
    s += prod;
  }
  return s;
}

ChebPolyN mulN(const ChebPolyN& p, const ChebPolyN& q) {
  detail::require(p.vars() == q.vars(), "mulN: dimension mismatch");
  const int n = p.vars();
  ChebPolyN out(n);
  std::vector<int> idx(static_cast<size_t>(n));
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      // Expand prod_i (T_{a_i+b_i} + T_{|a_i-b_i|})/2 over all 2^n branches.
      const double w0 = ca * cb * std::pow(0.5, n);
      const uint32_t branches = 1u << n;
      for (uint32_t mask = 0; mask < branches; ++mask) {
        for (int i = 0; i < n; ++i) {
          const int ai = a[static_cast<size_t>(i)], bi = b[static_cast<size_t>(i)];
          idx[static_cast<size_t>(i)] =
              (mask >> i) & 1u ? std::abs(ai - bi) : ai + bi;
        }
        out.add_term(idx, w0);
      }
    }
  }
  return out;
}

double norm_1cheb(const ChebPolyN& p) {
  double s = 0.0;
  for (const auto& [alpha, c] : p.terms()) s += std::abs(c);
  return s;
}

ChebPolyN derivative_axis(const ChebPolyN& p, int axis) {
  detail::require(axis >= 0 && axis < p.vars(), "derivative_axis: axis out of range");
  // Group terms by the off-axis indices and differentiate the axis slices.
  std::map<ChebPolyN::Index, std::vector<double>> slices;
  for (const auto& [alpha, c] : p.terms()) {
    ChebPolyN::Index rest = alpha;
    const int k = rest[static_cast<size_t>(axis)];
    rest[static_cast<size_t>(axis)] = 0;
    auto& sl = slices[rest];
    if (static_cast<int>(sl.size()) <= k) sl.resize(static_cast<size_t>(k) + 1, 0.0);
    sl[static_cast<size_t>(k)] = c;
  }
  ChebPolyN out(p.vars());
  for (auto& [rest, sl] : slices) {
    ChebPoly1 d = derivative1(ChebPoly1(std::move(sl)), 1);
    for (int k = 0; k <= d.degree(); ++k) {
      if (d.coeff(k) == 0.0) continue;
      ChebPolyN::Index alpha = rest;
      alpha[static_cast<size_t>(axis)] = k;
      out.add_term(alpha, d.coeff(k));
    }
  }
  return out;
}

}  // namespace pkm
