#pragma once

#include "pkm/cheb.hpp"

namespace pkm {

/// Polynomial approximation of t -> exp(-t) on [0, b], held in the Chebyshev
/// basis of the mapped variable u = 2t/b - 1.
struct ExpApprox {
  double b = 1.0;
  double delta = 0.0;            // guaranteed sup error on [0, b]
  ChebPoly1 coeffs;              // in u on [-1, 1]
  int theoretical_degree = 0;    // ceil(sqrt(2 theta log(4/delta))) accounting
  int achieved_degree = 0;
  double achieved_error = 0.0;   // measured on the verification grid

  double eval(double t) const;
};

/// The ceil(sqrt(2 theta log(4/delta))) degree with
/// theta = ceil(max(b e^2 / 2, log(2/delta))).
int theoretical_exp_degree(double b, double delta);

/// Chebyshev truncation of exp(-t) on [0, b], refined until a 10^4-point
/// uniform grid (plus endpoints) meets |exp(-t) - s(t)| <= delta. Fails if the
/// cap of 2x the theoretical degree cannot reach delta.
ExpApprox build_exp_approx(double b, double delta);

/// Parameter schedule delta = r^{-7/2}, sigma = sqrt(log(1/delta))/r,
/// gamma = sqrt(5/2 log r), R = 1 + gamma (2+sqrt 2) sqrt(d) sigma,
/// b = (R+1)^2/(4 sigma^2), with the feasibility predicate
/// r / log r >= 10 sqrt(35) (1 + 1/sqrt 2) d^{5/2}.
struct KernelSchedule {
  int r = 0, d = 0;
  double delta = 0, sigma = 0, gamma = 0, R = 0, b = 0;
  bool feasible = false;
};

KernelSchedule schedule(int r, int d);

// Schedule formula pieces, usable at real-valued r for identity checks.
double schedule_delta(double r);
double schedule_sigma(double r);
double schedule_gamma(double r);
double schedule_feasibility_threshold(int d);  // 10 sqrt(35)(1+1/sqrt 2) d^{5/2}

/// Squared-exponential kernel (x,y) -> s((x-y)^2 / (4 sigma^2))^2 / (sqrt(2 pi) sigma),
/// nonnegative by construction. Built either from the schedule at level r or
/// from directly chosen (sigma, delta, R) — the latter is flagged schedule_off.
struct KernelSpec {
  int r = 0, d = 0;              // zero when schedule_off
  double delta = 0, sigma = 0, gamma = 0, R = 0, b = 0;
  ExpApprox s;
  int kernel_degree = 0;         // 4 * achieved degree of s
  double prefactor = 0;          // 1 / (sqrt(2 pi) sigma)
  bool schedule_off = false;
};

KernelSpec build_kernel(int r, int d);
KernelSpec build_kernel_direct(double sigma, double delta, double R);

double kernel_eval(const KernelSpec& kernel, double x, double y);

/// Chebyshev polynomial (in x) of the kernel slice x -> kernel(x, y): the
/// square root s((x-y)^2/(4 sigma^2)) without the prefactor; degree
/// 2 * achieved_degree of s.
ChebPoly1 kernel_slice_root(const KernelSpec& kernel, double y);

}  // namespace pkm
