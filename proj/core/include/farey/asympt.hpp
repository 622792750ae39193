#pragma once

#include <span>

#include "farey/arith.hpp"

namespace farey {

// eta_{1/2}(r; D) and its derivative in s at s = 1/2.
struct EtaValue {
  i64 r = 1;
  i64 d = 0;
  double value = 1;
  double derivative = 0;
};

struct MainTermReport {
  i64 x = 0;
  i64 d = 0;          // fundamental discriminant of X
  i64 r = 1;          // conductor, X = d * r^2
  i64 upsilon = 0;    // exact count
  double l_value = 0;      // L_D(1)
  double l_log_deriv = 0;  // L'_D(1)/L_D(1)
  EtaValue eta;
  double c3 = 0;
  double main_term = 0;  // A(X)
  double residual = 0;   // (upsilon - A(X)) / sqrt(X)
};

struct FitPoint {
  i64 x = 0;
  double target = 0;
};

// Euler-Mascheroni constant, by Euler-Maclaurin summation of the harmonic
// series; at least 12 correct digits.
double euler_gamma();

// zeta(2) = pi^2/6 and zeta'(2) = -sum log(n)/n^2 (Euler-Maclaurin tail).
double zeta2();
double zeta2_deriv();

// Leading constants of Psi(N) ~ c1 N^2 log N + c2 N^2:
// c1 = 1/zeta(2), c2 = (gamma - 3/2 - zeta'(2)/zeta(2)) / zeta(2).
double const_c1();
double const_c2();

// Smooth secondary term: c1 N^2 log N + c2 N^2.
double psi_main(i64 n);

// Finite divisor sums over l | r (Moebius-weighted) evaluated at s = 1/2.
// eta_pair(1, d) == {1, 0} for every d.
EtaValue eta_pair(i64 r, i64 d);

// The analytic main term
//   A(X) = (1/zeta(2)) sqrt(X) L_D(1) eta *
//          (log X + 2 L'_D(1)/L_D(1) + eta'/eta + c3)
// against the exact upsilon(X). X must be a non-square with X = 0, 1 (mod 4);
// c3 is empirically fitted (default below), not derived.
MainTermReport main_term(i64 x, double c3, double tol);
MainTermReport main_term(i64 x, double c3, double tol,
                         std::span<const i32> primes);

// Least squares for c3: A(X; c3) is affine in c3, so the optimum of
// sum w_i (target_i - A(X_i; c3))^2 is closed-form. fit_c3 is unweighted
// (w = 1), which concentrates the fit on the largest X in the sample,
// where the neglected lower-order terms are smallest.
double fit_c3(std::span<const FitPoint> sample, double tol, int jobs = 1);
double fit_c3_weighted(std::span<const FitPoint> sample,
                       std::span<const double> weights, double tol,
                       int jobs = 1);
// Convenience: targets are the exact upsilon(x).
double fit_c3_exact(std::span<const i64> xs, double tol, int jobs = 1);

// Default c3: fitted over X = n^2 - 4, n in [100, 2000] (see fit_c3_exact).
inline constexpr double default_c3 = 1.40851739239;

}  // namespace farey
