#pragma once

#include <cstdint>
#include <vector>

#include "farey/arith.hpp"

namespace farey {

// chi(1), ..., chi(q) for the quadratic character chi = (d/.) of the
// fundamental discriminant d, q = |d|. Built from quadratic-residue tables
// of the prime discriminants dividing d, not from the generic kronecker
// routine, so the two can cross-check each other.
std::vector<std::int8_t> kronecker_period_table(i64 d);

// One quadratic character with precomputed tail-acceleration tables.
//
// Series of the form sum chi(n) w(n) with w decreasing to zero are evaluated
// as a direct sum over complete periods M = K|d| plus corrections from
// iterated partial summation: with A_1 the running sum of chi, and
// A_{j+1} the running sum of (A_j - mean_j), every A_j is |d|-periodic, and
//
//   sum_{n>M} chi(n) w(n) = sum_{j=1..J} mean_j * w_{j-1}(M+1) + R_J,
//   |R_J| <= max|A_{J+1}| * w_J(M+1),
//
// where w_j is the j-th iterated forward difference of w, and the means,
// maxima and drift of the tables are computed once per character.
class CharacterSeries {
 public:
  // Requires a fundamental discriminant with |d| > 1 (the principal
  // character is excluded); throws not_fundamental otherwise.
  explicit CharacterSeries(i64 d);

  i64 discriminant() const { return d_; }
  i64 modulus() const { return q_; }

  // L_d(1) = sum chi(n)/n with guaranteed absolute error <= tol.
  double sum_inv_n(double tol) const;

  // sum chi(n) log(n)/n; period count doubles until two successive
  // estimates differ by less than tol.
  double sum_log_over_n(double tol) const;

  // L'_d(1) / L_d(1), by the same doubling rule applied to the ratio.
  double log_deriv_ratio(double tol) const;

 private:
  static constexpr int levels = 4;

  double direct_sum(i64 m_terms, bool log_weight) const;
  double tail_correction(i64 m_terms, bool log_weight) const;
  i64 periods_for_inv_n(double tol) const;

  i64 d_ = 0;
  i64 q_ = 0;
  std::vector<std::int8_t> chi_;
  double mean_[levels] = {};
  double max_next_ = 0;  // max |A_{levels+1}| over one period
  double drift_ = 0;     // A_{levels+1} after one full period (fp residue)
};

double l_value(i64 d, double tol);
double l_log_deriv(i64 d, double tol);

}  // namespace farey
