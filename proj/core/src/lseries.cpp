#include "farey/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace farey {

namespace {

// Legendre symbol table for one odd prime p: leg[r] = (r/p) for r in [0, p).
std::vector<std::int8_t> legendre_table(i64 p) {
  std::vector<std::int8_t> leg(static_cast<size_t>(p), -1);
  leg[0] = 0;
  for (i64 k = 1; k <= (p - 1) / 2; ++k) {
    leg[static_cast<size_t>((k * k) % p)] = 1;
  }
  return leg;
}

constexpr std::int8_t chi_m4[4] = {0, 1, 0, -1};
constexpr std::int8_t chi_p8[8] = {0, 1, 0, -1, 0, -1, 0, 1};
constexpr std::int8_t chi_m8[8] = {0, 1, 0, 1, 0, -1, 0, -1};

}  // namespace

std::vector<std::int8_t> kronecker_period_table(i64 d) {
  if (!is_fundamental(d) || d == 1) {
    fail(errc::not_fundamental, "kronecker_period_table: need a fundamental discriminant != 1");
  }
  const i64 q = d < 0 ? -d : d;
  if (q > (i64{1} << 31)) {
    fail(errc::overflow, "kronecker_period_table: period too large for an in-memory table");
  }

  // split d into prime discriminants: (+-p) for odd p | d, and one of
  // -4, 8, -8 carrying the even part and the leftover sign
  std::vector<std::vector<std::int8_t>> odd_tables;
  std::vector<i64> odd_primes;
  i64 odd_disc = 1;
  for (const auto& [p, e] : factorize(q)) {
    if (p == 2) continue;
    odd_primes.push_back(p);
    odd_tables.push_back(legendre_table(p));
    odd_disc *= (p % 4 == 1) ? p : -p;
  }
  const i64 two_disc = d / odd_disc;
  const std::int8_t* two_table = nullptr;
  i64 two_mod = 1;
  switch (two_disc) {
    case 1:
      break;
    case -4:
      two_table = chi_m4;
      two_mod = 4;
      break;
    case 8:
      two_table = chi_p8;
      two_mod = 8;
      break;
    case -8:
      two_table = chi_m8;
      two_mod = 8;
      break;
    default:
      throw std::logic_error("kronecker_period_table: bad even part");
  }

  std::vector<std::int8_t> chi(static_cast<size_t>(q));
  std::vector<i64> res(odd_primes.size(), 0);
  i64 res2 = 0;
  i64 balance = 0;
  for (i64 n = 1; n <= q; ++n) {
    for (size_t i = 0; i < odd_primes.size(); ++i) {
      if (++res[i] == odd_primes[i]) res[i] = 0;
    }
    if (++res2 == two_mod) res2 = 0;
    int v = two_table ? two_table[res2] : 1;
    for (size_t i = 0; i < odd_primes.size() && v != 0; ++i) {
      v *= odd_tables[i][static_cast<size_t>(res[i])];
    }
    chi[static_cast<size_t>(n - 1)] = static_cast<std::int8_t>(v);
    balance += v;
  }
  if (balance != 0) {
    throw std::logic_error("kronecker_period_table: period does not balance");
  }
  return chi;
}

CharacterSeries::CharacterSeries(i64 d)
    : d_(d), q_(d < 0 ? -d : d), chi_(kronecker_period_table(d)) {
  // tail tables: pass j computes mean_j = mean of A_j over one period,
  // where A_1 accumulates chi and A_{j+1} accumulates A_j - mean_j
  for (int j = 1; j <= levels; ++j) {
    double acc[levels + 1] = {};
    double total = 0;
    for (i64 idx = 0; idx < q_; ++idx) {
      acc[1] += chi_[static_cast<size_t>(idx)];
      for (int i = 2; i <= j; ++i) acc[i] += acc[i - 1] - mean_[i - 2];
      total += acc[j];
    }
    mean_[j - 1] = total / double(q_);
  }
  double acc[levels + 2] = {};
  double mx = 0;
  for (i64 idx = 0; idx < q_; ++idx) {
    acc[1] += chi_[static_cast<size_t>(idx)];
    for (int i = 2; i <= levels + 1; ++i) acc[i] += acc[i - 1] - mean_[i - 2];
    mx = std::max(mx, std::abs(acc[levels + 1]));
  }
  max_next_ = mx;
  drift_ = std::abs(acc[levels + 1]);
}

namespace {

// j-th iterated forward difference of 1/n at n, exactly j!/(n...(n+j)).
double wdiff_inv(int j, double n) {
  double r = 1;
  for (int t = 2; t <= j; ++t) r *= t;
  for (int t = 0; t <= j; ++t) r /= (n + t);
  return r;
}

// j-th iterated forward difference of log(n)/n at n, via the midpoint of
// the j-th derivative: j! (log x - H_j) / x^{j+1} at x = n + j/2.
double wdiff_log(int j, double n) {
  static constexpr double harmonic[8] = {0.0,
                                         1.0,
                                         1.5,
                                         11.0 / 6,
                                         25.0 / 12,
                                         137.0 / 60,
                                         49.0 / 20,
                                         363.0 / 140};
  const double x = n + double(j) / 2;
  double fact = 1;
  for (int t = 2; t <= j; ++t) fact *= t;
  return fact * (std::log(x) - harmonic[j]) / std::pow(x, j + 1);
}

}  // namespace

double CharacterSeries::direct_sum(i64 m_terms, bool log_weight) const {
  // Kahan summation; chi values cycle through the stored period
  double sum = 0, comp = 0;
  i64 idx = 0;
  double logn = 0;
  for (i64 n = 1; n <= m_terms; ++n) {
    if (log_weight && n > 1) logn += std::log1p(1.0 / double(n - 1));
    const int c = chi_[static_cast<size_t>(idx)];
    if (++idx == q_) idx = 0;
    if (c == 0) continue;
    const double term =
        (log_weight ? logn : 1.0) / double(n) * double(c);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double CharacterSeries::tail_correction(i64 m_terms, bool log_weight) const {
  const double n1 = double(m_terms) + 1;
  double corr = 0;
  for (int j = 1; j <= levels; ++j) {
    const double w = log_weight ? wdiff_log(j - 1, n1) : wdiff_inv(j - 1, n1);
    corr += mean_[j - 1] * w;
  }
  return corr;
}

i64 CharacterSeries::periods_for_inv_n(double tol) const {
  if (!(tol > 0)) fail(errc::non_positive, "l_value: tol must be positive");
  constexpr i64 max_terms = i64{1} << 33;
  i64 k = std::max<i64>(1, (64 + q_ - 1) / q_);
  for (;;) {
    const i64 m = k * q_;
    const double bound =
        (max_next_ + double(k) * drift_) * wdiff_inv(levels, double(m) + 1);
    if (bound * 1.05 <= tol) return k;
    if (m > max_terms) {
      fail(errc::no_convergence, "l_value: cannot meet tolerance");
    }
    k *= 2;
  }
}

double CharacterSeries::sum_inv_n(double tol) const {
  const i64 k = periods_for_inv_n(tol);
  const i64 m = k * q_;
  return direct_sum(m, false) + tail_correction(m, false);
}

double CharacterSeries::sum_log_over_n(double tol) const {
  if (!(tol > 0)) fail(errc::non_positive, "l_log_deriv: tol must be positive");
  constexpr i64 max_terms = i64{1} << 33;
  i64 k = std::max<i64>(1, (64 + q_ - 1) / q_);
  double prev = direct_sum(k * q_, true) + tail_correction(k * q_, true);
  for (;;) {
    k *= 2;
    if (k * q_ > max_terms) {
      fail(errc::no_convergence, "sum_log_over_n: cannot meet tolerance");
    }
    const double cur = direct_sum(k * q_, true) + tail_correction(k * q_, true);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
}

double CharacterSeries::log_deriv_ratio(double tol) const {
  if (!(tol > 0)) fail(errc::non_positive, "l_log_deriv: tol must be positive");
  const double l1 = sum_inv_n(tol / 8);
  constexpr i64 max_terms = i64{1} << 33;
  i64 k = std::max<i64>(1, (64 + q_ - 1) / q_);
  double prev = -(direct_sum(k * q_, true) + tail_correction(k * q_, true)) / l1;
  for (;;) {
    k *= 2;
    if (k * q_ > max_terms) {
      fail(errc::no_convergence, "l_log_deriv: cannot meet tolerance");
    }
    const double cur =
        -(direct_sum(k * q_, true) + tail_correction(k * q_, true)) / l1;
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
}

double l_value(i64 d, double tol) { return CharacterSeries(d).sum_inv_n(tol); }

double l_log_deriv(i64 d, double tol) {
  return CharacterSeries(d).log_deriv_ratio(tol);
}

}  // namespace farey
