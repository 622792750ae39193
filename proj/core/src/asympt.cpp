#include "farey/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "farey/error.hpp"
#include "farey/lseries.hpp"
#include "farey/parallel.hpp"
#include "farey/spinchain.hpp"

namespace farey {

namespace {

// Euler-Maclaurin cutoff; remainders past the listed correction terms are
// below 1e-18 here, well under double precision.
constexpr i64 em_cutoff = 100000;

double kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
  return sum;
}

}  // namespace

double euler_gamma() {
  static const double value = [] {
    double sum = 0, comp = 0;
    for (i64 k = 1; k <= em_cutoff; ++k) {
      kahan_add(sum, comp, 1.0 / double(k));
    }
    const double n = double(em_cutoff);
    const double n2 = n * n;
    return sum - std::log(n) - 1 / (2 * n) + 1 / (12 * n2) -
           1 / (120 * n2 * n2);
  }();
  return value;
}

double zeta2() {
  static const double value = [] {
    const double pi = std::acos(-1.0);
    return pi * pi / 6;
  }();
  return value;
}

double zeta2_deriv() {
  // zeta'(2) = -sum log(n)/n^2; tail from N by Euler-Maclaurin with
  // f = log(x)/x^2, f' = (1 - 2 log x)/x^3, f''' = (26 - 24 log x)/x^5.
  static const double value = [] {
    double sum = 0, comp = 0;
    for (i64 k = 2; k < em_cutoff; ++k) {
      kahan_add(sum, comp, std::log(double(k)) / (double(k) * double(k)));
    }
    const double n = double(em_cutoff);
    const double ln = std::log(n);
    const double tail = (ln + 1) / n + ln / (2 * n * n) -
                        (1 - 2 * ln) / (12 * n * n * n) +
                        (26 - 24 * ln) / (720 * n * n * n * n * n);
    return -(sum + tail);
  }();
  return value;
}

double const_c1() {
  static const double value = 1.0 / zeta2();
  return value;
}

double const_c2() {
  static const double value =
      (euler_gamma() - 1.5 - zeta2_deriv() / zeta2()) / zeta2();
  return value;
}

double psi_main(i64 n) {
  if (n < 3) fail(errc::bad_trace, "psi_main: N must be at least 3");
  const double x = double(n);
  return const_c1() * x * x * std::log(x) + const_c2() * x * x;
}

EtaValue eta_pair(i64 r, i64 d) {
  if (r < 1) fail(errc::non_positive, "eta_pair: r must be positive");
  EtaValue out{r, d, 0, 0};
  for (const i64 l : divisors(r)) {
    const int mu = mobius(l);
    if (mu == 0) continue;
    const int chi = kronecker(d, l);
    if (chi == 0) continue;
    double inv_sum = 0;       // sum of 1/k over k | r/l
    double log_inv_sum = 0;   // sum of log(k)/k over k | r/l
    for (const i64 k : divisors(r / l)) {
      inv_sum += 1.0 / double(k);
      log_inv_sum += std::log(double(k)) / double(k);
    }
    const double w = double(mu * chi) / double(l);
    out.value += w * inv_sum;
    out.derivative +=
        w * (-2 * std::log(double(l)) * inv_sum - 4 * log_inv_sum);
  }
  return out;
}

namespace {

// A(X; c3) = offset + slope * c3 with
// slope = (1/zeta(2)) sqrt(X) L_D(1) eta.
struct Affine {
  MainTermReport rep;
  double offset = 0;
  double slope = 0;
};

Affine assemble(i64 x, double tol) {
  if (x <= 0) fail(errc::non_positive, "main_term: X must be positive");
  if (!(tol > 0)) fail(errc::non_positive, "main_term: tol must be positive");
  const i64 res = x % 4;
  if (res == 2 || res == 3) {
    fail(errc::bad_residue, "main_term: X must be 0 or 1 mod 4");
  }
  if (is_square(x)) {
    fail(errc::square_input, "main_term: square X has no usable discriminant");
  }
  Affine a;
  const DiscDecomp dec = fund_disc_decompose(x);
  MainTermReport& rep = a.rep;
  rep.x = x;
  rep.d = dec.d;
  rep.r = dec.r;
  const CharacterSeries series(dec.d);
  rep.l_value = series.sum_inv_n(tol);
  rep.l_log_deriv = series.log_deriv_ratio(tol);
  rep.eta = eta_pair(dec.r, dec.d);
  a.slope = std::sqrt(double(x)) * rep.l_value * rep.eta.value / zeta2();
  a.offset = a.slope * (std::log(double(x)) + 2 * rep.l_log_deriv +
                        rep.eta.derivative / rep.eta.value);
  return a;
}

MainTermReport finish(Affine a, i64 ups, double c3) {
  a.rep.upsilon = ups;
  a.rep.c3 = c3;
  a.rep.main_term = a.offset + a.slope * c3;
  a.rep.residual =
      (double(ups) - a.rep.main_term) / std::sqrt(double(a.rep.x));
  return a.rep;
}

double fit_core(std::span<const FitPoint> sample,
                std::span<const double> weights, double tol, int jobs) {
  if (sample.empty()) fail(errc::degenerate_sample, "fit_c3: empty sample");
  if (!weights.empty() && weights.size() != sample.size()) {
    fail(errc::degenerate_sample, "fit_c3: one weight per sample point");
  }
  std::vector<double> num(sample.size());
  std::vector<double> den(sample.size());
  parallel_index(i64(sample.size()), jobs, [&](i64 i) {
    const FitPoint& pt = sample[size_t(i)];
    const Affine a = assemble(pt.x, tol);
    const double w = weights.empty() ? 1.0 : weights[size_t(i)];
    num[size_t(i)] = w * a.slope * (pt.target - a.offset);
    den[size_t(i)] = w * a.slope * a.slope;
  });
  double nsum = 0, ncomp = 0, dsum = 0, dcomp = 0;
  for (size_t i = 0; i < sample.size(); ++i) {
    kahan_add(nsum, ncomp, num[i]);
    kahan_add(dsum, dcomp, den[i]);
  }
  if (!(dsum > 0)) fail(errc::degenerate_sample, "fit_c3: weights vanish");
  return nsum / dsum;
}

}  // namespace

MainTermReport main_term(i64 x, double c3, double tol) {
  Affine a = assemble(x, tol);
  return finish(a, upsilon(x), c3);
}

MainTermReport main_term(i64 x, double c3, double tol,
                         std::span<const i32> primes) {
  Affine a = assemble(x, tol);
  return finish(a, upsilon(x, primes), c3);
}

double fit_c3(std::span<const FitPoint> sample, double tol, int jobs) {
  return fit_core(sample, {}, tol, jobs);
}

double fit_c3_weighted(std::span<const FitPoint> sample,
                       std::span<const double> weights, double tol, int jobs) {
  if (weights.empty()) fail(errc::degenerate_sample, "fit_c3: weights empty");
  return fit_core(sample, weights, tol, jobs);
}

double fit_c3_exact(std::span<const i64> xs, double tol, int jobs) {
  if (xs.empty()) fail(errc::degenerate_sample, "fit_c3: empty sample");
  i64 top = 1;
  for (const i64 x : xs) top = std::max(top, x);
  const std::vector<i32> primes = sieve_primes(isqrt(top) + 1);
  std::vector<FitPoint> sample(xs.size());
  parallel_index(i64(xs.size()), jobs, [&](i64 i) {
    sample[size_t(i)] = {xs[size_t(i)], double(upsilon(xs[size_t(i)], primes))};
  });
  return fit_core(sample, {}, tol, jobs);
}

}  // namespace farey
