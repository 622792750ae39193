#include "farey/spinchain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "farey/parallel.hpp"

namespace farey {

namespace {

void check_residue(i64 x, const char* who) {
  if (x <= 0) fail(errc::non_positive, std::string(who) + ": X must be positive");
  const i64 m4 = x % 4;
  if (m4 == 2 || m4 == 3) {
    fail(errc::bad_residue, std::string(who) + ": X must be 0 or 1 (mod 4)");
  }
}

}  // namespace

i64 upsilon(i64 x, std::span<const i32> primes) {
  if (x <= 0) fail(errc::non_positive, "upsilon: X must be positive");
  const i64 m4 = x % 4;
  if (m4 == 2 || m4 == 3) return 0;
  const i64 m_max = isqrt(x - 1);
  i64 total = 0;
  for (i64 m = (m4 == 0 ? 0 : 1); m <= m_max; m += 2) {
    const i64 v = (x - m * m) / 4;
    const i64 dc = divisor_count(v, primes);
    total += (m == 0) ? dc : 2 * dc;
  }
  return total;
}

i64 upsilon(i64 x) { return upsilon(x, std::span<const i32>{}); }

i64 upsilon_cut(i64 x, std::span<const i32> primes) {
  check_residue(x, "upsilon_cut");
  const i64 m4 = x % 4;
  const i64 m_max = isqrt(x - 1);
  i64 total = 0;
  for (i64 m = (m4 == 0 ? 0 : 1); m <= m_max; m += 2) {
    const i64 v = (x - m * m) / 4;
    if (m == 0) {
      total += divisor_count_below_halfsum(v, 0, x, primes);
    } else {
      total += divisor_count_below_halfsum(v, m, x, primes);
      total += divisor_count_below_halfsum(v, -m, x, primes);
    }
  }
  return total;
}

i64 upsilon_cut(i64 x) { return upsilon_cut(x, std::span<const i32>{}); }

i64 upsilon_cut_delta(i64 x) {
  const i64 cut = upsilon_cut(x);
  return upsilon(x) - 2 * cut;
}

PartitionCensus partition_census(i64 x) {
  check_residue(x, "partition_census");
  if (is_square(x)) {
    fail(errc::square_input, "partition_census: X must not be a square");
  }
  PartitionCensus out;
  const i64 m4 = x % 4;
  const i64 m_max = isqrt(x - 1);
  for (i64 am = (m4 == 0 ? 0 : 1); am <= m_max; am += 2) {
    const i64 v = (x - am * am) / 4;
    for (const i64 lambda : divisors(v)) {
      if (am == 0) {
        ++out.l0;
        if (sq(2 * lambda) < x) ++out.l0_less;
      } else {
        // classify the m = +am triple; the m = -am mirror is part of the
        // total count but belongs to no class
        const i64 t = 2 * lambda + am;
        if (sq(t) < x) {
          ++out.l1;
        } else {
          const i64 u = 2 * lambda - am;
          if (u < 0 || sq(u) < x) {
            ++out.l2;
          } else {
            ++out.l3;
          }
        }
      }
    }
  }
  return out;
}

i64 phi(i64 n) {
  if (n < 3) fail(errc::bad_trace, "phi: trace must be >= 3");
  if (n > max_phi_trace) fail(errc::overflow, "phi: N^2 - 4 exceeds 64-bit range");
  return upsilon(n * n - 4);
}

i64 phi_divisor_sum(i64 n) {
  if (n < 3) fail(errc::bad_trace, "phi_divisor_sum: trace must be >= 3");
  if (n > max_phi_trace) {
    fail(errc::overflow, "phi_divisor_sum: N too large");
  }
  i64 total = 0;
  for (i64 q = 1; q < n; ++q) {
    total += divisor_count_below(q * n - q * q - 1, q);
  }
  return 2 * total;
}

i64 phi_boca(i64 n) {
  if (n < 3) fail(errc::bad_trace, "phi_boca: trace must be >= 3");
  i64 pairs = 0;
  for (i64 q2 = 2; q2 < n; ++q2) {
    for (i64 q = 1; q < q2; ++q) {
      if (std::gcd(q, q2) != 1) continue;
      if (q2 + modinv(q2, q) == n) ++pairs;
    }
  }
  i64 triples = 0;
  i64 merged = 0;
  for (i64 q = 2; q < n; ++q) {
    for (i64 p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const i64 s = n - q - modinv(q, p);
      if (s >= 0 && s % p == 0) {
        ++merged;
        if (s > 0) ++triples;
      }
    }
  }
  // the t = 0 solutions biject onto the pairs; both bookkeepings must agree
  if (merged != pairs + triples) {
    throw std::logic_error("phi_boca: pair/triple bookkeeping mismatch");
  }
  return 2 * (pairs + triples);
}

std::vector<PsiRow> psi_batch(i64 n_max, int jobs) {
  if (n_max < 3) fail(errc::bad_trace, "psi_batch: n_max must be >= 3");
  if (n_max > max_phi_trace) fail(errc::overflow, "psi_batch: n_max too large");
  // primes to n_max cover trial division of every (X - m^2)/4 <= n_max^2/4
  const auto primes = sieve_primes(n_max);
  const std::span<const i32> table(primes);
  std::vector<PsiRow> rows(static_cast<size_t>(n_max - 2));
  parallel_index(n_max - 2, jobs, [&](i64 i) {
    const i64 n = i + 3;
    rows[static_cast<size_t>(i)] = {n, upsilon(n * n - 4, table), 0};
  });
  i64 acc = 0;
  for (auto& r : rows) {
    acc += r.phi;
    r.psi = acc;
  }
  return rows;
}

i64 rho(i64 m, i64 a) {
  if (a < 1) fail(errc::non_positive, "rho: a must be positive");
  if (a > (i64{1} << 40)) fail(errc::overflow, "rho: a too large for direct scan");
  const i64 four_a = 4 * a;
  i64 count = 0;
  for (i64 b = 0; b < 2 * a; ++b) {
    const i128 num = sq(b) - m;
    if (num % four_a != 0) continue;
    const i64 c = static_cast<i64>(num / four_a);
    const i64 g = std::gcd(std::gcd(a, b), c < 0 ? -c : c);
    if (g == 1) ++count;
  }
  return count;
}

PhiStarHistogram phi_star_histogram(i64 n_max, double bin_width, double t_max,
                                    int jobs) {
  if (n_max < 3) fail(errc::bad_trace, "phi_star_histogram: n_max must be >= 3");
  if (!(bin_width > 0) || !(t_max > 0)) {
    fail(errc::bad_binning, "phi_star_histogram: bin_width and t_max must be positive");
  }
  const double nbins_d = std::ceil(t_max / bin_width);
  if (!(nbins_d >= 1) || nbins_d > 5e7) {
    fail(errc::bad_binning, "phi_star_histogram: bin count out of range");
  }
  const auto nbins = static_cast<size_t>(nbins_d);
  PhiStarHistogram h;
  h.n_max = n_max;
  h.bin_width = bin_width;
  h.t_max = t_max;
  h.counts.assign(nbins, 0);

  const auto rows = psi_batch(n_max, jobs);
  for (const auto& r : rows) {
    const double t =
        double(r.phi) / (double(r.n) * std::log(double(r.n)));
    if (t > t_max) {
      ++h.overflow;
      continue;
    }
    // half-open bins (a, b]: t on a boundary belongs to the bin below
    i64 idx = static_cast<i64>(std::ceil(t / bin_width)) - 1;
    if (idx < 0) idx = 0;
    if (idx >= static_cast<i64>(nbins)) idx = static_cast<i64>(nbins) - 1;
    ++h.counts[static_cast<size_t>(idx)];
  }
  return h;
}

}  // namespace farey
