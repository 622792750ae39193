#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "farey/arith.hpp"

namespace farey {

// Census of the lattice triples (lambda, mu, m) with 4*lambda*mu + m^2 = X,
// lambda, mu >= 1, classified by the position of 2*lambda relative to
// -m + sqrt(X) and m + sqrt(X). Only defined for non-square X, where no
// boundary ties can occur.
struct PartitionCensus {
  i64 l0 = 0;       // m == 0
  i64 l0_less = 0;  // m == 0 and 2*lambda < sqrt(X)
  i64 l1 = 0;       // m >= 1 and 2*lambda < -m + sqrt(X)
  i64 l2 = 0;       // m >= 1 and -m + sqrt(X) <= 2*lambda <= m + sqrt(X)
  i64 l3 = 0;       // m >= 1 and 2*lambda > m + sqrt(X)
};

struct PsiRow {
  i64 n = 0;
  i64 phi = 0;
  i64 psi = 0;
};

// Histogram of phi*(n) = phi(n)/(n log n) over n in [3, n_max], with
// half-open bins (i*w, (i+1)*w] and an overflow bin above t_max.
struct PhiStarHistogram {
  i64 n_max = 0;
  double bin_width = 0;
  double t_max = 0;
  std::vector<i64> counts;
  i64 overflow = 0;

  double bin_center(size_t i) const { return (double(i) + 0.5) * bin_width; }
  double frequency(size_t i) const {
    return double(counts[i]) / double(n_max);
  }
  double overflow_frequency() const { return double(overflow) / double(n_max); }
};

// Upsilon(X): number of triples (lambda, mu, m) with 4*lambda*mu + m^2 = X,
// computed as a divisor sum over admissible m. Zero when X = 2, 3 (mod 4).
i64 upsilon(i64 x);
i64 upsilon(i64 x, std::span<const i32> primes);

// Upsilon_<(X): same divisor sum, but each m only counts divisors
// k < (m + sqrt(X))/2 (exact integer comparison). Requires X = 0, 1 (mod 4).
i64 upsilon_cut(i64 x);
i64 upsilon_cut(i64 x, std::span<const i32> primes);

// upsilon(X) - 2*upsilon_cut(X): 0 for non-square X, sqrt(X) - 1 for squares.
i64 upsilon_cut_delta(i64 x);

// Full classification of the triples behind upsilon/upsilon_cut.
// Throws square_input on perfect squares.
PartitionCensus partition_census(i64 x);

// Phi(N): number of generator products with trace N, via upsilon(N^2 - 4).
// Production path; exact for 3 <= N <= max_phi_trace.
i64 phi(i64 n);

// Phi(N) as 2 * sum over 1 <= q < N of the divisors k of qN - q^2 - 1
// with k < q. Slower cross-check.
i64 phi_divisor_sum(i64 n);

// Phi(N) as twice the modular-inverse pair/triple count. Slower cross-check;
// also recomputes itself with the merged t >= 0 bookkeeping and insists the
// two agree.
i64 phi_boca(i64 n);

// Rows (n, Phi(n), Psi(n)) for n in [3, n_max]. Psi is the running total of
// Phi from 3. Output is independent of the worker count.
std::vector<PsiRow> psi_batch(i64 n_max, int jobs = 1);

// rho_m(a): number of b in [0, 2a) with b^2 = m (mod 4a) and
// gcd(a, b, (b^2 - m)/(4a)) = 1; gcds are taken on absolute values and
// gcd(x, 0) = x. The b-range is counted literally as given.
i64 rho(i64 m, i64 a);

PhiStarHistogram phi_star_histogram(i64 n_max, double bin_width, double t_max,
                                    int jobs = 1);

}  // namespace farey
