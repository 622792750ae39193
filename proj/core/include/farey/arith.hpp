#pragma once

#include <span>
#include <utility>
#include <vector>

#include "farey/error.hpp"
#include "farey/ints.hpp"

namespace farey {

// Decomposition X = D * r^2 with D a fundamental discriminant.
struct DiscDecomp {
  i64 x = 0;
  i64 d = 0;
  i64 r = 1;
};

// Floor square root: the unique s >= 0 with s^2 <= x < (s+1)^2.
i64 isqrt(i64 x);

bool is_square(i64 x);

// Inverse of x modulo m, normalized to {1, ..., m}. modinv(x, 1) == 1.
// Throws not_coprime when gcd(x, m) > 1.
i64 modinv(i64 x, i64 m);

// Primes <= limit, ascending.
std::vector<i32> sieve_primes(i64 limit);

// Prime factorization as (prime, exponent) pairs, primes ascending.
// The table overload uses `primes` as an accelerator and falls back to odd
// trial division past the end of the table, so any table is safe.
std::vector<std::pair<i64, int>> factorize(i64 x);
std::vector<std::pair<i64, int>> factorize(i64 x, std::span<const i32> primes);

// All positive divisors, ascending.
std::vector<i64> divisors(i64 x);

// d(x), the number of positive divisors.
i64 divisor_count(i64 x);
i64 divisor_count(i64 x, std::span<const i32> primes);

// Divisors k of x with k < n (integer cutoff).
i64 divisor_count_below(i64 x, i64 n);

// Divisors k of x with k < (m + sqrt(X))/2. The cutoff comparison is done
// in exact integer arithmetic: k < (m + sqrt(X))/2 iff 2k - m < 0, or
// (2k - m)^2 < X. No floating point is consulted.
i64 divisor_count_below_halfsum(i64 x, i64 m, i64 X);
i64 divisor_count_below_halfsum(i64 x, i64 m, i64 X,
                                std::span<const i32> primes);

// Moebius function; 0 on non-squarefree input.
int mobius(i64 n);

// Kronecker symbol (d/n), defined for all integer pairs.
// (d/0) is 1 for d = +-1 and 0 otherwise; (d/2) is 0 for even d and
// +1 / -1 for d = +-1 / +-3 (mod 8).
int kronecker(i64 d, i64 n);

// True when d is a fundamental discriminant: d = 1 (mod 4) and squarefree,
// or d = 4k with k = 2, 3 (mod 4) and k squarefree. d = 1 counts.
bool is_fundamental(i64 d);

// Unique decomposition X = D * r^2 with D fundamental. Requires X != 0 and
// X = 0, 1 (mod 4); throws bad_discriminant otherwise.
DiscDecomp fund_disc_decompose(i64 x);

}  // namespace farey
