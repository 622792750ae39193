#include "farey/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace farey {

i64 isqrt(i64 x) {
  if (x < 0) fail(errc::non_positive, "isqrt: negative input");
  if (x == 0) return 0;
  i64 s = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (s > 0 && sq(s) > x) --s;
  while (sq(s + 1) <= x) ++s;
  return s;
}

bool is_square(i64 x) {
  if (x < 0) return false;
  const i64 s = isqrt(x);
  return s * s == x;
}

i64 modinv(i64 x, i64 m) {
  if (m < 1) fail(errc::non_positive, "modinv: modulus must be positive");
  if (m == 1) return 1;
  i64 a = x % m;
  if (a < 0) a += m;
  // extended Euclid on (a, m); gcd lands in old_r, the coefficient in old_s
  i64 old_r = a, r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(errc::not_coprime, "modinv: arguments not coprime");
  i64 inv = old_s % m;
  if (inv <= 0) inv += m;
  return inv;
}

std::vector<i32> sieve_primes(i64 limit) {
  if (limit < 0) fail(errc::non_positive, "sieve_primes: negative limit");
  if (limit > (i64{1} << 31)) {
    fail(errc::overflow, "sieve_primes: limit too large for a prime table");
  }
  std::vector<i32> out;
  if (limit < 2) return out;
  const auto n = static_cast<size_t>(limit);
  std::vector<bool> composite(n + 1, false);
  for (size_t p = 2; p * p <= n; ++p) {
    if (composite[p]) continue;
    for (size_t k = p * p; k <= n; k += p) composite[k] = true;
  }
  out.reserve(static_cast<size_t>(
      limit / std::max<i64>(2, static_cast<i64>(std::log(double(limit))) - 1)));
  for (size_t p = 2; p <= n; ++p) {
    if (!composite[p]) out.push_back(static_cast<i32>(p));
  }
  return out;
}

namespace {

// Appends (p, e) pairs of x's factorization starting from trial divisor
// candidates in `primes`, then odd numbers past the table.
void factorize_into(i64 x, std::span<const i32> primes,
                    std::vector<std::pair<i64, int>>& out) {
  i64 v = x;
  i64 last = 1;
  for (const i32 p32 : primes) {
    const i64 p = p32;
    if (p * p > v) {
      last = p;
      break;
    }
    if (v % p == 0) {
      int e = 0;
      do {
        v /= p;
        ++e;
      } while (v % p == 0);
      out.emplace_back(p, e);
    }
    last = p;
  }
  if (last * last <= v) {
    // table exhausted before sqrt(v); keep going with plain trial division
    i64 p = std::max<i64>(last | 1, 3);
    if (last < 2 && v % 2 == 0) {
      int e = 0;
      do {
        v /= 2;
        ++e;
      } while (v % 2 == 0);
      out.emplace_back(2, e);
    }
    for (; p * p <= v; p += 2) {
      if (v % p == 0) {
        int e = 0;
        do {
          v /= p;
          ++e;
        } while (v % p == 0);
        out.emplace_back(p, e);
      }
    }
  }
  if (v > 1) out.emplace_back(v, 1);
}

template <class Fn>
void for_each_divisor_rec(const std::vector<std::pair<i64, int>>& factors,
                          size_t idx, i64 value, Fn&& fn) {
  if (idx == factors.size()) {
    fn(value);
    return;
  }
  const i64 p = factors[idx].first;
  const int e = factors[idx].second;
  i64 v = value;
  for (int i = 0;; ++i) {
    for_each_divisor_rec(factors, idx + 1, v, fn);
    if (i == e) break;
    v *= p;
  }
}

template <class Fn>
void for_each_divisor(const std::vector<std::pair<i64, int>>& factors,
                      Fn&& fn) {
  for_each_divisor_rec(factors, 0, 1, fn);
}

}  // namespace

std::vector<std::pair<i64, int>> factorize(i64 x, std::span<const i32> primes) {
  if (x <= 0) fail(errc::non_positive, "factorize: input must be positive");
  std::vector<std::pair<i64, int>> out;
  factorize_into(x, primes, out);
  return out;
}

std::vector<std::pair<i64, int>> factorize(i64 x) {
  return factorize(x, std::span<const i32>{});
}

std::vector<i64> divisors(i64 x) {
  const auto factors = factorize(x);
  std::vector<i64> out;
  out.push_back(1);
  for (const auto& [p, e] : factors) {
    const size_t n = out.size();
    i64 pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 divisor_count(i64 x, std::span<const i32> primes) {
  if (x <= 0) fail(errc::non_positive, "divisor_count: input must be positive");
  std::vector<std::pair<i64, int>> factors;
  factorize_into(x, primes, factors);
  i64 count = 1;
  for (const auto& [p, e] : factors) count *= e + 1;
  return count;
}

i64 divisor_count(i64 x) { return divisor_count(x, std::span<const i32>{}); }

i64 divisor_count_below(i64 x, i64 n) {
  if (x <= 0) fail(errc::non_positive, "divisor_count_below: x must be positive");
  i64 count = 0;
  // walk divisor pairs (d, x/d)
  for (i64 d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    if (d < n) ++count;
    const i64 e = x / d;
    if (e != d && e < n) ++count;
  }
  return count;
}

namespace {

// k < (m + sqrt(X))/2 without floating point.
inline bool below_halfsum(i64 k, i64 m, i64 X) {
  const i64 t = 2 * k - m;
  return t < 0 || sq(t) < X;
}

}  // namespace

i64 divisor_count_below_halfsum(i64 x, i64 m, i64 X,
                                std::span<const i32> primes) {
  if (x <= 0) {
    fail(errc::non_positive, "divisor_count_below_halfsum: x must be positive");
  }
  if (X <= 0) {
    fail(errc::non_positive, "divisor_count_below_halfsum: X must be positive");
  }
  std::vector<std::pair<i64, int>> factors;
  factorize_into(x, primes, factors);
  i64 count = 0;
  for_each_divisor(factors, [&](i64 k) {
    if (below_halfsum(k, m, X)) ++count;
  });
  return count;
}

i64 divisor_count_below_halfsum(i64 x, i64 m, i64 X) {
  return divisor_count_below_halfsum(x, m, X, std::span<const i32>{});
}

int mobius(i64 n) {
  if (n <= 0) fail(errc::non_positive, "mobius: input must be positive");
  const auto factors = factorize(n);
  for (const auto& [p, e] : factors) {
    if (e > 1) return 0;
  }
  return (factors.size() % 2 == 0) ? 1 : -1;
}

int kronecker(i64 d, i64 n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  if (((d | n) & 1) == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  // strip factors of 2 from n with the (d/2) rule
  const int twos = std::countr_zero(static_cast<u64>(n));
  n >>= twos;
  if (twos & 1) {
    const i64 dm8 = ((d % 8) + 8) % 8;
    if (dm8 == 3 || dm8 == 5) result = -result;
  }
  // Jacobi loop on odd n > 0
  i64 a = d % n;
  if (a < 0) a += n;
  while (a != 0) {
    const int z = std::countr_zero(static_cast<u64>(a));
    a >>= z;
    if (z & 1) {
      const i64 nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    if ((a & n & 2) != 0) result = -result;  // both = 3 (mod 4)
    const i64 t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

namespace {

bool is_squarefree(i64 n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  return mobius(n) != 0;
}

}  // namespace

bool is_fundamental(i64 d) {
  if (d == 0) return false;
  const i64 m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return is_squarefree(d);
  if (m4 == 0) {
    const i64 k = d / 4;
    const i64 km4 = ((k % 4) + 4) % 4;
    return (km4 == 2 || km4 == 3) && is_squarefree(k);
  }
  return false;
}

DiscDecomp fund_disc_decompose(i64 x) {
  if (x == 0) fail(errc::bad_discriminant, "fund_disc_decompose: X must be nonzero");
  const i64 m4 = ((x % 4) + 4) % 4;
  if (m4 == 2 || m4 == 3) {
    fail(errc::bad_discriminant,
         "fund_disc_decompose: X must be 0 or 1 (mod 4)");
  }
  const i64 ax = x < 0 ? -x : x;
  i64 kernel = x < 0 ? -1 : 1;
  i64 f = 1;
  for (const auto& [p, e] : factorize(ax)) {
    if (e & 1) kernel *= p;
    for (int i = 0; i < e / 2; ++i) f *= p;
  }
  const i64 km4 = ((kernel % 4) + 4) % 4;
  if (km4 == 1) return {x, kernel, f};
  // kernel = 2, 3 (mod 4): X = 0 (mod 4) forces f even here
  return {x, 4 * kernel, f / 2};
}

}  // namespace farey
