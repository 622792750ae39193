#include "farey/verify.hpp"

#include <atomic>

#include "farey/error.hpp"
#include "farey/monoid.hpp"
#include "farey/parallel.hpp"
#include "farey/spinchain.hpp"

namespace farey {

namespace {

VerifyMismatch inspect(i64 n) {
  VerifyMismatch m;
  m.n = n;
  m.phi_main = phi(n);
  m.phi_divisor = phi_divisor_sum(n);
  m.phi_boca = phi_boca(n);
  m.phi_oracle = phi_oracle(n);
  const i64 x = n * n - 4;
  m.cut_delta = upsilon_cut_delta(x);
  const PartitionCensus c = partition_census(x);
  const i64 ups = upsilon(x);
  const i64 cut = upsilon_cut(x);
  m.census_ok = ups == 2 * c.l0_less + 4 * c.l1 + 2 * c.l2 &&
                cut == c.l0_less + 2 * c.l1 + c.l2 && c.l1 == c.l3;
  return m;
}

bool clean(const VerifyMismatch& m) {
  return m.phi_main == m.phi_divisor && m.phi_main == m.phi_boca &&
         m.phi_main == m.phi_oracle && m.cut_delta == 0 && m.census_ok;
}

}  // namespace

std::optional<VerifyMismatch> verify_range(i64 lo, i64 hi, int jobs) {
  if (lo < 3) fail(errc::bad_trace, "verify_range: range starts below 3");
  if (hi < lo) fail(errc::bad_trace, "verify_range: empty range");
  std::atomic<i64> first{hi + 1};
  parallel_index(hi - lo + 1, jobs, [&](i64 idx) {
    const i64 n = lo + idx;
    if (n >= first.load(std::memory_order_relaxed)) return;
    if (clean(inspect(n))) return;
    i64 seen = first.load(std::memory_order_relaxed);
    while (n < seen &&
           !first.compare_exchange_weak(seen, n, std::memory_order_relaxed)) {
    }
  });
  const i64 n = first.load();
  if (n > hi) return std::nullopt;
  return inspect(n);
}

}  // namespace farey
