#include "farey/monoid.hpp"

#include <vector>

namespace farey {

Mat2 right_multiply(const Mat2& state, Letter letter) {
  Mat2 r = state;
  bool of = false;
  if (letter == Letter::A) {
    // (a, b, c, d) -> (a+b, b, c+d, d)
    of |= __builtin_add_overflow(state.a, state.b, &r.a);
    of |= __builtin_add_overflow(state.c, state.d, &r.c);
  } else {
    // (a, b, c, d) -> (a, a+b, c, c+d)
    of |= __builtin_add_overflow(state.a, state.b, &r.b);
    of |= __builtin_add_overflow(state.c, state.d, &r.d);
  }
  if (of) fail(errc::overflow, "right_multiply: entry exceeds 64-bit range");
  return r;
}

namespace {

// Counts states in the subtree rooted at `root` with trace == n
// (cumulative == false) or with any trace <= n (cumulative == true).
// `root` must contain both letters, so its b and c entries are positive and
// the trace strictly increases along every edge: once a state reaches trace
// n its children all exceed n, and states above n can be pruned outright.
i64 count_subtree(const Mat2& root, i64 n, bool cumulative) {
  i64 count = 0;
  std::vector<Mat2> stack;
  stack.push_back(root);
  while (!stack.empty()) {
    const Mat2 m = stack.back();
    stack.pop_back();
    const i64 tr = m.trace();
    if (cumulative || tr == n) ++count;
    if (tr == n) continue;
    const Mat2 ca = right_multiply(m, Letter::A);
    if (ca.trace() <= n) stack.push_back(ca);
    const Mat2 cb = right_multiply(m, Letter::B);
    if (cb.trace() <= n) stack.push_back(cb);
  }
  return count;
}

i64 enumerate(i64 n, bool cumulative) {
  if (n < 3) fail(errc::bad_trace, "trace count: n must be >= 3");
  i64 total = 0;
  // Pure powers A^k, B^k keep trace 2 forever and are never counted; walk
  // each spine lazily and branch into the mixed subtree A^k B (resp. B^k A),
  // whose root has trace k + 2.
  for (const Letter root : {Letter::A, Letter::B}) {
    const Letter other = root == Letter::A ? Letter::B : Letter::A;
    Mat2 spine = root == Letter::A ? gen_a : gen_b;
    for (;;) {
      const Mat2 child = right_multiply(spine, other);
      if (child.trace() > n) break;
      total += count_subtree(child, n, cumulative);
      spine = right_multiply(spine, root);
    }
  }
  return total;
}

}  // namespace

i64 phi_oracle(i64 n) { return enumerate(n, false); }

i64 psi_oracle(i64 n) { return enumerate(n, true); }

}  // namespace farey
