#pragma once

#include <optional>

#include "farey/ints.hpp"

namespace farey {

// First trace where the independent Phi computations disagree, or where the
// lattice-count identities break.
struct VerifyMismatch {
  i64 n = 0;
  i64 phi_main = 0;     // upsilon(n^2 - 4)
  i64 phi_divisor = 0;  // divisor-sum form
  i64 phi_boca = 0;     // modular-inverse form
  i64 phi_oracle = 0;   // monoid enumeration
  i64 cut_delta = 0;    // upsilon - 2 upsilon_< at X = n^2 - 4, must be 0
  bool census_ok = true;
};

// Checks, for every n in [lo, hi]:
//   - the four Phi computations agree,
//   - upsilon(X) = 2 upsilon_<(X) at X = n^2 - 4 (never a square),
//   - the census identities: upsilon = 2 l0< + 4 l1 + 2 l2,
//     upsilon_< = l0< + 2 l1 + l2, and l1 = l3.
// Returns the smallest failing n (independent of jobs), or nothing.
std::optional<VerifyMismatch> verify_range(i64 lo, i64 hi, int jobs = 1);

}  // namespace farey
