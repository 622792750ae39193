#pragma once

#include <cstdint>

namespace farey {

using i32 = std::int32_t;
using i64 = std::int64_t;
using u64 = std::uint64_t;

// All counting paths square 64-bit quantities through this type, so any
// comparison like (2k - m)^2 < X is exact for the full i64 input range.
using i128 = __int128;

// Largest N for which N^2 - 4 still fits in i64.
inline constexpr i64 max_phi_trace = 3037000499;

constexpr i128 sq(i64 x) { return static_cast<i128>(x) * x; }

}  // namespace farey
