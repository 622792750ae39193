#pragma once

#include <cstdint>

#include "farey/error.hpp"
#include "farey/ints.hpp"

namespace farey {

// Row-major 2x2 integer matrix. Products of the two generators have
// nonnegative entries and determinant 1.
struct Mat2 {
  i64 a = 1, b = 0, c = 0, d = 1;

  i64 trace() const { return a + d; }
  i128 det() const { return static_cast<i128>(a) * d - static_cast<i128>(b) * c; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

enum class Letter : std::uint8_t { A, B };

inline constexpr Mat2 gen_a{1, 0, 1, 1};
inline constexpr Mat2 gen_b{1, 1, 0, 1};

// state * A or state * B. Throws overflow if an entry would leave i64.
Mat2 right_multiply(const Mat2& state, Letter letter);

// Number of generator products with trace exactly n, counted by pruned
// depth-first enumeration of the product tree. Reference implementation;
// cost grows like n^2 log n, practical to n ~ 2000.
i64 phi_oracle(i64 n);

// Number of generator products with trace in [3, n], one pruned enumeration.
i64 psi_oracle(i64 n);

}  // namespace farey
