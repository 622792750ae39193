#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "farey/monoid.hpp"

using namespace farey;

namespace {

std::tuple<i64, i64, i64, i64> key(const Mat2& m) {
  return {m.a, m.b, m.c, m.d};
}

}  // namespace

TEST_CASE("right_multiply") {
  const Mat2 ab = right_multiply(gen_a, Letter::B);
  CHECK(key(ab) == std::tuple<i64, i64, i64, i64>{1, 1, 1, 2});
  CHECK(ab.trace() == 3);
  const Mat2 ba = right_multiply(gen_b, Letter::A);
  CHECK(key(ba) == std::tuple<i64, i64, i64, i64>{2, 1, 1, 1});
  CHECK(ba.trace() == 3);
  const Mat2 aa = right_multiply(gen_a, Letter::A);
  CHECK(key(aa) == std::tuple<i64, i64, i64, i64>{1, 0, 2, 1});
  CHECK(aa.trace() == 2);
}

TEST_CASE("overflow is reported, not wrapped") {
  const i64 big = i64(1) << 62;
  const Mat2 huge{big, big, 1, 1};
  CHECK_THROWS_AS((void)right_multiply(huge, Letter::A), error);
  CHECK_THROWS_AS((void)right_multiply(huge, Letter::B), error);
}

TEST_CASE("words of length <= 12 give distinct unimodular matrices") {
  // depth-first over all nonempty words; freeness of the pair means no
  // two words may collide
  std::set<std::tuple<i64, i64, i64, i64>> seen;
  std::vector<std::pair<Mat2, int>> stack{{gen_a, 1}, {gen_b, 1}};
  i64 visited = 0;
  while (!stack.empty()) {
    const auto [m, len] = stack.back();
    stack.pop_back();
    ++visited;
    CHECK(m.det() == i128(1));
    CHECK(seen.insert(key(m)).second);
    if (len < 12) {
      stack.push_back({right_multiply(m, Letter::A), len + 1});
      stack.push_back({right_multiply(m, Letter::B), len + 1});
    }
  }
  CHECK(visited == (i64(1) << 13) - 2);
  CHECK(i64(seen.size()) == visited);
}

TEST_CASE("mixed words strictly increase trace") {
  std::vector<std::pair<Mat2, int>> stack{
      {right_multiply(gen_a, Letter::B), 2},
      {right_multiply(gen_b, Letter::A), 2}};
  while (!stack.empty()) {
    const auto [m, len] = stack.back();
    stack.pop_back();
    CHECK(m.b > 0);
    CHECK(m.c > 0);
    for (const Letter l : {Letter::A, Letter::B}) {
      const Mat2 child = right_multiply(m, l);
      CHECK(child.trace() > m.trace());
      if (len < 14) stack.push_back({child, len + 1});
    }
  }
}

TEST_CASE("phi_oracle spot values") {
  CHECK(phi_oracle(3) == 2);
  CHECK(phi_oracle(4) == 6);
  CHECK_THROWS_AS((void)phi_oracle(2), error);
  CHECK_THROWS_AS((void)phi_oracle(0), error);
}

TEST_CASE("psi_oracle spot values and consistency") {
  CHECK(psi_oracle(3) == 2);
  CHECK(psi_oracle(4) == 8);
  CHECK_THROWS_AS((void)psi_oracle(2), error);
  i64 total = 0;
  for (i64 n = 3; n <= 60; ++n) {
    total += phi_oracle(n);
    CHECK(psi_oracle(n) == total);
  }
}
