#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagorbits/signature.hpp"
#include "flagorbits/truncation.hpp"

using namespace flagorbits;

namespace {
ParabolicSignature sig(const std::string& text) {
  auto s = parse_signature(text);
  REQUIRE(s.has_value());
  return *s;
}
}  // namespace

TEST_CASE("balanced truncation for type A") {
  CHECK(truncate(sig("A:1,inf"), 5).dims == std::vector<std::int64_t>{1, 4});
  CHECK(truncate(sig("A:inf,inf"), 5).dims == std::vector<std::int64_t>{3, 2});
  CHECK(truncate(sig("A:inf,2,inf"), 9).dims == std::vector<std::int64_t>{4, 2, 3});
  CHECK(truncate(sig("A:inf,inf,inf"), 10).dims == std::vector<std::int64_t>{4, 3, 3});
  CHECK(truncate(sig("A:1,inf"), 2).dims == std::vector<std::int64_t>{1, 1});
  CHECK_THROWS_AS(truncate(sig("A:3,inf"), 3), TruncationError);
}

TEST_CASE("balanced truncation keeps B/C/D palindromic") {
  CHECK(truncate(sig("C:1,inf,1"), 6).dims == std::vector<std::int64_t>{1, 4, 1});
  CHECK(truncate(sig("C:inf,inf"), 8).dims == std::vector<std::int64_t>{4, 4});
  CHECK(truncate(sig("B:inf,1,inf"), 7).dims == std::vector<std::int64_t>{3, 1, 3});
  CHECK(truncate(sig("B:1,inf,1"), 9).dims == std::vector<std::int64_t>{1, 7, 1});
  CHECK(truncate(sig("D:inf,2,inf,inf,2,inf"), 14).dims ==
        std::vector<std::int64_t>{3, 2, 2, 2, 2, 3});

  CHECK_THROWS_AS(truncate(sig("B:1,inf,1"), 8), TruncationError);   // needs odd N
  CHECK_THROWS_AS(truncate(sig("C:1,inf,1"), 7), TruncationError);   // needs even N
  CHECK_THROWS_AS(truncate(sig("D:inf,inf"), 7), TruncationError);
  // A mirror pair absorbs directions two at a time: (3,1,3) -> total 7 and
  // total 9, never 8.
  CHECK(truncate(sig("B:inf,1,inf"), 9).dims == std::vector<std::int64_t>{4, 1, 4});
}

TEST_CASE("middle infinite block absorbs the parity remainder") {
  // Surplus 3 over three infinite blocks: the middle keeps the odd leftover.
  CHECK(truncate(sig("B:inf,inf,inf"), 9).dims == std::vector<std::int64_t>{3, 3, 3});
  CHECK(truncate(sig("B:inf,inf,inf"), 7).dims == std::vector<std::int64_t>{2, 3, 2});
  CHECK(truncate(sig("B:inf,inf,inf"), 5).dims == std::vector<std::int64_t>{2, 1, 2});
  CHECK(truncate(sig("D:inf,inf,inf"), 6).dims == std::vector<std::int64_t>{2, 2, 2});
  CHECK(truncate(sig("D:inf,inf,inf"), 8).dims == std::vector<std::int64_t>{3, 2, 3});
}

TEST_CASE("explicit truncation validates shape invariants") {
  CHECK(truncate_explicit(sig("A:1,inf"), {1, 3}).total == 4);
  CHECK_THROWS_AS(truncate_explicit(sig("A:1,inf"), {2, 3}), TruncationError);
  CHECK_THROWS_AS(truncate_explicit(sig("A:1,inf"), {1}), TruncationError);
  CHECK_THROWS_AS(truncate_explicit(sig("C:1,inf,1"), {1, 3, 1}), TruncationError);
  CHECK_THROWS_AS(truncate_explicit(sig("C:inf,inf"), {2, 4}), TruncationError);
  CHECK_NOTHROW(truncate_explicit(sig("C:inf,inf"), {3, 3}));
}

TEST_CASE("lambda of a truncation sorts the dimensions") {
  CHECK(lambda_of_truncation(truncate(sig("A:1,inf,2"), 8)) ==
        std::vector<std::int64_t>{5, 2, 1});
}

TEST_CASE("embedding plans grow only infinite blocks") {
  const auto plan = embed_shape(truncate(sig("A:1,inf"), 3), 1);
  CHECK(plan.source.dims == std::vector<std::int64_t>{1, 2});
  CHECK(plan.target.dims == std::vector<std::int64_t>{1, 3});
  CHECK(plan.absorb == std::vector<std::size_t>{1});
  CHECK(plan.delta() == 1);

  const auto plan2 = embed_shape(truncate(sig("C:1,inf,1"), 4), 2);
  CHECK(plan2.target.dims == std::vector<std::int64_t>{1, 4, 1});
  CHECK(plan2.absorb == std::vector<std::size_t>{1, 1});

  const auto plan3 = embed_shape(truncate(sig("B:inf,1,inf"), 5), 2);
  CHECK(plan3.target.dims == std::vector<std::int64_t>{3, 1, 3});
  CHECK(plan3.absorb == std::vector<std::size_t>{0, 2});
}

TEST_CASE("balanced policy is transitive across levels") {
  // Growing in two steps or one step reaches the same target shape, so
  // consecutive embedding plans compose.
  const auto s = sig("A:inf,2,inf,inf");
  for (std::int64_t n = 6; n <= 12; ++n) {
    const auto one = embed_shape(truncate(s, n), 2).target;
    const auto mid = embed_shape(truncate(s, n), 1).target;
    const auto two = embed_shape(mid, 1).target;
    CHECK(one == two);
  }
  const auto c = sig("C:inf,1,1,inf,inf,1,1,inf");
  for (std::int64_t n = 10; n <= 20; n += 2) {
    const auto one = embed_shape(truncate(c, n), 4).target;
    const auto two = embed_shape(embed_shape(truncate(c, n), 2).target, 2).target;
    CHECK(one == two);
  }
}

TEST_CASE("minimal admissible totals") {
  CHECK(min_total(sig("A:1,inf"), 1) == 2);
  CHECK(min_total(sig("C:1,inf,1"), 1) == 4);
  CHECK(min_total(sig("B:1,inf,1"), 4) == 5);
  CHECK(min_total(sig("D:inf,inf"), 3) == 4);
  // (3,1,3) pattern: totals 7, 9, ... but never even.
  CHECK(min_total(sig("B:inf,1,inf"), 6) == 7);
}
