#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagorbits/classifier.hpp"
#include "flagorbits/json_io.hpp"
#include "flagorbits/signature.hpp"

using namespace flagorbits;

namespace {
ExtInt inf() { return ExtInt::infinity(); }
ExtInt fin(std::int64_t v) { return ExtInt::finite(v); }
}  // namespace

TEST_CASE("extended integers order with infinity on top") {
  CHECK(fin(3) < fin(4));
  CHECK(fin(1000000) < inf());
  CHECK(inf() == inf());
  CHECK(ExtInt::parse("inf") == inf());
  CHECK(ExtInt::parse("17") == fin(17));
  CHECK_FALSE(ExtInt::parse("0").has_value());
  CHECK_FALSE(ExtInt::parse("-2").has_value());
  CHECK_FALSE(ExtInt::parse("").has_value());
  CHECK_FALSE(ExtInt::parse("3x").has_value());
  CHECK(fin(7).str() == "7");
  CHECK(inf().str() == "inf");
  CHECK_THROWS_AS(ExtInt::finite(0), std::invalid_argument);
}

TEST_CASE("signature validation") {
  CHECK_NOTHROW(make_signature(LieType::A, {fin(1), inf()}));
  CHECK_THROWS_AS(make_signature(LieType::A, {inf()}), SignatureError);
  CHECK_THROWS_AS(make_signature(LieType::A, {fin(1), fin(2)}), SignatureError);
  // Palindromic constraint for the types with a form.
  CHECK_NOTHROW(make_signature(LieType::C, {fin(1), inf(), fin(1)}));
  CHECK_THROWS_AS(make_signature(LieType::C, {fin(1), inf(), fin(2)}), SignatureError);
  CHECK_THROWS_AS(make_signature(LieType::B, {fin(2), inf()}), SignatureError);
  // Even length with a form means a mirror pair of infinite blocks.
  CHECK_NOTHROW(make_signature(LieType::D, {inf(), inf()}));
  CHECK_NOTHROW(make_signature(LieType::C, {inf(), fin(2), fin(2), inf()}));
}

TEST_CASE("lambda profile sorts quotient dimensions") {
  const auto sig = make_signature(LieType::A, {fin(2), inf(), fin(5), inf(), fin(1)});
  const auto p = lambda_profile(sig);
  CHECK(p.infinite_count == 2);
  CHECK(p.finite_parts == std::vector<std::int64_t>{5, 2, 1});
  CHECK(p.length() == 5);
  CHECK_FALSE(p.is_large());
  CHECK(is_large(make_signature(LieType::A, {fin(2), inf()})));
  CHECK_FALSE(is_large(make_signature(LieType::A, {inf(), inf()})));
}

TEST_CASE("semilarge means finite chain") {
  const auto fc = GeneralizedFlagDescriptor::finite_chain(
      make_signature(LieType::A, {fin(1), inf()}));
  const auto ic =
      GeneralizedFlagDescriptor::infinite_chain(ChainOrder::Dense, LieType::A);
  CHECK(is_semilarge(fc));
  CHECK_FALSE(is_semilarge(ic));
  CHECK(ic.order() == ChainOrder::Dense);
  CHECK(ic.lie_type() == LieType::A);
}

TEST_CASE("text encoding round trips") {
  const auto sig = parse_signature("C:1,inf,1");
  REQUIRE(sig.has_value());
  CHECK(sig->lie_type() == LieType::C);
  CHECK(signature_to_text(*sig) == "C:1,inf,1");
  CHECK_FALSE(parse_signature("A:1,2").has_value());
  CHECK_FALSE(parse_signature("Q:1,inf").has_value());
  CHECK_FALSE(parse_signature("A:").has_value());
  CHECK_FALSE(parse_signature("1,inf").has_value());
}

TEST_CASE("json encoding round trips") {
  const auto sig = parse_signature("A:2,inf,1");
  REQUIRE(sig.has_value());
  const auto j = signature_to_json(*sig);
  CHECK(j["type"] == "A");
  CHECK(j["blocks"].size() == 3);
  CHECK(j["blocks"][1] == "inf");
  const auto back = signature_from_json(j);
  REQUIRE(back.has_value());
  CHECK(*back == *sig);

  CHECK_FALSE(signature_from_json(nlohmann::json{{"type", "A"}}).has_value());
  CHECK_FALSE(
      signature_from_json(nlohmann::json{{"type", "A"}, {"blocks", {1, "oo"}}}).has_value());
  CHECK_FALSE(
      signature_from_json(nlohmann::json{{"type", "A"}, {"blocks", {0, "inf"}}}).has_value());
}

TEST_CASE("truncation parities from the block structure") {
  const auto both = admissible_parities(*parse_signature("C:1,inf,1"));
  CHECK(both.odd);
  CHECK(both.even);
  const auto even_only = admissible_parities(*parse_signature("D:inf,inf"));
  CHECK_FALSE(even_only.odd);
  CHECK(even_only.even);
  const auto odd_only = admissible_parities(*parse_signature("B:inf,1,inf"));
  CHECK(odd_only.odd);
  CHECK_FALSE(odd_only.even);
  const auto even_mid = admissible_parities(*parse_signature("D:inf,2,inf"));
  CHECK_FALSE(even_mid.odd);
  CHECK(even_mid.even);
  const auto free_type_a = admissible_parities(*parse_signature("A:1,inf"));
  CHECK(free_type_a.odd);
  CHECK(free_type_a.even);
}
