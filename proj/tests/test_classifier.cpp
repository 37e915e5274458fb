#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "flagorbits/classifier.hpp"
#include "flagorbits/signature.hpp"
#include "flagorbits/verify.hpp"

using namespace flagorbits;

namespace {

ParabolicSignature sig(const std::string& text) {
  auto s = parse_signature(text);
  REQUIRE(s.has_value());
  return *s;
}

GeneralizedFlagDescriptor fc(const std::string& text) {
  return GeneralizedFlagDescriptor::finite_chain(sig(text));
}

}  // namespace

TEST_CASE("single factor is a single orbit") {
  const auto v = classify(LieType::A, {fc("A:inf,inf,inf")});
  CHECK(v.finite);
  CHECK(v.witness->label == "single-orbit");
}

TEST_CASE("pairs decide by largeness") {
  const auto fin = classify(LieType::A, {fc("A:inf,inf"), fc("A:2,inf")});
  CHECK(fin.finite);
  CHECK(fin.witness->label == "T1");
  // The permutation puts the large factor first.
  CHECK(fin.witness->perm == std::vector<std::size_t>{1, 0});

  const auto inf = classify(LieType::C, {fc("C:inf,inf"), fc("C:inf,2,inf")});
  CHECK_FALSE(inf.finite);
  CHECK(inf.reason == Reason::BothNotLarge);
}

TEST_CASE("mixed types are rejected") {
  CHECK_THROWS_AS(classify(LieType::A, {fc("A:1,inf"), fc("C:1,inf,1")}), SignatureError);
  CHECK_THROWS_AS(classify(LieType::C, std::vector<GeneralizedFlagDescriptor>{}),
                  SignatureError);
}

TEST_CASE("table matching is permutation invariant") {
  const std::array<ParabolicSignature, 3> base = {sig("D:inf,inf"), sig("D:3,inf,3"),
                                                  sig("D:1,2,inf,2,1")};
  std::array<std::size_t, 3> idx = {0, 1, 2};
  do {
    const auto m = match_table1(
        GroupKind::O, {base[idx[0]], base[idx[1]], base[idx[2]]});
    REQUIRE(m.has_value());
    CHECK(m->row_id == "O-1");
    // The reported permutation maps row slots back onto the permuted input.
    CHECK(lambda_profile(base[idx[m->perm[0]]]).length() == 2);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("row-major scan picks the earliest matching row") {
  // Lengths (2,3,3) with two large factors satisfy both the generic
  // (2,3,m3) row and the (inf,2)-specific one; the scan stops at GL-2.
  const auto m = match_table1(
      GroupKind::GL, {sig("A:inf,2"), sig("A:1,inf,1"), sig("A:inf,inf,inf")});
  REQUIRE(m.has_value());
  CHECK(m->row_id == "GL-2");
}

TEST_CASE("classification verdicts carry usable witnesses") {
  const auto v =
      classify(LieType::C, {fc("C:inf,inf"), fc("C:2,inf,2"), fc("C:1,1,inf,1,1")});
  REQUIRE(v.finite);
  CHECK(v.witness->label == "Sp-1");
  CHECK(v.witness->perm == std::vector<std::size_t>{0, 1, 2});

  const auto neg = classify(
      LieType::D, {fc("D:inf,inf"), fc("D:4,inf,4"), fc("D:2,2,2,inf,2,2,2")});
  CHECK_FALSE(neg.finite);
  CHECK(neg.reason == Reason::NoTableRow);
}

TEST_CASE("condition evaluator spot checks") {
  const auto gl = eval_finite_conditions(
      GroupKind::GL,
      {lambda_profile(sig("A:1,inf")), lambda_profile(sig("A:inf,2,3,4,5,6")),
       lambda_profile(sig("A:inf,inf,7,8"))},
      OddEvenParity::NotApplicable);
  REQUIRE(gl.has_value());
  CHECK(gl->find("S_{q,r}") != std::string::npos);

  const auto sp = eval_finite_conditions(
      GroupKind::Sp,
      {lambda_profile(sig("C:inf,inf")), lambda_profile(sig("C:2,inf,2")),
       lambda_profile(sig("C:1,1,inf,1,1"))},
      OddEvenParity::NotApplicable);
  CHECK(sp.has_value());

  const auto none = eval_finite_conditions(
      GroupKind::Sp,
      {lambda_profile(sig("C:2,inf,2")), lambda_profile(sig("C:2,inf,2")),
       lambda_profile(sig("C:2,inf,2"))},
      OddEvenParity::NotApplicable);
  CHECK_FALSE(none.has_value());

  // The odd and even lists genuinely differ: a pair of length-3 factors with
  // an (inf,1,1) profile is in both, but the (inf,b,b)+(inf,inf,1) pattern
  // is odd-only.
  const std::array<LambdaProfile, 3> odd_only = {lambda_profile(sig("B:4,inf,4")),
                                                 lambda_profile(sig("B:inf,1,inf")),
                                                 lambda_profile(sig("B:5,inf,5"))};
  CHECK(eval_finite_conditions(GroupKind::O, odd_only, OddEvenParity::Odd).has_value());
  CHECK_FALSE(eval_finite_conditions(GroupKind::O, odd_only, OddEvenParity::Even).has_value());
}

TEST_CASE("table instances and perturbations") {
  const auto pos = verify::table1_positive();
  for (const auto& c : pos.cases) {
    INFO(c.id, ": ", c.detail);
    CHECK(c.pass);
  }
  const auto neg = verify::table1_negative();
  CHECK(neg.cases.size() >= 25);
  for (const auto& c : neg.cases) {
    INFO(c.id, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("table agrees with the condition lists on a reduced grid") {
  const auto rep = verify::crosscheck(4, 3);
  for (const auto& c : rep.cases) {
    INFO(c.id, ": ", c.detail);
    CHECK(c.pass);
  }
}
