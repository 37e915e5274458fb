#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flagorbits::verify {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

// One concrete instance per classification-table row, expected Finite with
// that row as the first match.
SuiteReport table1_positive();

// Perturbed instances expected Infinite, each with its reason code.
SuiteReport table1_negative();

// Exhaustive agreement between the table matcher and the finite-dimensional
// condition evaluator over all profile triples with length <= max_m, finite
// parts <= max_part, and at most two infinite entries per signature.
SuiteReport crosscheck(std::size_t max_m = 5, std::int64_t max_part = 4);

// Type-A double flags: group-orbit enumeration over GF(p), the exact
// contingency-table count, and the number of distinct rank matrices must
// coincide; the parabolic-stabilizer strategy is cross-checked on a subset.
SuiteReport oracle(std::size_t budget);

// count <= q^C for every margin pair with total <= max_total and every
// designated block, and growth sequences are nondecreasing.
SuiteReport bound(std::int64_t max_total = 12);

// Exact growth-sequence witnesses for bounded and unbounded pairs.
SuiteReport growth();

// Orbit-set injectivity of the level-raising embedding over GF(2) for shape
// tuples in all three types.
SuiteReport lemma_key(std::size_t budget);

// Flag counts against Gaussian-binomial formulas and generator closures
// against known group orders.
SuiteReport sanity();

// Orbit counts of a finite-type type-A triple agree over GF(2) and GF(3).
SuiteReport field_independence(std::size_t budget);

}  // namespace flagorbits::verify
