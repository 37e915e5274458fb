// Acceptance gate: one line per criterion, each backed by a verification
// suite. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "flagorbits/verify.hpp"

namespace {

std::size_t budget_from_env() {
  if (const char* raw = std::getenv("FLAGORBITS_BUDGET")) {
    try {
      const long long v = std::stoll(raw);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 2'000'000;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const std::size_t budget = budget_from_env();

  struct Criterion {
    int number;
    std::string name;
    flagorbits::verify::SuiteReport (*run)(std::size_t);
  };

  namespace v = flagorbits::verify;
  const std::vector<Criterion> criteria = {
      {1, "every classification-table row realized by a Finite instance",
       [](std::size_t) { return v::table1_positive(); }},
      {2, "perturbed instances are Infinite with the right reason",
       [](std::size_t) { return v::table1_negative(); }},
      {3, "table matcher agrees with the condition lists on all small triples",
       [](std::size_t) { return v::crosscheck(5, 4); }},
      {4, "field orbit enumeration matches the exact double-flag count",
       [](std::size_t b) { return v::oracle(b); }},
      {5, "orbit counts stay under q^C and grow monotonically",
       [](std::size_t) { return v::bound(12); }},
      {6, "growth witnesses: unbounded pair grows, bounded pairs stay flat",
       [](std::size_t) { return v::growth(); }},
      {7, "level-raising embeddings keep distinct orbits distinct",
       [](std::size_t b) { return v::lemma_key(b); }},
      {8, "Gaussian counts and group orders over small fields",
       [](std::size_t) { return v::sanity(); }},
      {9, "orbit count of a finite-type triple is field independent",
       [](std::size_t b) { return v::field_independence(std::max<std::size_t>(b, 200'000)); }},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto t0 = clock::now();
    v::SuiteReport rep;
    bool ok = false;
    std::string error;
    try {
      rep = c.run(budget);
      ok = rep.all_pass();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::cout << "criterion " << c.number << " (" << c.name << "): "
              << (ok ? "PASS" : "FAIL") << " [" << rep.cases.size() << " cases, " << ms
              << " ms]" << std::endl;
    if (!ok) {
      all_ok = false;
      if (!error.empty()) std::cout << "    exception: " << error << "\n";
      for (const auto& cs : rep.cases)
        if (!cs.pass) std::cout << "    " << cs.id << " -- " << cs.detail << "\n";
    }
  }
  std::cout << (all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all_ok ? 0 : 1;
}
