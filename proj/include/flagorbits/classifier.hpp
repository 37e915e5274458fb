#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagorbits/signature.hpp"

namespace flagorbits {

enum class Reason {
  NotSemilarge,
  FewerThanTwoLarge,
  NoTableRow,
  EllGe4,
  BothNotLarge,
};

std::string reason_name(Reason r);

// For a Finite verdict: the matched table row or condition label together
// with the permutation that realizes the match. perm[i] is the index of the
// input factor placed in row position i+1.
struct Witness {
  std::string label;
  std::vector<std::size_t> perm;
};

struct Verdict {
  bool finite = false;
  std::optional<Witness> witness;  // set iff finite
  std::optional<Reason> reason;    // set iff infinite
};

// One row of the classification table for triples: per-factor predicates
// over Lambda-profiles plus an optional side condition over the whole
// (permuted) triple.
struct Table1Row {
  std::string id;
  std::array<std::function<bool(const LambdaProfile&)>, 3> factor;
  std::function<bool(const std::array<const LambdaProfile*, 3>&)> side;  // may be null
};

// The 5 GL, 4 Sp, or 8 O rows.
const std::vector<Table1Row>& table1_rows(GroupKind g);

struct TableMatch {
  std::string row_id;
  std::array<std::size_t, 3> perm;
};

// Scans rows in table order and, within a row, the 6 permutations in
// lexicographic order; returns the first match.
std::optional<TableMatch> match_table1(GroupKind g,
                                       const std::array<ParabolicSignature, 3>& sigs);
std::optional<TableMatch> match_table1_profiles(GroupKind g,
                                                const std::array<LambdaProfile, 3>& profiles);

// Finiteness decision for a product of flag ind-varieties:
//   l = 1            -> Finite (single orbit)
//   any infinite chain -> Infinite (not-semilarge)
//   l = 2            -> Finite iff one factor is large
//   l = 3            -> Finite iff at least two large and a table row matches
//   l >= 4           -> Infinite
// Throws SignatureError when the factors carry mixed Lie types.
Verdict classify(LieType t, const std::vector<GeneralizedFlagDescriptor>& flags);

enum class OddEvenParity { Odd, Even, NotApplicable };

// Symbolic evaluator for the finite-dimensional finite-type condition lists
// (one list for GL, one for Sp, and odd/even lists for O). Assumes all three
// profiles come from semilarge factors with at least two of them large;
// returns the matched condition label, or nullopt.
std::optional<std::string> eval_finite_conditions(GroupKind g,
                                                  const std::array<LambdaProfile, 3>& profiles,
                                                  OddEvenParity parity);

// Truncation parities a B/C/D signature admits: even-length signatures force
// even totals; an odd-length signature fixes the parity of its middle block
// unless the middle block is infinite, in which case both parities occur.
struct ParitySet {
  bool odd = false;
  bool even = false;
};
ParitySet admissible_parities(const ParabolicSignature& sig);

}  // namespace flagorbits
