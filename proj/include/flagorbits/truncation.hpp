#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flagorbits/signature.hpp"

namespace flagorbits {

struct TruncationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A concrete flag shape in an N-dimensional space obtained from a signature
// by assigning finite dimensions to its infinite blocks. Finite blocks keep
// their dimension; B/C/D shapes stay palindromic with the parity of N fixed
// by the type (B odd, C and D even).
struct TruncatedFlagShape {
  LieType lie_type = LieType::A;
  std::vector<std::int64_t> dims;      // one entry per block, all >= 1
  std::int64_t total = 0;              // N = sum of dims
  std::vector<ExtInt> origin_blocks;   // source signature blocks

  std::size_t block_count() const { return dims.size(); }
  bool block_is_infinite(std::size_t k) const { return origin_blocks[k].is_infinite(); }

  // Cumulative dimensions dim F_1, ..., dim F_{m-1} (the proper members).
  std::vector<std::int64_t> cumulative() const {
    std::vector<std::int64_t> c;
    std::int64_t s = 0;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
      s += dims[k];
      c.push_back(s);
    }
    return c;
  }

  friend bool operator==(const TruncatedFlagShape&, const TruncatedFlagShape&) = default;
};

// Transition data between consecutive truncation levels: for each new basis
// direction, the block of the source shape that absorbs it.
struct EmbeddingPlan {
  TruncatedFlagShape source;
  TruncatedFlagShape target;
  std::vector<std::size_t> absorb;  // absorb[d] = block index taking direction d

  std::int64_t delta() const { return target.total - source.total; }
};

// Deterministic balanced truncation: the surplus N - sum(finite) - #inf is
// spread over the infinite blocks as evenly as possible, leftmost-first for
// remainders; for B/C/D the assignment is mirror-symmetric with any parity
// remainder absorbed by the self-paired middle block. Throws TruncationError
// when N is too small, when the parity of N does not fit the type, or when
// no palindromic assignment exists.
TruncatedFlagShape truncate(const ParabolicSignature& sig, std::int64_t total);

// Truncation with an explicit dimension assignment for the infinite blocks
// (finite blocks must keep their dimensions). Validates all shape invariants.
TruncatedFlagShape truncate_explicit(const ParabolicSignature& sig,
                                     const std::vector<std::int64_t>& dims);

// Block dimensions sorted nonincreasingly: Lambda of the truncated flag.
std::vector<std::int64_t> lambda_of_truncation(const TruncatedFlagShape& shape);

// Plan for growing the shape by `delta` new directions under the balanced
// policy. For B/C/D, delta must keep the parity (new directions are added in
// mirror pairs). Absorbed directions are listed in ascending block order.
EmbeddingPlan embed_shape(const TruncatedFlagShape& source, std::int64_t delta);

// Smallest admissible total for the signature at or above `at_least`,
// respecting the type's parity; nullopt if none exists.
std::optional<std::int64_t> min_total(const ParabolicSignature& sig, std::int64_t at_least);

}  // namespace flagorbits
