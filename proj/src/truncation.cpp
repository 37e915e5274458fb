#include "flagorbits/truncation.hpp"

#include <algorithm>
#include <numeric>

namespace flagorbits {

namespace {

std::int64_t finite_sum(const ParabolicSignature& sig) {
  std::int64_t s = 0;
  for (const auto& b : sig.blocks())
    if (b.is_finite()) s += b.value();
  return s;
}

void check_parity(LieType t, std::int64_t total) {
  if (t == LieType::B && total % 2 == 0)
    throw TruncationError("type B truncation requires odd total");
  if ((t == LieType::C || t == LieType::D) && total % 2 != 0)
    throw TruncationError("type C/D truncation requires even total");
}

TruncatedFlagShape make_shape(const ParabolicSignature& sig, std::vector<std::int64_t> dims) {
  TruncatedFlagShape shape;
  shape.lie_type = sig.lie_type();
  shape.dims = std::move(dims);
  shape.total = std::accumulate(shape.dims.begin(), shape.dims.end(), std::int64_t(0));
  shape.origin_blocks = sig.blocks();
  return shape;
}

}  // namespace

TruncatedFlagShape truncate(const ParabolicSignature& sig, std::int64_t total) {
  const auto& blocks = sig.blocks();
  const std::size_t m = blocks.size();
  check_parity(sig.lie_type(), total);

  const std::int64_t num_inf = static_cast<std::int64_t>(sig.infinite_count());
  const std::int64_t surplus = total - finite_sum(sig) - num_inf;
  if (surplus < 0) throw TruncationError("total too small for signature");

  std::vector<std::int64_t> dims(m, 0);
  for (std::size_t k = 0; k < m; ++k)
    if (blocks[k].is_finite()) dims[k] = blocks[k].value();

  if (!has_form(sig.lie_type())) {
    // Even split over the infinite blocks, leftmost-first remainder.
    const std::int64_t q = surplus / num_inf;
    const std::int64_t r = surplus % num_inf;
    std::int64_t j = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (blocks[k].is_infinite()) {
        dims[k] = 1 + q + (j < r ? 1 : 0);
        ++j;
      }
    }
    return make_shape(sig, dims);
  }

  // B/C/D: mirror-symmetric assignment. Infinite blocks off the middle come
  // in mirror pairs; a self-paired middle block exists only for odd m.
  std::vector<std::size_t> inf_pairs;  // lower index of each mirror pair
  bool middle_inf = false;
  for (std::size_t k = 0; 2 * k + 1 < m; ++k)
    if (blocks[k].is_infinite()) inf_pairs.push_back(k);
  if (m % 2 == 1 && blocks[m / 2].is_infinite()) middle_inf = true;

  const std::int64_t np = static_cast<std::int64_t>(inf_pairs.size());
  if (middle_inf) {
    const std::int64_t q = surplus / num_inf;
    const std::int64_t r = surplus % num_inf;
    const std::int64_t pair_bonus = (r - r % 2) / 2;  // pairs getting +1 per side
    for (std::int64_t i = 0; i < np; ++i) {
      const std::int64_t d = 1 + q + (i < pair_bonus ? 1 : 0);
      dims[inf_pairs[i]] = d;
      dims[m - 1 - inf_pairs[i]] = d;
    }
    dims[m / 2] = 1 + q + r % 2;
  } else {
    if (np == 0) throw TruncationError("no infinite block can absorb the surplus");
    if (surplus % 2 != 0)
      throw TruncationError("surplus does not admit a palindromic assignment");
    const std::int64_t half = surplus / 2;
    const std::int64_t q = half / np;
    const std::int64_t r = half % np;
    for (std::int64_t i = 0; i < np; ++i) {
      const std::int64_t d = 1 + q + (i < r ? 1 : 0);
      dims[inf_pairs[i]] = d;
      dims[m - 1 - inf_pairs[i]] = d;
    }
  }
  return make_shape(sig, dims);
}

TruncatedFlagShape truncate_explicit(const ParabolicSignature& sig,
                                     const std::vector<std::int64_t>& dims) {
  const auto& blocks = sig.blocks();
  const std::size_t m = blocks.size();
  if (dims.size() != m) throw TruncationError("dimension count mismatch");
  std::int64_t total = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (dims[k] < 1) throw TruncationError("block dimension must be positive");
    if (blocks[k].is_finite() && dims[k] != blocks[k].value())
      throw TruncationError("finite block dimension altered");
    total += dims[k];
  }
  check_parity(sig.lie_type(), total);
  if (has_form(sig.lie_type())) {
    for (std::size_t k = 0; k < m; ++k)
      if (dims[k] != dims[m - 1 - k])
        throw TruncationError("B/C/D dimensions must be palindromic");
  }
  return make_shape(sig, dims);
}

std::vector<std::int64_t> lambda_of_truncation(const TruncatedFlagShape& shape) {
  auto v = shape.dims;
  std::sort(v.rbegin(), v.rend());
  return v;
}

EmbeddingPlan embed_shape(const TruncatedFlagShape& source, std::int64_t delta) {
  if (delta <= 0) throw TruncationError("delta must be positive");
  const ParabolicSignature sig = make_signature(source.lie_type, source.origin_blocks);
  EmbeddingPlan plan;
  plan.source = source;
  plan.target = truncate(sig, source.total + delta);
  plan.absorb.clear();
  for (std::size_t k = 0; k < source.dims.size(); ++k) {
    const std::int64_t inc = plan.target.dims[k] - source.dims[k];
    if (inc < 0) throw TruncationError("balanced policy shrank a block");
    if (inc > 0 && !source.block_is_infinite(k))
      throw TruncationError("finite block cannot absorb new directions");
    for (std::int64_t i = 0; i < inc; ++i) plan.absorb.push_back(k);
  }
  return plan;
}

std::optional<std::int64_t> min_total(const ParabolicSignature& sig, std::int64_t at_least) {
  for (std::int64_t n = at_least; n < at_least + 4; ++n) {
    try {
      truncate(sig, n);
      return n;
    } catch (const TruncationError&) {
    }
  }
  return std::nullopt;
}

}  // namespace flagorbits
