#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagorbits/gfp.hpp"
#include "flagorbits/signature.hpp"
#include "flagorbits/truncation.hpp"

namespace flagorbits {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subspace of GF(p)^N in canonical reduced row-echelon form. Two subspaces
// are equal iff their representations are equal.
struct SubspaceRREF {
  int p = 2;
  int ambient = 0;
  gfp::Mat rows;  // RREF basis, possibly empty for the zero space

  std::size_t dim() const { return rows.size(); }
  bool contains(const SubspaceRREF& other) const;
  friend bool operator==(const SubspaceRREF&, const SubspaceRREF&) = default;
};

SubspaceRREF make_subspace(int p, int ambient, gfp::Mat spanning_rows);

// The fixed bilinear/quadratic form data for one (lie_type, N, p).
// Sp: alternating Gram with antidiagonal +/-1 blocks.
// O:  split quadratic form Q(x) = sum x_i x_{N+1-i} (+ x_mid^2 for odd N),
//     kept as an upper-triangular matrix; gram is its polar form. At p = 2
//     the quadratic form is the primary object (the polar form alone would
//     define the wrong group).
// A:  no form; gram and quad are empty.
struct StandardForm {
  LieType lie_type = LieType::A;
  int n = 0;
  int p = 2;
  gfp::Mat gram;  // polar/bilinear form
  gfp::Mat quad;  // upper-triangular quadratic form matrix (O only)

  bool has_bilinear() const { return !gram.empty(); }
  std::uint8_t bilinear(const gfp::Vec& u, const gfp::Vec& v) const;
  std::uint8_t quadratic(const gfp::Vec& v) const;  // O only
  bool preserves(const gfp::Mat& g) const;
};

StandardForm standard_form(LieType t, int n, int p);

// Nested chain of subspaces realizing a truncated shape: the proper chain
// members with cumulative dimensions; for B/C/D the lower half is totally
// isotropic and the upper members are the perps of their mirrors.
struct FlagOverGF {
  TruncatedFlagShape shape;
  int p = 2;
  std::vector<SubspaceRREF> chain;  // members F_1, ..., F_{m-1}

  std::string key() const;  // canonical byte string, equality <=> same flag
};

// Orthogonal complement with respect to the form's bilinear pairing.
SubspaceRREF perp(const StandardForm& form, const SubspaceRREF& u);

// True when Q (for O) and the bilinear form vanish identically on the span.
bool is_totally_isotropic(const StandardForm& form, const gfp::Mat& basis);

// All subspaces of dimension k in GF(p)^n, each in canonical RREF.
std::vector<SubspaceRREF> enumerate_subspaces(int p, int n, int k);

// All flags of the given shape (isotropic for B/C/D), canonical, no
// duplicates. Throws BudgetError when the count would exceed `budget`.
// For type A the result size is checked against the Gaussian-binomial
// product formula.
std::vector<FlagOverGF> enumerate_flags(const TruncatedFlagShape& shape, int p,
                                        std::size_t budget = 2'000'000);

// Generating set of GL_N(F_p), Sp_N(F_p), or the orthogonal group of the
// split form. Each generator is validated against the form.
std::vector<gfp::Mat> group_generators(const StandardForm& form);

// Order of the group generated by `gens`, by closure; throws BudgetError
// past `limit` elements.
std::size_t closure_order(const std::vector<gfp::Mat>& gens, int p, std::size_t limit);

FlagOverGF transform_flag(const gfp::Mat& g, const FlagOverGF& f);

struct OrbitResult {
  std::size_t orbit_count = 0;
  std::size_t point_count = 0;
  std::vector<std::vector<FlagOverGF>> representatives;  // one tuple per orbit
  std::unordered_map<std::string, std::size_t> orbit_of;  // tuple key -> orbit id
};

std::string tuple_key(const std::vector<FlagOverGF>& tuple);

// Orbits of the diagonal action on the product of the flag varieties of the
// given shapes (all sharing N and lie_type), by BFS with canonical-form
// hashing.
OrbitResult enumerate_orbits(const std::vector<TruncatedFlagShape>& shapes,
                             const StandardForm& form, int p,
                             std::size_t budget = 2'000'000);

// Type-A pairs only: the first flag is normalized to the standard
// coordinate flag and orbits of its parabolic stabilizer on the second
// factor are counted. Agrees with enumerate_orbits on pairs.
std::size_t pair_orbit_count_parabolic(const TruncatedFlagShape& first,
                                       const TruncatedFlagShape& second, int p,
                                       std::size_t budget = 2'000'000);

// Intersection-dimension matrix r_ij = dim(F_i meet F'_j) over the proper
// chain members; a complete orbit invariant for type-A pairs.
std::vector<std::vector<std::size_t>> rank_matrix(const FlagOverGF& f1, const FlagOverGF& f2);

// Image of a flag under the level-raising embedding described by `plan`:
// old coordinates are shifted to the middle (B/C/D) or kept (A), and each
// new direction is appended to the chain members from its absorbing block
// onward.
FlagOverGF embed_flag(const FlagOverGF& f, const EmbeddingPlan& plan);

struct LemmaKeyReport {
  bool holds = true;
  // On failure: two source tuples in distinct source orbits whose
  // embeddings share a target orbit.
  std::optional<std::pair<std::vector<FlagOverGF>, std::vector<FlagOverGF>>> counterexample;
  std::size_t source_orbits = 0;
  std::size_t embedded_target_orbits = 0;
};

// Empirical check that the level-raising embedding is injective on orbit
// sets: tuples with embeddings in one target orbit must already share a
// source orbit. One plan per factor; all plans must share source total and
// delta.
LemmaKeyReport lemma_key_check(const std::vector<EmbeddingPlan>& plans, int p,
                               std::size_t budget = 2'000'000);

// [n choose k]_p, the number of k-subspaces of GF(p)^n.
mpz_class gaussian_binomial(int n, int k, int p);

// Product of Gaussian binomials counting type-A flags of the shape.
mpz_class flag_count_formula(const TruncatedFlagShape& shape, int p);

}  // namespace flagorbits
