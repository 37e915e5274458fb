#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "flagorbits/extint.hpp"

namespace flagorbits {

// Classical type of the ambient ind-group.
//   A : GL(inf), no bilinear form
//   C : Sp(inf), alternating form
//   B : O(inf), symmetric form, odd-dimensional truncations
//   D : O(inf), symmetric form, even-dimensional truncations
enum class LieType { A, B, C, D };

// Which classical group family the type belongs to. B and D share the same
// signature constraints and the same classification table.
enum class GroupKind { GL, Sp, O };

inline GroupKind group_of(LieType t) {
  switch (t) {
    case LieType::A: return GroupKind::GL;
    case LieType::C: return GroupKind::Sp;
    default: return GroupKind::O;
  }
}

inline bool has_form(LieType t) { return t != LieType::A; }

inline std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
  }
  return "?";
}

inline std::optional<LieType> parse_lie_type(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  return std::nullopt;
}

struct SignatureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Block-dimension signature of a semilarge splitting parabolic subgroup:
// the successive quotient dimensions c_1,...,c_m of a finite chain of
// subspaces, listed from the bottom of the chain up. At least one block is
// infinite and m >= 2 (the trivial chain {0, V} is excluded). For types
// B, C, D the chain is stable under taking perps, so the blocks are
// palindromic.
class ParabolicSignature {
public:
  LieType lie_type() const { return type_; }
  const std::vector<ExtInt>& blocks() const { return blocks_; }
  std::size_t length() const { return blocks_.size(); }

  std::size_t infinite_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.is_infinite();
    return n;
  }

  friend bool operator==(const ParabolicSignature&, const ParabolicSignature&) = default;

private:
  friend ParabolicSignature make_signature(LieType, const std::vector<ExtInt>&);
  ParabolicSignature(LieType t, std::vector<ExtInt> b) : type_(t), blocks_(std::move(b)) {}

  LieType type_;
  std::vector<ExtInt> blocks_;
};

// Validation boundary. Throws SignatureError on m < 2, on a signature with
// no infinite block, and on non-palindromic blocks for types B, C, D.
ParabolicSignature make_signature(LieType t, const std::vector<ExtInt>& blocks);

// Order type of an infinite chain; such chains are never semilarge, and the
// classifier needs nothing beyond that fact.
enum class ChainOrder { IncreasingOmega, DecreasingOmega, TwoSided, Dense };

// A generalized flag presented either as a finite chain (via its signature)
// or as an infinite chain of a given order type.
class GeneralizedFlagDescriptor {
public:
  static GeneralizedFlagDescriptor finite_chain(ParabolicSignature sig) {
    return GeneralizedFlagDescriptor(std::move(sig));
  }
  static GeneralizedFlagDescriptor infinite_chain(ChainOrder order, LieType t) {
    return GeneralizedFlagDescriptor(order, t);
  }

  bool is_finite_chain() const { return std::holds_alternative<ParabolicSignature>(v_); }
  const ParabolicSignature& signature() const { return std::get<ParabolicSignature>(v_); }
  ChainOrder order() const { return std::get<Infinite>(v_).order; }

  LieType lie_type() const {
    if (is_finite_chain()) return signature().lie_type();
    return std::get<Infinite>(v_).type;
  }

private:
  struct Infinite {
    ChainOrder order;
    LieType type;
    friend bool operator==(const Infinite&, const Infinite&) = default;
  };

  explicit GeneralizedFlagDescriptor(ParabolicSignature sig) : v_(std::move(sig)) {}
  GeneralizedFlagDescriptor(ChainOrder order, LieType t) : v_(Infinite{order, t}) {}

  std::variant<ParabolicSignature, Infinite> v_;
};

// The multiset Lambda(P): quotient dimensions sorted nonincreasingly, kept
// as the number of infinite entries plus the finite entries in
// nonincreasing order.
struct LambdaProfile {
  std::size_t infinite_count = 0;
  std::vector<std::int64_t> finite_parts;  // nonincreasing

  std::size_t length() const { return infinite_count + finite_parts.size(); }
  bool is_large() const { return infinite_count == 1; }

  friend bool operator==(const LambdaProfile&, const LambdaProfile&) = default;
};

// True iff the flag is a finite chain (equivalently, its stabilizer has
// finitely many invariant subspaces).
bool is_semilarge(const GeneralizedFlagDescriptor& d);

// True iff exactly one block is infinite, i.e. every chain member is finite
// dimensional or finite codimensional.
bool is_large(const ParabolicSignature& sig);

LambdaProfile lambda_profile(const ParabolicSignature& sig);

// Text encoding used by the CLI: "A:1,inf" / "C:1,inf,1".
std::optional<ParabolicSignature> parse_signature(const std::string& text);
std::string signature_to_text(const ParabolicSignature& sig);

}  // namespace flagorbits
