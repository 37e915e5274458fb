#include "flagorbits/signature.hpp"

#include <algorithm>
#include <sstream>

namespace flagorbits {

ParabolicSignature make_signature(LieType t, const std::vector<ExtInt>& blocks) {
  const std::size_t m = blocks.size();
  if (m < 2) throw SignatureError("signature needs at least two blocks");
  std::size_t infs = 0;
  for (const auto& b : blocks) infs += b.is_infinite();
  if (infs == 0) throw SignatureError("signature needs at least one infinite block");
  if (has_form(t)) {
    for (std::size_t k = 0; k < m; ++k) {
      if (blocks[k] != blocks[m - 1 - k])
        throw SignatureError("blocks must be palindromic for types B, C, D");
    }
    // Even length forces a Lagrangian middle member, so the infinite blocks
    // come in mirror pairs and there are at least two of them.
    if (m % 2 == 0 && infs < 2)
      throw SignatureError("even-length B/C/D signature needs two infinite blocks");
  }
  return ParabolicSignature(t, blocks);
}

bool is_semilarge(const GeneralizedFlagDescriptor& d) { return d.is_finite_chain(); }

bool is_large(const ParabolicSignature& sig) { return sig.infinite_count() == 1; }

LambdaProfile lambda_profile(const ParabolicSignature& sig) {
  LambdaProfile p;
  for (const auto& b : sig.blocks()) {
    if (b.is_infinite())
      ++p.infinite_count;
    else
      p.finite_parts.push_back(b.value());
  }
  std::sort(p.finite_parts.rbegin(), p.finite_parts.rend());
  return p;
}

std::optional<ParabolicSignature> parse_signature(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto type = parse_lie_type(text.substr(0, colon));
  if (!type) return std::nullopt;
  std::vector<ExtInt> blocks;
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = ExtInt::parse(tok);
    if (!b) return std::nullopt;
    blocks.push_back(*b);
  }
  if (blocks.empty()) return std::nullopt;
  try {
    return make_signature(*type, blocks);
  } catch (const SignatureError&) {
    return std::nullopt;
  }
}

std::string signature_to_text(const ParabolicSignature& sig) {
  std::string out = lie_type_name(sig.lie_type()) + ":";
  for (std::size_t k = 0; k < sig.blocks().size(); ++k) {
    if (k) out += ',';
    out += sig.blocks()[k].str();
  }
  return out;
}

}  // namespace flagorbits
