#include "flagorbits/json_io.hpp"

namespace flagorbits {

using nlohmann::json;

json signature_to_json(const ParabolicSignature& sig) {
  json blocks = json::array();
  for (const auto& b : sig.blocks()) {
    if (b.is_infinite())
      blocks.push_back("inf");
    else
      blocks.push_back(b.value());
  }
  return json{{"type", lie_type_name(sig.lie_type())}, {"blocks", blocks}};
}

std::optional<ParabolicSignature> signature_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("blocks")) return std::nullopt;
  if (!j["type"].is_string() || !j["blocks"].is_array()) return std::nullopt;
  const auto t = parse_lie_type(j["type"].get<std::string>());
  if (!t) return std::nullopt;
  std::vector<ExtInt> blocks;
  for (const auto& b : j["blocks"]) {
    if (b.is_string()) {
      if (b.get<std::string>() != "inf") return std::nullopt;
      blocks.push_back(ExtInt::infinity());
    } else if (b.is_number_integer() && b.get<std::int64_t>() > 0) {
      blocks.push_back(ExtInt::finite(b.get<std::int64_t>()));
    } else {
      return std::nullopt;
    }
  }
  try {
    return make_signature(*t, blocks);
  } catch (const SignatureError&) {
    return std::nullopt;
  }
}

json verdict_to_json(const Verdict& v) {
  json out{{"finite", v.finite}};
  if (v.witness) {
    out["witness"] = json{{"label", v.witness->label}, {"perm", v.witness->perm}};
  }
  if (v.reason) out["reason"] = reason_name(*v.reason);
  return out;
}

json shape_to_json(const TruncatedFlagShape& shape) {
  json origin = json::array();
  for (const auto& b : shape.origin_blocks) {
    if (b.is_infinite())
      origin.push_back("inf");
    else
      origin.push_back(b.value());
  }
  return json{{"type", lie_type_name(shape.lie_type)},
              {"dims", shape.dims},
              {"total", shape.total},
              {"origin_blocks", origin}};
}

}  // namespace flagorbits
