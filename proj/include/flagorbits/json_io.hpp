#pragma once

#include <optional>

#include <json.hpp>

#include "flagorbits/classifier.hpp"
#include "flagorbits/signature.hpp"
#include "flagorbits/truncation.hpp"

// JSON encodings used by the command line tool. A signature is
//   {"type": "A", "blocks": [1, "inf"]}
// with finite blocks as integers and infinite blocks as the string "inf".

namespace flagorbits {

nlohmann::json signature_to_json(const ParabolicSignature& sig);
std::optional<ParabolicSignature> signature_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json shape_to_json(const TruncatedFlagShape& shape);

}  // namespace flagorbits
