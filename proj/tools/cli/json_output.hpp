#pragma once

#include <span>

#include <json.hpp>

#include "cohere/coherence.hpp"
#include "cohere/rational.hpp"

namespace cohere::cli {

using Json = nlohmann::ordered_json;

/// Rationals are always written as "num/den" strings.
Json to_json(const Rational& q);
Json to_json(std::span<const Rational> qs);
Json to_json(const ProbabilityInterval& iv);

/// {"lo": "a/b", "hi": "c/d", "vacuous": bool, "validated": bool, "warnings": [...]}
Json to_json(const ExtensionResult& r);

/// {"coherent": bool, "witness": [...] | null,
///  "certificate": {"indices": [...], "stakes": [...], "gains": [...]} | null,
///  "trace": [{"indices": [...], "I0": [...]}, ...]}
/// Indices are 1-based positions in the assessed family.
Json to_json(const CoherenceVerdict& v);

}  // namespace cohere::cli
