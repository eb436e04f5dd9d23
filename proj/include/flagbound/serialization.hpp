#pragma once

#include <string>

#include <json.hpp>

#include "flagbound/exact_arith.hpp"
#include "flagbound/flag_recurrence.hpp"
#include "flagbound/hilbert_profiles.hpp"
#include "flagbound/hypothesis_checker.hpp"
#include "flagbound/lemma_engine.hpp"

namespace flagbound {

using Json = nlohmann::ordered_json;

/// Exact values are written as strings ("p/q" or "p"); readers also accept JSON integers.
Json to_json(const Rational& value);
Json to_json(const Integer& value);
Rational rational_from_json(const Json& value);
Integer integer_from_json(const Json& value);

/// {"stable": s, "values": [h(0), ...]}
Json to_json(const HilbertProfile& profile);
HilbertProfile profile_from_json(const Json& value);

/// Either {"deltas": [...]} or a bare array.
DeltaSequence deltas_from_json(const Json& value);

/// {"r":..., "d":..., "s":..., "pointProfile":{...}, "deltas":[...], "tail":[...]}
LemmaInput lemma_input_from_json(const Json& value);
Json to_json(const LemmaInput& input);

/// {"lo": "p/q", "hi": "p/q", "hypothesesVerified": bool}
Json to_json(const GenusInterval& interval);

Json to_json(const RDecomposition& remainder);
Json to_json(const LemmaEvaluation& evaluation);

/// Each threshold appears as an exact expression and as a decimal labelled approximate.
Json to_json(const HypothesisReport& report, int digits = 20);

/// Reads and parses a JSON document; ValidationError on I/O or parse failure.
Json load_json_file(const std::string& path);

}  // namespace flagbound
