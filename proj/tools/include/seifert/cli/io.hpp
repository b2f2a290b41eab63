#pragma once

#include <json.hpp>

#include <string>

#include "seifert/invariants.hpp"
#include "seifert/seifert_data.hpp"

namespace seifert::cli {

// One of three input shapes:
//   {"unnormalized": [[alpha, beta], ...]}
//   {"normalized": {"b": b, "pairs": [[alpha, omega], ...]}}
//   {"brieskorn": [a1, a2, a3]}
// Integer entries may also be given as decimal strings (arbitrary size).
struct InputDocument {
    enum class Kind { Unnormalized, Normalized, Brieskorn } kind;
    UnnormalizedSeifert unnormalized;
    Int b;
    std::vector<SeifertData::Arm> arms;
    Int brieskorn[3];
};

// Schema validation only; violations name the offending field path.
InputDocument parse_input(const std::string& text);

// Runs the mathematical validation (nu >= 3, coprimality, e < 0).
SeifertData to_seifert(const InputDocument& doc);

nlohmann::json seifert_json(const SeifertData& s);
nlohmann::json report_json(const InvariantReport& r);
std::string report_table(const InvariantReport& r);

}  // namespace seifert::cli
