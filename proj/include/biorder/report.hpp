#pragma once

// JSON and text rendering of analysis and probe reports.

#include "biorder/orderprops.hpp"
#include "biorder/verdict.hpp"

#include <json.hpp>

#include <string>

namespace biorder {

nlohmann::ordered_json to_json(const BigInt& v);
nlohmann::ordered_json to_json(const IntPoly& p);
nlohmann::ordered_json to_json(const AnalysisReport& r, const Alphabet& alphabet);
nlohmann::ordered_json to_json(const ProbeResult& r, const Alphabet& alphabet);

std::string to_text(const AnalysisReport& r, const Alphabet& alphabet);
std::string to_text(const ProbeResult& r, const Alphabet& alphabet);

}  // namespace biorder
