#pragma once

// Serialization of library results: JSON for machines, CSV and plain text
// for humans.  Output is byte-deterministic for fixed input.

#include <string>

#include "json.hpp"

#include "ratpath/bijections.hpp"
#include "ratpath/enumeration.hpp"
#include "ratpath/series.hpp"
#include "ratpath/statistics.hpp"
#include "ratpath/verification.hpp"

namespace ratpath {

using Json = nlohmann::ordered_json;

// JSON number when the value fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& value);

Json to_json(const StatReport& report);
Json to_json(const JointTable& table);
Json to_json(const TruncSeries& series);
Json to_json(const HitLiftTrace& trace);
Json to_json(const RatioSplit& split);
Json to_json(const VerifyReport& report);
Json to_json(const SuiteReport& report);

std::string csv(const JointTable& table);
std::string csv(const TruncSeries& series);
std::string csv(const SuiteReport& report);

std::string text(const JointTable& table);
std::string text(const TruncSeries& series);
std::string text(const SuiteReport& report);

}  // namespace ratpath
