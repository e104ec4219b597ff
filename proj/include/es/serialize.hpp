// JSON bindings for the public value types and the census JSONL schema:
//   Triple     -> {"x":..,"y":..,"z":..}
//   DuvWitness -> {"d":..,"u":..,"v":..,"n":..}
//   CensusRecord -> {"v":1,"p":..,"has_duv":..,"duv":[..],"gcd_ns":[..],
//                    "xy":..,"yz":..,"mordell_hard":..,"count":..}
// ordered_json keeps field order stable so census files are byte-identical
// across runs and shard counts. Integers stay exact; no floats anywhere.
#pragma once

#include "es/census.hpp"
#include "es/solution.hpp"

#include "json.hpp"

#include <string>

namespace es {

using json = nlohmann::ordered_json;

inline constexpr int kCensusSchemaVersion = 1;

void to_json(json& j, const Triple& t);
void from_json(const json& j, Triple& t);

void to_json(json& j, const DuvWitness& w);
void from_json(const json& j, DuvWitness& w);

void to_json(json& j, const CongruenceClass& c);

json census_record_to_json(const CensusRecord& rec);

/// One compact JSONL line, no trailing newline.
std::string census_record_to_line(const CensusRecord& rec);

/// Parse one line back; throws std::invalid_argument on schema mismatch
/// or malformed JSON.
CensusRecord census_record_from_line(const std::string& line);

}  // namespace es
