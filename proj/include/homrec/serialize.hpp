#pragma once

// JSON forms of colorings and reports.
//
// Coloring: {"n": 5, "ones": [[0,1],[1,2]]} with pairs in colex order, or
// {"n": 5, "bits_hex": "..."}: pair bits in colex order, packed little-endian
// within each byte, lowercase hex. Both forms parse.

#include <string>

#include <json.hpp>

#include "homrec/coloring.hpp"
#include "homrec/critical.hpp"
#include "homrec/reconstruct.hpp"
#include "homrec/srcheck.hpp"
#include "homrec/structure.hpp"

namespace homrec {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const Coloring& phi);
std::string bits_hex(const Coloring& phi);
/// Throws Error(Parse) on anything malformed.
Coloring coloring_from_json(const Json& j);

Json to_json(const EdgeSet& edges);  // pair list
Json to_json(const Component& c);
Json to_json(const CriticalCycleWitness& w);
Json to_json(const RValueReport& report);
Json to_json(const RMembership& m);
Json to_json(const SRReport& report);
Json to_json(const Theorem63Witness& w);

}  // namespace homrec
