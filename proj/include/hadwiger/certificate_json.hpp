#pragma once

#include "hadwiger/pipeline.hpp"

#include <json.hpp>

namespace hadwiger {

using Json = nlohmann::ordered_json;

/// Vertex sets and witnesses are written as sorted vertex lists; the graph
/// goes in as graph6 when it fits the short form, as an edge list otherwise.
Json to_json(const Certificate& c);

/// Inverse of to_json. Throws std::invalid_argument (or a nlohmann error)
/// on a malformed record.
Certificate certificate_from_json(const Json& j);

Json to_json(const PatternWitness& w);
PatternWitness pattern_witness_from_json(const Json& j);

Json to_json(const MinorWitness& w);
MinorWitness minor_witness_from_json(const Json& j);

std::string to_string(MinorStatus s);
MinorStatus minor_status_from_string(const std::string& s);

}  // namespace hadwiger
