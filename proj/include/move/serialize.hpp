#pragma once

#include <string>

#include <json.hpp>

#include "move/metrics.hpp"
#include "move/runrecord.hpp"

namespace move {

// ordered_json keeps insertion order, so identical data serializes to
// identical bytes; doubles round-trip exactly (shortest representation).
using Json = nlohmann::ordered_json;

Json genome_to_json(const cppn::Genome& g);
cppn::Genome genome_from_json(const Json& j);

Json lineage_to_json(const LineageLog& log);
LineageLog lineage_from_json(const Json& j);

Json run_record_to_json(const RunRecord& rec);
RunRecord run_record_from_json(const Json& j);

Json table_to_json(const NormalizationTable& table);
NormalizationTable table_from_json(const Json& j);

void write_json_file(const Json& j, const std::string& path, int indent = -1);
Json read_json_file(const std::string& path);

// Shortest round-trip decimal representation (via std::to_chars).
std::string format_double(double v);

// RFC-4180-ish: quotes fields containing commas/quotes/newlines.
std::string csv_field(const std::string& s);

}  // namespace move
