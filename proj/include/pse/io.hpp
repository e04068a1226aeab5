#pragma once

#include <string>

#include <json.hpp>

#include "pse/analysis.hpp"
#include "pse/graph.hpp"
#include "pse/structure.hpp"

namespace pse {

using Json = nlohmann::ordered_json;

/// Structure JSON:
/// {"vocabulary": {"root": 1, "E": 2},
///  "universe": ["p1","p2"],
///  "relations": {"root": [["p1"]], "E": [["p1","p2"]]}}
/// Field order is irrelevant on input; duplicate tuples and unknown
/// fields are rejected. Serialization emits the keys in this order.
Structure parse_structure(const std::string& text);
Structure structure_from_json(const Json& j);
Json structure_to_json(const Structure& s);
std::string serialize_structure(const Structure& s);

/// Edge list: first line "n m", then m lines "u v" with 0-based vertex
/// numbers. Undirected; self-loops and duplicate edges are rejected.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Json analysis_report_to_json(const AnalysisReport& r);
Json classify_report_to_json(const ClassifyReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pse
