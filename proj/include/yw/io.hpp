#pragma once

#include "yw/graph.hpp"

#include <string>

namespace yw {

// Serializations are deterministic: identical graphs yield identical bytes.
std::string export_dot(const Graph& g);
std::string export_json(const Graph& g);
std::string export_text(const Graph& g);
std::string export_tikz(const Graph& g);

// Inverse of export_json up to the stats that only generation can know.
Graph parse_graph_document(const std::string& json_text);

// Reads a graph document from disk; throws std::runtime_error with file and
// offending-field context on schema violations.
Graph load_fixture(const std::string& path);

// Planar renderings of a wall, one column drawing per explicit column plus
// the first ground column.
std::string render_wall_text(const GroundState& g, const Wall& w);
std::string render_wall_tikz(const GroundState& g, const Wall& w);

} // namespace yw
