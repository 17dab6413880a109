#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "srgb/graph.hpp"

namespace srgb {

/// Edge-list text: vertex count on the first line, then one "u v" pair per
/// line, 0-indexed. Blank lines and '#' comments are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 encoding for graphs with fewer than 63 vertices.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads a file in either format; graph6 is recognised by its single-token
/// first line that is not a plain integer.
Graph read_graph_file(const std::string& path);

}  // namespace srgb
