#pragma once

#include <iosfwd>
#include <string>

#include "eh/graph.hpp"

namespace eh {

// Edge-list text format. First line "n m", then m lines "u v" with 0-based
// ids; '#' starts a comment; blank lines ignored. Parse errors carry the
// 1-based line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the same format with edges sorted (u < v, lexicographic).
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// graph6 (single line, standard encoding; supports n < 2^18).
Graph read_graph6_line(const std::string& line);

// Dispatches on extension: ".g6" uses graph6, everything else edge-list.
Graph read_graph_file(const std::string& path);

}  // namespace eh
