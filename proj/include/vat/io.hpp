#pragma once

#include <iosfwd>
#include <string>

#include "vat/graph.hpp"

namespace vat {

// Line-oriented edge-list format: optional first content line "p <n>" fixing
// the vertex count, then one "u v" pair per line. Blank lines and lines
// starting with '#' are ignored. Without a header, n = 1 + max vertex id.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Bipartite format: mandatory header "b <n1> <n2>", then one "i j" cross
// edge per line with i on the left side and j on the right side.
BipartiteGraph parse_bipartite(std::istream& in);
BipartiteGraph parse_bipartite(const std::string& text);

void write_edge_list(std::ostream& out, const Graph& g);
void write_bipartite(std::ostream& out, const BipartiteGraph& b);

std::string to_edge_list(const Graph& g);
std::string to_bipartite_text(const BipartiteGraph& b);

}  // namespace vat
