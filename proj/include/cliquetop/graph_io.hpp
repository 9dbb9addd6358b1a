#pragma once

#include <string>
#include <string_view>

#include "cliquetop/graph.hpp"

namespace cliquetop {

// One line of standard graph6. An optional ">>graph6<<" header is stripped.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// DIMACS-like edge list: "p edge <n> <m>" then m lines "e <u> <v>" with
// 1-based endpoints. Leading "c" comment lines are permitted.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Detects the format (DIMACS when a "p" line appears, graph6 otherwise)
// and parses the first graph in the text. '#' lines are skipped.
Graph parse_graph_auto(std::string_view text);

}  // namespace cliquetop
