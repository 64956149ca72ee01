#pragma once

#include <string>
#include <string_view>

#include "longcycle/graph.hpp"

namespace longcycle {

// Text format: "n m", then m lines "u v" over labels 1..n. '#' starts a
// comment; blank lines are ignored.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

// Requires labels 1..n. Edges come out sorted.
std::string write_graph(const Graph& g);

}  // namespace longcycle
