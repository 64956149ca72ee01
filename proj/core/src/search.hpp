#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dense.hpp"
#include "longcycle/graph.hpp"

namespace longcycle::detail {

using IndexPath = std::vector<std::size_t>;

// Dense view of an induced subgraph on at most 64 vertices.
struct LocalDense {
    Dense d;
    std::vector<std::size_t> to_global;
    std::vector<int> to_local;  // -1 when absent
    int local(std::size_t v) const { return to_local[v]; }
};
LocalDense local_dense(const Graph& g, const std::vector<std::size_t>& vertices);

// Depth-first enumeration of simple paths starting at `from` inside
// `allowed`, cheapest-degree neighbour first. `visit` sees every prefix.
void explore_paths(const Graph& g, const std::vector<char>& allowed, std::size_t from,
                   std::uint64_t budget, const std::function<void(const IndexPath&)>& visit);

// Components of g minus the marked vertices.
std::vector<std::vector<std::size_t>> components_avoiding(const Graph& g, const std::vector<char>& blocked);

std::vector<std::size_t> bfs_path(const Graph& g, const std::vector<char>& allowed, std::size_t s,
                                  std::size_t t);

struct ImproveOptions {
    std::size_t target = static_cast<std::size_t>(-1);  // stop once reached (edges)
    std::uint64_t budget = 4000;                        // nodes per local search
    std::size_t window = 6;
};

// Lengthens a path with fixed endpoints by detours and window re-optimisation.
IndexPath improve_path(const Graph& g, IndexPath path, const ImproveOptions& options);
// Same for a cycle (length counted in edges = vertices).
IndexPath improve_cycle(const Graph& g, IndexPath cycle, const ImproveOptions& options);

// Some long cycle of the block containing `start` (DFS back-edge cycles,
// then improvement). Empty when g is a forest.
IndexPath heuristic_long_cycle(const Graph& g, const ImproveOptions& options);

}  // namespace longcycle::detail

namespace longcycle::detail {

// Vertex-disjoint paths, one from each source, ending at distinct sink
// vertices; a path stops at the first sink it meets. Only vertices with
// allowed[v] (plus the sources) are used. Empty when not all sources can be
// routed.
std::vector<IndexPath> disjoint_paths_to_sinks(const Graph& g, const std::vector<char>& allowed,
                                               const std::vector<std::size_t>& sources,
                                               const std::vector<char>& sink);

}  // namespace longcycle::detail
