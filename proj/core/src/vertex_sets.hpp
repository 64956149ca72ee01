#pragma once

#include <algorithm>
#include <vector>

#include "longcycle/connectivity.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/witness.hpp"
#include "search.hpp"

namespace longcycle::detail {

inline bool sorted_contains(const std::vector<Vertex>& xs, Vertex v) { return std::binary_search(xs.begin(), xs.end(), v); }

inline std::vector<Vertex> sorted(std::vector<Vertex> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

inline PathWitness to_labels(const Graph& g, const IndexPath& p) {
    PathWitness w;
    for (std::size_t i : p) w.vertices.push_back(g.label(i));
    return w;
}

inline std::vector<Vertex> neighbours_in(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& in) {
    std::vector<Vertex> out;
    for (Vertex x : from)
        for (Vertex y : g.neighbors(x))
            if (sorted_contains(in, y)) out.push_back(y);
    return sorted(out);
}

// Maximum matching between A and B is exactly one: some edge exists and one
// vertex covers them all.
inline bool matching_is_one(const Graph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
    std::vector<Edge> es;
    for (Vertex x : A)
        for (Vertex y : g.neighbors(x))
            if (sorted_contains(B, y)) es.push_back({x, y});
    if (es.empty()) return false;
    for (Vertex c : {es[0].u, es[0].v})
        if (std::all_of(es.begin(), es.end(), [&](const Edge& e) { return e.u == c || e.v == c; })) return true;
    return false;
}

inline std::vector<Vertex> leaf_inner_vertices(const BlockTree& bt) {
    std::vector<Vertex> inner;
    for (std::size_t b : bt.leaf_blocks)
        inner.insert(inner.end(), bt.inner_vertices[b].begin(), bt.inner_vertices[b].end());
    return sorted(inner);
}

}  // namespace longcycle::detail
