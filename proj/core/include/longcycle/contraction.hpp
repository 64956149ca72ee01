#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/witness.hpp"

namespace longcycle {

struct ContractionRecord {
    Vertex survivor = 0;
    Vertex removed = 0;
    Edge original_edge;  // an edge of the original graph joining the two merged bags

    friend bool operator==(const ContractionRecord&, const ContractionRecord&) = default;
};

struct ContractionLog {
    std::vector<ContractionRecord> records;
};

// Incremental contraction of an original graph. Labels of the current graph
// are original labels; the survivor of a contraction is the smaller one.
class ContractionState {
public:
    explicit ContractionState(const Graph& original);

    void contract(Vertex a, Vertex b);
    void remove_vertex(Vertex v);

    bool present(Vertex v) const { return adj_.count(v) != 0; }
    bool adjacent(Vertex a, Vertex b) const;
    // Current vertex whose bag holds the original vertex, if still present.
    std::optional<Vertex> rep(Vertex original) const;
    std::vector<Vertex> bag(Vertex current) const;

    Graph current() const;
    const ContractionLog& log() const { return log_; }

private:
    const Graph* original_;
    std::map<Vertex, std::set<Vertex>> adj_;
    std::map<Vertex, Vertex> owner_;  // original -> current
    ContractionLog log_;
};

std::pair<Graph, ContractionLog> contract_edges(const Graph& g, const std::vector<Edge>& edges);

// A virtual edge of the contracted graph realised by a path of the original
// graph (marked edges of the compression).
struct VirtualEdge {
    Vertex a = 0;
    Vertex b = 0;
    PathWitness expansion;  // runs from a to b
};

struct LiftOptions {
    std::optional<Vertex> first;  // required original endpoint at the front
    std::optional<Vertex> last;
    std::vector<VirtualEdge> virtual_edges;
};

// Maps a path of the contracted graph back to the original graph by replaying
// the log, choosing realising edges so the result is as long as possible.
// The result is never shorter than the input.
PathWitness reverse(const Graph& original, const ContractionLog& log, const PathWitness& path,
                    const LiftOptions& options = {});

}  // namespace longcycle
