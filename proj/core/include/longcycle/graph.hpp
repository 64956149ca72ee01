#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace longcycle {

using Vertex = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph over opaque integer labels. Vertices are kept
// sorted, so index order agrees with label order.
class Graph {
public:
    Graph() = default;

    // Throws on self-loops, duplicate edges and unknown endpoints.
    static Graph from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges);
    // Same, but silently drops loops and parallel edges.
    static Graph from_edges_merged(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return m_; }
    bool empty() const { return labels_.empty(); }

    const std::vector<Vertex>& vertices() const { return labels_; }
    bool has_vertex(Vertex v) const;
    std::size_t index_of(Vertex v) const;
    Vertex label(std::size_t i) const { return labels_[i]; }

    const std::vector<std::size_t>& adj(std::size_t i) const { return adj_[i]; }
    std::vector<Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return adj_[index_of(v)].size(); }
    bool adjacent(Vertex a, Vertex b) const;
    bool adjacent_idx(std::size_t a, std::size_t b) const;

    std::vector<Edge> edges() const;

    Graph induced(const std::vector<Vertex>& keep) const;
    Graph without(const std::vector<Vertex>& removed) const;
    Graph with_edge(Vertex a, Vertex b) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_invariants() const;

    std::vector<Vertex> labels_;
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t m_ = 0;
};

std::size_t min_degree(const Graph& g);
// δ(G - removed); 0 when nothing is left.
std::size_t min_degree_without(const Graph& g, const std::vector<Vertex>& removed);

Graph complete_graph(int n, Vertex first = 1);
Graph cycle_graph(int n, Vertex first = 1);
Graph path_graph(int n, Vertex first = 1);
Graph petersen_graph();

}  // namespace longcycle
