#include "longcycle/graph.hpp"

#include <algorithm>
#include <cassert>

namespace longcycle {

std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph Graph::from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error("duplicate vertex label");
    g.labels_ = std::move(vertices);
    g.adj_.assign(g.labels_.size(), {});
    for (const Edge& e : edges) {
        if (e.u == e.v) throw Error("self-loop at " + std::to_string(e.u));
        std::size_t a = g.index_of(e.u);
        std::size_t b = g.index_of(e.v);
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (std::size_t i = 0; i < g.adj_.size(); ++i) {
        auto& row = g.adj_[i];
        std::sort(row.begin(), row.end());
        auto dup = std::adjacent_find(row.begin(), row.end());
        if (dup != row.end())
            throw Error("duplicate edge " + to_string(Edge(g.labels_[i], g.labels_[*dup])));
    }
    g.m_ = edges.size();
    g.check_invariants();
    return g;
}

Graph Graph::from_edges_merged(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (const Edge& e : edges)
        if (e.u != e.v) kept.push_back(e);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return from_edges(std::move(vertices), kept);
}

bool Graph::has_vertex(Vertex v) const {
    return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw Error("unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (std::size_t j : adj_[index_of(v)]) out.push_back(labels_[j]);
    return out;
}

bool Graph::adjacent_idx(std::size_t a, std::size_t b) const {
    const auto& row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    return adjacent_idx(index_of(a), index_of(b));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < adj_.size(); ++i)
        for (std::size_t j : adj_[i])
            if (i < j) out.emplace_back(labels_[i], labels_[j]);
    return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> vs(keep);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<char> in(order(), 0);
    for (Vertex v : vs) in[index_of(v)] = 1;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (!in[i]) continue;
        for (std::size_t j : adj_[i])
            if (i < j && in[j]) es.emplace_back(labels_[i], labels_[j]);
    }
    return from_edges(std::move(vs), es);
}

Graph Graph::without(const std::vector<Vertex>& removed) const {
    std::vector<char> gone(order(), 0);
    for (Vertex v : removed)
        if (has_vertex(v)) gone[index_of(v)] = 1;
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < order(); ++i)
        if (!gone[i]) keep.push_back(labels_[i]);
    return induced(keep);
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
    auto es = edges();
    if (!adjacent(a, b)) es.emplace_back(a, b);
    return from_edges(labels_, es);
}

void Graph::check_invariants() const {
    std::size_t half = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        const auto& row = adj_[i];
        assert(std::is_sorted(row.begin(), row.end()));
        for (std::size_t j : row) {
            assert(j != i);
            assert(adjacent_idx(j, i));
            (void)j;
        }
        half += row.size();
    }
    assert(half == 2 * m_);
    (void)half;
}

std::size_t min_degree(const Graph& g) {
    if (g.empty()) throw Error("empty graph");
    std::size_t best = g.adj(0).size();
    for (std::size_t i = 1; i < g.order(); ++i) best = std::min(best, g.adj(i).size());
    return best;
}

std::size_t min_degree_without(const Graph& g, const std::vector<Vertex>& removed) {
    Graph rest = g.without(removed);
    return rest.empty() ? 0 : min_degree(rest);
}

Graph complete_graph(int n, Vertex first) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(first + i);
        for (int j = 0; j < i; ++j) es.emplace_back(first + j, first + i);
    }
    return Graph::from_edges(vs, es);
}

Graph cycle_graph(int n, Vertex first) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(first + i);
        es.emplace_back(first + i, first + (i + 1) % n);
    }
    return Graph::from_edges(vs, es);
}

Graph path_graph(int n, Vertex first) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(first + i);
        if (i > 0) es.emplace_back(first + i - 1, first + i);
    }
    return Graph::from_edges(vs, es);
}

Graph petersen_graph() {
    std::vector<Vertex> vs{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(1 + i, 1 + (i + 1) % 5);
        es.emplace_back(6 + i, 6 + (i + 2) % 5);
        es.emplace_back(1 + i, 6 + i);
    }
    return Graph::from_edges(vs, es);
}

}  // namespace longcycle
