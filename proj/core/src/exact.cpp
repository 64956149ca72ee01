#include "longcycle/exact.hpp"

#include <algorithm>

#include "dense.hpp"

namespace longcycle {

namespace {

void check_size(const Graph& g, const ExactOptions& options) {
    if (g.order() > options.threshold || g.order() > kMaxExactOrder)
        throw Error("instance too large for exact oracle");
}

}  // namespace

std::optional<CycleWitness> exact_longest_cycle(const Graph& g, ExactOptions options) {
    check_size(g, options);
    auto d = detail::make_dense(g);
    detail::Budget budget;
    auto idx = detail::longest_cycle(d, d.all(), budget);
    if (idx.empty()) return std::nullopt;
    CycleWitness c;
    for (int i : idx) c.vertices.push_back(g.label(static_cast<std::size_t>(i)));
    return c;
}

PathWitness exact_longest_st_path(const Graph& g, Vertex s, Vertex t, ExactOptions options) {
    if (s == t) throw Error("s and t must differ");
    check_size(g, options);
    std::size_t si = g.index_of(s);
    std::size_t ti = g.index_of(t);
    auto d = detail::make_dense(g);
    detail::Budget budget;
    auto idx = detail::longest_st_path(d, d.all(), static_cast<int>(si), static_cast<int>(ti), budget);
    if (idx.empty()) throw Error("disconnected pair");
    PathWitness p;
    for (int i : idx) p.vertices.push_back(g.label(static_cast<std::size_t>(i)));
    return p;
}

PathWitness exact_longest_path(const Graph& g, ExactOptions options) {
    if (g.empty()) throw Error("empty graph");
    check_size(g, options);
    if (g.order() + 1 > kMaxExactOrder) throw Error("instance too large for exact oracle");
    // A universal apex turns longest paths into longest cycles through it.
    auto d = detail::make_dense(g);
    int apex = d.n;
    d.adj.push_back(0);
    for (int i = 0; i < apex; ++i) {
        d.adj[static_cast<std::size_t>(i)] |= detail::bit(apex);
        d.adj[static_cast<std::size_t>(apex)] |= detail::bit(i);
    }
    ++d.n;
    detail::Budget budget;
    auto idx = detail::longest_cycle(d, d.all(), budget);
    PathWitness p;
    if (idx.empty()) {
        p.vertices.push_back(g.label(0));
        return p;
    }
    auto it = std::find(idx.begin(), idx.end(), apex);
    std::rotate(idx.begin(), it + 1, idx.end());
    idx.pop_back();
    for (int i : idx) p.vertices.push_back(g.label(static_cast<std::size_t>(i)));
    return p;
}

}  // namespace longcycle
