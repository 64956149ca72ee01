#include "longcycle/paths.hpp"

#include <algorithm>
#include <cmath>

#include "dense.hpp"
#include "longcycle/connectivity.hpp"
#include "search.hpp"

namespace longcycle {

namespace {

PathWitness to_labels(const Graph& g, const detail::IndexPath& p) {
    PathWitness w;
    for (std::size_t i : p) w.vertices.push_back(g.label(i));
    return w;
}

// Arc of the cycle from position i forward to position j (inclusive).
std::vector<Vertex> arc(const std::vector<Vertex>& c, std::size_t i, std::size_t j, bool forward) {
    std::vector<Vertex> out;
    const std::size_t L = c.size();
    for (std::size_t k = i;; k = forward ? (k + 1) % L : (k + L - 1) % L) {
        out.push_back(c[k]);
        if (k == j) break;
    }
    return out;
}

std::vector<Vertex> longer_arc(const std::vector<Vertex>& c, std::size_t i, std::size_t j) {
    auto f = arc(c, i, j, true);
    auto b = arc(c, i, j, false);
    if (f.size() != b.size()) return f.size() > b.size() ? f : b;
    return std::min(f, b);
}

}  // namespace

bool is_bridge(const Graph& g, Vertex a, Vertex b) {
    if (!g.adjacent(a, b)) return false;
    std::vector<char> allowed(g.order(), 1);
    std::size_t ai = g.index_of(a), bi = g.index_of(b);
    // BFS from a avoiding the edge ab.
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> q{ai};
    seen[ai] = 1;
    for (std::size_t k = 0; k < q.size(); ++k)
        for (std::size_t y : g.adj(q[k])) {
            if (q[k] == ai && y == bi) continue;
            if (!seen[y]) {
                seen[y] = 1;
                q.push_back(y);
            }
        }
    return !seen[bi];
}

PathWitness path_between_via_cycle(const Graph& g, const CycleWitness& c, Vertex s, Vertex t) {
    if (s == t) throw Error("s and t must differ");
    if (!is_two_connected(g)) throw Error("graph not 2-connected");
    auto v = validate_witness(g, c);
    if (!v) throw Error("invalid cycle: " + v.violation);
    const auto& cv = c.vertices;
    auto ps = std::find(cv.begin(), cv.end(), s);
    auto pt = std::find(cv.begin(), cv.end(), t);
    if (ps != cv.end() && pt != cv.end())
        return PathWitness{longer_arc(cv, static_cast<std::size_t>(ps - cv.begin()),
                                      static_cast<std::size_t>(pt - cv.begin()))};
    std::vector<char> sink(g.order(), 0), allowed(g.order(), 1);
    for (Vertex x : cv) sink[g.index_of(x)] = 1;
    auto paths = detail::disjoint_paths_to_sinks(g, allowed, {g.index_of(s), g.index_of(t)}, sink);
    if (paths.size() != 2) throw Error("graph not 2-connected");
    Vertex x = g.label(paths[0].back());
    Vertex y = g.label(paths[1].back());
    auto px = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), x) - cv.begin());
    auto py = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), y) - cv.begin());
    auto mid = longer_arc(cv, px, py);
    PathWitness out = to_labels(g, paths[0]);
    out.vertices.insert(out.vertices.end(), mid.begin() + 1, mid.end());
    for (auto it = paths[1].rbegin() + 1; it != paths[1].rend(); ++it) out.vertices.push_back(g.label(*it));
    return out;
}

PathWitness st_path_from_cycle_oracle(const Graph& g, Vertex s, Vertex t, const ApproximatorHandle& oracle) {
    if (s == t) throw Error("s and t must differ");
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw Error("unknown endpoint");
    if (!is_connected(g)) throw Error("graph not connected");
    if (is_bridge(g, s, t)) return PathWitness{{s, t}};
    const std::size_t si = g.index_of(s), ti = g.index_of(t);
    auto label = [&](std::size_t i, int copy) -> Vertex {
        if (i == si || i == ti) return static_cast<Vertex>(2 * i);
        return static_cast<Vertex>(2 * i + static_cast<std::size_t>(copy));
    };
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < g.order(); ++i) {
        vs.push_back(label(i, 0));
        if (i != si && i != ti) vs.push_back(label(i, 1));
    }
    for (const Edge& e : g.edges())
        for (int copy = 0; copy < 2; ++copy)
            es.emplace_back(label(g.index_of(e.u), copy), label(g.index_of(e.v), copy));
    Graph glued = Graph::from_edges_merged(vs, es);
    const Vertex sp = label(si, 0), tp = label(ti, 0);
    auto tree = block_cut_tree(glued);
    std::optional<std::size_t> home;
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        const auto& blk = tree.blocks[b];
        if (std::binary_search(blk.begin(), blk.end(), sp) && std::binary_search(blk.begin(), blk.end(), tp)) {
            home = b;
            break;
        }
    }
    if (!home) throw Error("glued graph has no block through both terminals");
    Graph block = glued.induced(tree.blocks[*home]);
    auto cycle = oracle.invoke(block);
    if (!cycle) throw Error("oracle " + oracle.name() + " found no cycle in a 2-connected block");
    PathWitness glued_path = path_between_via_cycle(block, *cycle, sp, tp);
    PathWitness out;
    for (Vertex x : glued_path.vertices) out.vertices.push_back(g.label(static_cast<std::size_t>(x / 2)));
    auto ok = validate_st_path(g, out, s, t);
    if (!ok) throw Error("doubling construction produced an invalid path: " + ok.violation);
    return out;
}

namespace {

struct JointSearch {
    const Graph& g;
    std::size_t k;
    std::vector<char> in_b;
    std::vector<char> used;
    detail::IndexPath p[2];
    bool done[2] = {false, false};
    std::vector<detail::IndexPath> completion;

    std::size_t total() const { return p[0].size() + p[1].size() - 2; }

    bool route(bool keep) {
        std::vector<std::size_t> sources;
        std::vector<int> which;
        for (int i = 0; i < 2; ++i)
            if (!done[i]) {
                sources.push_back(p[i].back());
                which.push_back(i);
            }
        std::vector<char> allowed(g.order(), 0), sink(g.order(), 0);
        for (std::size_t v = 0; v < g.order(); ++v) {
            allowed[v] = !used[v];
            sink[v] = in_b[v] && !used[v];
        }
        auto paths = detail::disjoint_paths_to_sinks(g, allowed, sources, sink);
        if (paths.size() != sources.size()) return false;
        if (keep) {
            for (std::size_t q = 0; q < paths.size(); ++q) {
                auto& dst = p[which[q]];
                dst.insert(dst.end(), paths[q].begin() + 1, paths[q].end());
            }
        }
        return true;
    }

    bool run() {
        if (done[0] && done[1]) return total() >= k;
        if (total() >= k) return route(true);
        if (!route(false)) return false;
        int i = done[0] ? 1 : 0;
        std::size_t end = p[i].back();
        for (std::size_t y : g.adj(end)) {
            if (used[y]) continue;
            used[y] = 1;
            p[i].push_back(y);
            done[i] = in_b[y] != 0;
            if (run()) return true;
            done[i] = false;
            p[i].pop_back();
            used[y] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<PathPair> two_disjoint_paths_min_total(const Graph& g, std::pair<Vertex, Vertex> a,
                                                     std::pair<Vertex, Vertex> b, std::size_t k,
                                                     ExactOptions options) {
    if (a.first == a.second || b.first == b.second) throw Error("endpoint pairs must be two distinct vertices");
    const std::size_t a1 = g.index_of(a.first), a2 = g.index_of(a.second);
    const std::size_t b1 = g.index_of(b.first), b2 = g.index_of(b.second);
    const std::size_t n = g.order();
    if (n <= options.threshold && n + 1 <= kMaxExactOrder) {
        // Gadget: a new vertex v adjacent to b1, b2; a longest a1-a2 path
        // through v splits into the two paths.
        auto d = detail::make_dense(g);
        int v = d.n;
        d.adj.push_back(detail::bit(static_cast<int>(b1)) | detail::bit(static_cast<int>(b2)));
        d.adj[b1] |= detail::bit(v);
        d.adj[b2] |= detail::bit(v);
        ++d.n;
        detail::Budget budget;
        auto best = detail::longest_st_path(d, d.all(), static_cast<int>(a1), static_cast<int>(a2), budget,
                                            detail::bit(v));
        if (best.empty() || best.size() - 3 < k) return std::nullopt;
        auto cut = std::find(best.begin(), best.end(), v);
        PathWitness first, second;
        for (auto it = best.begin(); it != cut; ++it) first.vertices.push_back(g.label(static_cast<std::size_t>(*it)));
        for (auto it = best.rbegin(); it.base() - 1 != cut; ++it)
            second.vertices.push_back(g.label(static_cast<std::size_t>(*it)));
        return PathPair{first, second};
    }
    JointSearch js{g, k, std::vector<char>(n, 0), std::vector<char>(n, 0), {{a1}, {a2}}, {false, false}, {}};
    js.in_b[b1] = js.in_b[b2] = 1;
    js.used[a1] = js.used[a2] = 1;
    js.done[0] = js.in_b[a1] != 0;
    js.done[1] = js.in_b[a2] != 0;
    if (!js.run()) return std::nullopt;
    return PathPair{to_labels(g, js.p[0]), to_labels(g, js.p[1])};
}

PathWitness long_st_path(const Graph& g, Vertex s, Vertex t, ExactOptions options) {
    if (s == t) throw Error("s and t must differ");
    if (g.order() <= options.threshold && g.order() <= kMaxExactOrder) return exact_longest_st_path(g, s, t, options);
    std::vector<char> allowed(g.order(), 1);
    auto p = detail::bfs_path(g, allowed, g.index_of(s), g.index_of(t));
    if (p.empty()) throw Error("disconnected pair");
    detail::ImproveOptions opt;
    opt.target = g.order() - 1;
    return to_labels(g, detail::improve_path(g, p, opt));
}

PathWitness eg_long_st_path(const Graph& g, Vertex s, Vertex t, const std::vector<Vertex>& B,
                            ExactOptions options) {
    if (s == t) throw Error("s and t must differ");
    if (!is_two_connected(g)) throw Error("graph not 2-connected");
    const std::size_t bound = min_degree_without(g, B);
    std::vector<char> allowed(g.order(), 1);
    auto p = detail::bfs_path(g, allowed, g.index_of(s), g.index_of(t));
    detail::ImproveOptions opt;
    opt.target = g.order() - 1;
    p = detail::improve_path(g, p, opt);
    if (p.size() - 1 >= bound) return to_labels(g, p);
    if (g.order() <= options.threshold && g.order() <= kMaxExactOrder) {
        PathWitness exact = exact_longest_st_path(g, s, t, options);
        if (exact.length() >= bound) return exact;
        throw Error("Erdos-Gallai bound violated by the exact optimum");
    }
    throw Error("eg_long_st_path: bound " + std::to_string(bound) + " not reached");
}

}  // namespace longcycle
