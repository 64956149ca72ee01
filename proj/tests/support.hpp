#pragma once

// Test-only helpers: seeded graph generators and brute-force reference
// solvers written independently of the library's search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/witness.hpp"

namespace support {

using longcycle::Edge;
using longcycle::Graph;
using longcycle::Vertex;

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (static_cast<int>(draw(rng, 100)) < percent) es.emplace_back(i, j);
    return Graph::from_edges(vs, es);
}

// Ear construction: a cycle plus paths between existing vertices, then
// random chords. Always 2-connected.
inline Graph random_two_connected(int n, int chord_percent, std::mt19937_64& rng) {
    int base = 3 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 2)));
    std::vector<Vertex> vs;
    std::set<Edge> es;
    for (int i = 1; i <= base; ++i) {
        vs.push_back(i);
        es.insert(Edge(i, i % base + 1));
    }
    int next = base + 1;
    while (next <= n) {
        int len = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(std::min(3, n - next + 1))));
        Vertex a = vs[draw(rng, vs.size())];
        Vertex b = a;
        while (b == a) b = vs[draw(rng, vs.size())];
        Vertex prev = a;
        for (int k = 0; k < len; ++k) {
            vs.push_back(next);
            es.insert(Edge(prev, next));
            prev = next++;
        }
        es.insert(Edge(prev, b));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (static_cast<int>(draw(rng, 100)) < chord_percent) es.insert(Edge(i, j));
    return Graph::from_edges(vs, std::vector<Edge>(es.begin(), es.end()));
}

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> a(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j : g.adj(i)) a[i].push_back(static_cast<int>(j));
    return a;
}

inline bool connected_without(const Graph& g, std::optional<std::size_t> skip) {
    std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::size_t start = 0;
    while (skip && start == *skip) ++start;
    if (start >= n) return true;
    std::vector<std::size_t> st{start};
    seen[start] = 1;
    std::size_t count = 1;
    while (!st.empty()) {
        auto x = st.back();
        st.pop_back();
        for (auto y : g.adj(x))
            if (!seen[y] && (!skip || y != *skip)) {
                seen[y] = 1;
                ++count;
                st.push_back(y);
            }
    }
    return count == n - (skip ? 1 : 0);
}

inline bool brute_two_connected(const Graph& g) {
    if (g.order() < 3 || !connected_without(g, std::nullopt)) return false;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

// Held-Karp style reachability over subsets.
inline int brute_longest_cycle_length(const Graph& g) {
    int n = static_cast<int>(g.order());
    auto a = adjacency(g);
    int best = 0;
    for (int r = 0; r < n; ++r) {
        std::vector<std::vector<char>> dp(std::size_t{1} << n, std::vector<char>(n, 0));
        dp[std::size_t{1} << r][r] = 1;
        for (std::size_t m = 0; m < dp.size(); ++m) {
            if (!(m >> r & 1) || (m & ((std::size_t{1} << r) - 1))) continue;
            for (int v = 0; v < n; ++v) {
                if (!dp[m][v]) continue;
                int cnt = __builtin_popcountll(m);
                if (cnt >= 3 && g.adjacent_idx(v, r)) best = std::max(best, cnt);
                for (int w : a[v])
                    if (w > r && !(m >> w & 1)) dp[m | (std::size_t{1} << w)][w] = 1;
            }
        }
    }
    return best;
}

inline int brute_longest_st_path_length(const Graph& g, Vertex s, Vertex t) {
    int n = static_cast<int>(g.order());
    int si = static_cast<int>(g.index_of(s));
    int ti = static_cast<int>(g.index_of(t));
    auto a = adjacency(g);
    std::vector<std::vector<char>> dp(std::size_t{1} << n, std::vector<char>(n, 0));
    dp[std::size_t{1} << si][si] = 1;
    int best = -1;
    for (std::size_t m = 0; m < dp.size(); ++m)
        for (int v = 0; v < n; ++v) {
            if (!dp[m][v]) continue;
            if (v == ti) {
                best = std::max(best, __builtin_popcountll(m) - 1);
                continue;
            }
            for (int w : a[v])
                if (!(m >> w & 1)) dp[m | (std::size_t{1} << w)][w] = 1;
        }
    return best;
}

// Calls f on every simple path from s (as label sequences), including the
// single-vertex path.
inline void for_each_path_from(const Graph& g, Vertex s,
                               const std::function<void(const std::vector<Vertex>&)>& f) {
    std::vector<Vertex> path{s};
    std::set<Vertex> used{s};
    std::function<void()> rec = [&]() {
        f(path);
        for (Vertex y : g.neighbors(path.back())) {
            if (used.count(y)) continue;
            used.insert(y);
            path.push_back(y);
            rec();
            path.pop_back();
            used.erase(y);
        }
    };
    rec();
}

inline void for_each_st_path(const Graph& g, Vertex s, Vertex t,
                             const std::function<void(const std::vector<Vertex>&)>& f) {
    for_each_path_from(g, s, [&](const std::vector<Vertex>& p) {
        if (p.back() == t) f(p);
    });
}

// Every cycle once: smallest vertex first, second < last.
inline void for_each_cycle(const Graph& g, const std::function<void(const std::vector<Vertex>&)>& f) {
    for (Vertex r : g.vertices()) {
        std::vector<Vertex> path{r};
        std::set<Vertex> used{r};
        std::function<void()> rec = [&]() {
            Vertex end = path.back();
            if (path.size() >= 3 && g.adjacent(end, r) && path[1] < end) f(path);
            for (Vertex y : g.neighbors(end)) {
                if (y < r || used.count(y)) continue;
                used.insert(y);
                path.push_back(y);
                rec();
                path.pop_back();
                used.erase(y);
            }
        };
        rec();
    }
}

inline bool valid_path(const Graph& g, const std::vector<Vertex>& p) {
    return static_cast<bool>(longcycle::validate_witness(g, longcycle::PathWitness{p}));
}

}  // namespace support

namespace support {

// Max total length of two disjoint paths a1->B, a2->B (distinct ends), or -1.
inline int brute_two_paths_max(const Graph& g, Vertex a1, Vertex a2, Vertex b1, Vertex b2) {
    auto in_b = [&](Vertex x) { return x == b1 || x == b2; };
    int best = -1;
    auto paths_from = [&](const Graph& h, Vertex s, const std::set<Vertex>& forbid,
                          const std::function<void(const std::vector<Vertex>&)>& f) {
        std::vector<Vertex> path{s};
        std::set<Vertex> used{s};
        std::function<void()> rec = [&]() {
            if (in_b(path.back())) {
                f(path);
                return;
            }
            for (Vertex y : h.neighbors(path.back())) {
                if (used.count(y) || forbid.count(y)) continue;
                used.insert(y);
                path.push_back(y);
                rec();
                path.pop_back();
                used.erase(y);
            }
        };
        rec();
    };
    paths_from(g, a1, {a2}, [&](const std::vector<Vertex>& p1) {
        std::set<Vertex> forbid(p1.begin(), p1.end());
        if (forbid.count(a2)) return;
        paths_from(g, a2, forbid, [&](const std::vector<Vertex>& p2) {
            if (p2.back() == p1.back()) return;
            best = std::max(best, static_cast<int>(p1.size() + p2.size()) - 2);
        });
    });
    return best;
}

}  // namespace support
