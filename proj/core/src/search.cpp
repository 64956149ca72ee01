#include "search.hpp"

#include <algorithm>
#include <queue>

namespace longcycle::detail {

LocalDense local_dense(const Graph& g, const std::vector<std::size_t>& vertices) {
    if (vertices.size() > 64) throw Error("local search region too large");
    LocalDense ld;
    ld.to_global = vertices;
    std::sort(ld.to_global.begin(), ld.to_global.end());
    ld.to_local.assign(g.order(), -1);
    for (std::size_t i = 0; i < ld.to_global.size(); ++i) ld.to_local[ld.to_global[i]] = static_cast<int>(i);
    ld.d.n = static_cast<int>(ld.to_global.size());
    ld.d.adj.assign(ld.to_global.size(), 0);
    for (std::size_t i = 0; i < ld.to_global.size(); ++i)
        for (std::size_t y : g.adj(ld.to_global[i]))
            if (ld.to_local[y] >= 0) ld.d.adj[i] |= bit(ld.to_local[y]);
    return ld;
}

void explore_paths(const Graph& g, const std::vector<char>& allowed, std::size_t from,
                   std::uint64_t budget, const std::function<void(const IndexPath&)>& visit) {
    std::vector<char> used(g.order(), 0);
    IndexPath path{from};
    used[from] = 1;
    std::uint64_t spent = 0;
    auto free_degree = [&](std::size_t v) {
        std::size_t c = 0;
        for (std::size_t y : g.adj(v)) c += allowed[y] && !used[y];
        return c;
    };
    std::function<void()> rec = [&]() {
        if (spent++ >= budget) return;
        visit(path);
        std::vector<std::pair<std::size_t, std::size_t>> next;
        for (std::size_t y : g.adj(path.back()))
            if (allowed[y] && !used[y]) next.emplace_back(free_degree(y), y);
        std::sort(next.begin(), next.end());
        for (auto [deg, y] : next) {
            (void)deg;
            used[y] = 1;
            path.push_back(y);
            rec();
            path.pop_back();
            used[y] = 0;
            if (spent >= budget) return;
        }
    };
    rec();
}

std::vector<std::vector<std::size_t>> components_avoiding(const Graph& g, const std::vector<char>& blocked) {
    std::vector<char> seen(blocked);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t r = 0; r < g.order(); ++r) {
        if (seen[r]) continue;
        std::vector<std::size_t> comp{r};
        seen[r] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t y : g.adj(comp[k]))
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::size_t> bfs_path(const Graph& g, const std::vector<char>& allowed, std::size_t s,
                                  std::size_t t) {
    std::vector<std::size_t> prev(g.order(), static_cast<std::size_t>(-1));
    std::queue<std::size_t> q;
    q.push(s);
    prev[s] = s;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        if (x == t) break;
        for (std::size_t y : g.adj(x))
            if ((allowed[y] || y == t) && prev[y] == static_cast<std::size_t>(-1)) {
                prev[y] = x;
                q.push(y);
            }
    }
    if (prev[t] == static_cast<std::size_t>(-1)) return {};
    std::vector<std::size_t> out{t};
    while (out.back() != s) out.push_back(prev[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

// Smallest |i - j| with i in a, j in b, i != j (both sorted). Returns the pair.
bool closest_pair(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, std::size_t& bi,
                  std::size_t& bj) {
    bool found = false;
    std::size_t best = static_cast<std::size_t>(-1);
    std::size_t p = 0;
    for (std::size_t x : a) {
        while (p < b.size() && b[p] < x) ++p;
        for (std::size_t q = (p > 0 ? p - 1 : 0); q < std::min(b.size(), p + 2); ++q) {
            std::size_t y = b[q];
            if (y == x) continue;
            std::size_t dist = x > y ? x - y : y - x;
            if (dist < best) {
                best = dist;
                bi = x;
                bj = y;
                found = true;
            }
        }
    }
    return found;
}

struct Detour {
    std::size_t gain = 0;
    std::size_t i = 0, j = 0;  // attachment positions, i < j (paths) or arbitrary (cycles)
    IndexPath inner;           // runs from the vertex next to i to the vertex next to j
};

// Candidate detours through components outside `onpath`.
// `distance(i, j)` gives the number of edges the detour would replace.
template <class Distance>
Detour find_detour(const Graph& g, const IndexPath& seq, const ImproveOptions& opt, Distance distance) {
    std::vector<long> pos(g.order(), -1);
    std::vector<char> blocked(g.order(), 0);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        pos[seq[k]] = static_cast<long>(k);
        blocked[seq[k]] = 1;
    }
    std::vector<std::vector<std::size_t>> att(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (blocked[v]) continue;
        for (std::size_t y : g.adj(v))
            if (pos[y] >= 0) att[v].push_back(static_cast<std::size_t>(pos[y]));
        std::sort(att[v].begin(), att[v].end());
    }
    Detour best;
    for (const auto& comp : components_avoiding(g, blocked)) {
        std::vector<char> allowed(g.order(), 0);
        std::size_t starts = 0;
        for (std::size_t v : comp) {
            allowed[v] = 1;
            starts += !att[v].empty();
        }
        if (!starts) continue;
        std::uint64_t per = std::max<std::uint64_t>(64, opt.budget / starts);
        for (std::size_t x : comp) {
            if (att[x].empty()) continue;
            explore_paths(g, allowed, x, per, [&](const IndexPath& pre) {
                std::size_t y = pre.back();
                if (att[y].empty()) return;
                std::size_t i = 0, j = 0;
                if (!closest_pair(att[x], att[y], i, j)) return;
                std::size_t len = pre.size() + 1;
                std::size_t dist = distance(i, j);
                if (len > dist && len - dist > best.gain) {
                    best.gain = len - dist;
                    best.i = i;
                    best.j = j;
                    best.inner = pre;
                }
            });
        }
    }
    return best;
}

std::vector<std::size_t> window_region(const Graph& g, const IndexPath& seq, std::size_t from, std::size_t len,
                                       std::vector<char>& blocked) {
    // seq positions from..from+len (cyclic) are the window; the rest of seq is blocked.
    std::vector<char> inwin(g.order(), 0);
    blocked.assign(g.order(), 0);
    for (std::size_t v : seq) blocked[v] = 1;
    std::vector<std::size_t> region;
    for (std::size_t k = 0; k <= len; ++k) {
        std::size_t v = seq[(from + k) % seq.size()];
        inwin[v] = 1;
        region.push_back(v);
    }
    for (const auto& comp : components_avoiding(g, blocked)) {
        bool touches = false;
        for (std::size_t v : comp)
            for (std::size_t y : g.adj(v)) touches |= inwin[y] != 0;
        if (touches && region.size() + comp.size() <= 64) region.insert(region.end(), comp.begin(), comp.end());
    }
    return region;
}

IndexPath best_window_path(const Graph& g, const IndexPath& seq, std::size_t from, std::size_t len,
                           const ImproveOptions& opt) {
    std::vector<char> blocked;
    auto region = window_region(g, seq, from, len, blocked);
    if (region.size() > 64) return {};
    auto ld = local_dense(g, region);
    Budget budget;
    budget.left = opt.budget;
    int a = ld.local(seq[from % seq.size()]);
    int b = ld.local(seq[(from + len) % seq.size()]);
    auto best = longest_st_path(ld.d, ld.d.all(), a, b, budget);
    IndexPath out;
    for (int i : best) out.push_back(ld.to_global[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

IndexPath improve_path(const Graph& g, IndexPath path, const ImproveOptions& options) {
    while (path.size() - 1 < options.target) {
        Detour d = find_detour(g, path, options, [](std::size_t i, std::size_t j) { return i > j ? i - j : j - i; });
        if (d.gain > 0) {
            std::size_t lo = std::min(d.i, d.j), hi = std::max(d.i, d.j);
            IndexPath inner = d.inner;
            if (d.i > d.j) std::reverse(inner.begin(), inner.end());
            IndexPath next(path.begin(), path.begin() + static_cast<long>(lo) + 1);
            next.insert(next.end(), inner.begin(), inner.end());
            next.insert(next.end(), path.begin() + static_cast<long>(hi), path.end());
            path = std::move(next);
            continue;
        }
        bool moved = false;
        std::size_t L = path.size() - 1;
        for (std::size_t i = 0; i < L && !moved; ++i) {
            std::size_t len = std::min(options.window, L - i);
            if (len < 2 && L > 1) continue;
            IndexPath w = best_window_path(g, path, i, len, options);
            if (w.size() > len + 1) {
                IndexPath next(path.begin(), path.begin() + static_cast<long>(i));
                next.insert(next.end(), w.begin(), w.end());
                next.insert(next.end(), path.begin() + static_cast<long>(i + len) + 1, path.end());
                path = std::move(next);
                moved = true;
            }
        }
        if (!moved) break;
    }
    return path;
}

IndexPath improve_cycle(const Graph& g, IndexPath cycle, const ImproveOptions& options) {
    while (cycle.size() < options.target && cycle.size() < g.order()) {
        std::size_t L = cycle.size();
        Detour d = find_detour(g, cycle, options, [L](std::size_t i, std::size_t j) {
            std::size_t f = (j + L - i) % L;
            return std::min(f, L - f);
        });
        if (d.gain > 0) {
            IndexPath r(cycle.begin() + static_cast<long>(d.i), cycle.end());
            r.insert(r.end(), cycle.begin(), cycle.begin() + static_cast<long>(d.i));
            std::size_t jj = (d.j + L - d.i) % L;
            IndexPath next;
            if (jj <= L - jj) {
                next.push_back(r[0]);
                next.insert(next.end(), d.inner.begin(), d.inner.end());
                next.insert(next.end(), r.begin() + static_cast<long>(jj), r.end());
            } else {
                next.assign(r.begin(), r.begin() + static_cast<long>(jj) + 1);
                next.insert(next.end(), d.inner.rbegin(), d.inner.rend());
            }
            cycle = std::move(next);
            continue;
        }
        bool moved = false;
        std::size_t len = std::min(options.window, L - 2);
        for (std::size_t i = 0; i < L && !moved && len >= 2; ++i) {
            IndexPath w = best_window_path(g, cycle, i, len, options);
            if (w.size() > len + 1) {
                IndexPath next(w.begin(), w.end());
                for (std::size_t k = len + 1; k < L; ++k) next.push_back(cycle[(i + k) % L]);
                cycle = std::move(next);
                moved = true;
            }
        }
        if (!moved) break;
    }
    return cycle;
}

IndexPath heuristic_long_cycle(const Graph& g, const ImproveOptions& options) {
    const std::size_t n = g.order();
    IndexPath best;
    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < n; ++v) roots.push_back(v);
    std::stable_sort(roots.begin(), roots.end(),
                     [&](std::size_t a, std::size_t b) { return g.adj(a).size() < g.adj(b).size(); });
    if (roots.size() > 4) roots = {roots[0], roots[1], roots[n / 2], roots[n - 1]};
    for (std::size_t root : roots) {
        std::vector<long> depth(n, -1);
        std::vector<char> onstack(n, 0);
        IndexPath stack;
        IndexPath local;
        std::function<void(std::size_t)> dfs = [&](std::size_t x) {
            onstack[x] = 1;
            stack.push_back(x);
            for (std::size_t y : g.adj(x))
                if (onstack[y] && depth[x] - depth[y] + 1 > static_cast<long>(local.size()) &&
                    depth[x] - depth[y] >= 2)
                    local.assign(stack.begin() + depth[y], stack.end());
            std::vector<std::pair<std::size_t, std::size_t>> next;
            for (std::size_t y : g.adj(x))
                if (depth[y] < 0) {
                    std::size_t free = 0;
                    for (std::size_t z : g.adj(y)) free += depth[z] < 0;
                    next.emplace_back(free, y);
                }
            std::sort(next.begin(), next.end());
            for (auto [f, y] : next) {
                (void)f;
                if (depth[y] >= 0) continue;
                depth[y] = depth[x] + 1;
                dfs(y);
            }
            stack.pop_back();
            onstack[x] = 0;
        };
        depth[root] = 0;
        dfs(root);
        if (local.size() < 3) continue;
        local = improve_cycle(g, local, options);
        if (local.size() > best.size()) best = local;
    }
    return best;
}

}  // namespace longcycle::detail

namespace longcycle::detail {

namespace {

struct FlowNet {
    std::vector<std::vector<int>> out;
    std::vector<int> to, cap;
    int add(int a, int b, int c) {
        to.push_back(b);
        cap.push_back(c);
        out[static_cast<std::size_t>(a)].push_back(static_cast<int>(to.size()) - 1);
        to.push_back(a);
        cap.push_back(0);
        out[static_cast<std::size_t>(b)].push_back(static_cast<int>(to.size()) - 1);
        return static_cast<int>(to.size()) - 2;
    }
    bool augment(int s, int t) {
        std::vector<int> via(out.size(), -1);
        std::vector<int> q{s};
        via[static_cast<std::size_t>(s)] = -2;
        for (std::size_t k = 0; k < q.size(); ++k) {
            int x = q[k];
            if (x == t) break;
            for (int e : out[static_cast<std::size_t>(x)]) {
                int y = to[static_cast<std::size_t>(e)];
                if (cap[static_cast<std::size_t>(e)] > 0 && via[static_cast<std::size_t>(y)] == -1) {
                    via[static_cast<std::size_t>(y)] = e;
                    q.push_back(y);
                }
            }
        }
        if (via[static_cast<std::size_t>(t)] == -1) return false;
        for (int x = t; x != s;) {
            int e = via[static_cast<std::size_t>(x)];
            cap[static_cast<std::size_t>(e)] -= 1;
            cap[static_cast<std::size_t>(e ^ 1)] += 1;
            x = to[static_cast<std::size_t>(e ^ 1)];
        }
        return true;
    }
};

}  // namespace

std::vector<IndexPath> disjoint_paths_to_sinks(const Graph& g, const std::vector<char>& allowed,
                                               const std::vector<std::size_t>& sources,
                                               const std::vector<char>& sink) {
    const int n = static_cast<int>(g.order());
    const int S = 2 * n, T = 2 * n + 1;
    FlowNet net;
    net.out.assign(static_cast<std::size_t>(2 * n + 2), {});
    std::vector<char> ok(allowed);
    for (std::size_t s : sources) ok[s] = 1;
    for (int v = 0; v < n; ++v) {
        if (!ok[static_cast<std::size_t>(v)]) continue;
        net.add(2 * v, 2 * v + 1, 1);
        if (sink[static_cast<std::size_t>(v)]) {
            net.add(2 * v + 1, T, 1);
            continue;
        }
        for (std::size_t y : g.adj(static_cast<std::size_t>(v)))
            if (ok[y]) net.add(2 * v + 1, 2 * static_cast<int>(y), 1);
    }
    for (std::size_t s : sources) net.add(S, 2 * static_cast<int>(s), 1);
    std::size_t flow = 0;
    while (flow < sources.size() && net.augment(S, T)) ++flow;
    if (flow < sources.size()) return {};
    std::vector<IndexPath> paths;
    for (std::size_t s : sources) {
        IndexPath p{s};
        int x = 2 * static_cast<int>(s) + 1;
        while (true) {
            int next = -1;
            for (int e : net.out[static_cast<std::size_t>(x)]) {
                if ((e & 1) || net.cap[static_cast<std::size_t>(e)] != 0) continue;
                next = net.to[static_cast<std::size_t>(e)];
                net.cap[static_cast<std::size_t>(e)] = -1;  // consume
                break;
            }
            if (next == T || next < 0) break;
            std::size_t v = static_cast<std::size_t>(next / 2);
            p.push_back(v);
            x = next + 1;
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

}  // namespace longcycle::detail
