#include "dense.hpp"

#include <algorithm>

namespace longcycle::detail {

Dense make_dense(const Graph& g) {
    if (g.order() > 64) throw Error("instance too large for exact oracle");
    Dense d;
    d.n = static_cast<int>(g.order());
    d.adj.assign(g.order(), 0);
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j : g.adj(i)) d.adj[i] |= bit(static_cast<int>(j));
    return d;
}

Mask reach(const Dense& d, Mask allowed, int from) {
    Mask seen = bit(from);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= d.adj[lowest(f)];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

Mask block_path_union(const Dense& d, Mask allowed, int a, int b) {
    if (a == b) return bit(a);
    allowed |= bit(a) | bit(b);
    if (!(reach(d, allowed, a) & bit(b))) return 0;
    // DFS from a; every vertex other than a gets the id of the block holding
    // its tree edge. The blocks met on the tree path b -> a are exactly the
    // blocks on the block-cut path.
    int disc[64], low[64], parent[64], block_of[64];
    Mask pending[64];
    Mask block_mask[64];
    int blocks = 0;
    int timer = 0;
    for (int i = 0; i < d.n; ++i) disc[i] = 0;
    int vstack[64];
    int vtop = 0;
    int stack[64];
    int top = 0;
    stack[top++] = a;
    disc[a] = low[a] = ++timer;
    parent[a] = -1;
    pending[a] = d.adj[a] & allowed;
    while (top) {
        int x = stack[top - 1];
        if (pending[x]) {
            int y = lowest(pending[x]);
            pending[x] &= pending[x] - 1;
            if (!disc[y]) {
                parent[y] = x;
                disc[y] = low[y] = ++timer;
                pending[y] = d.adj[y] & allowed;
                vstack[vtop++] = y;
                stack[top++] = y;
            } else if (y != parent[x]) {
                low[x] = std::min(low[x], disc[y]);
            }
            continue;
        }
        --top;
        if (!top) break;
        int p = stack[top - 1];
        low[p] = std::min(low[p], low[x]);
        if (low[x] >= disc[p]) {
            Mask m = bit(p);
            while (true) {
                int y = vstack[--vtop];
                block_of[y] = blocks;
                m |= bit(y);
                if (y == x) break;
            }
            block_mask[blocks++] = m;
        }
    }
    Mask out = 0;
    for (int y = b; y != a; y = parent[y]) out |= block_mask[block_of[y]];
    return out;
}

namespace {

// Upper bound on how many vertices of W an (a,b)-path with all inner
// vertices in W can use. Removing X splits W into components; the inner
// vertices outside X form at most |X|+1 runs, one component each.
int inner_bound(const Dense& d, Mask W, Mask ends) {
    for (bool changed = true; changed;) {
        changed = false;
        for (Mask r = W; r; r &= r - 1) {
            const int v = lowest(r);
            if (popcount(d.adj[v] & (W | ends)) < 2) {
                W &= ~bit(v);
                changed = true;
            }
        }
    }
    const int n = popcount(W);
    if (n <= 2) return n;
    int best = n;
    auto runs = [&](Mask X) {
        const int x = popcount(X);
        int sizes[64];
        int m = 0;
        for (Mask rest = W & ~X; rest;) {
            Mask c = reach(d, W & ~X, lowest(rest));
            sizes[m++] = popcount(c);
            rest &= ~c;
        }
        std::sort(sizes, sizes + m, [](int a, int b) { return a > b; });
        int total = x;
        for (int i = 0; i < m && i <= x; ++i) total += sizes[i];
        best = std::min(best, total);
    };
    // Greedy independent set, smallest degree first.
    Mask I = 0, open = W;
    while (open) {
        int pick = lowest(open), low = 65;
        for (Mask r = open; r; r &= r - 1) {
            const int v = lowest(r), deg = popcount(d.adj[v] & open);
            if (deg < low) {
                low = deg;
                pick = v;
            }
        }
        I |= bit(pick);
        open &= ~(bit(pick) | d.adj[pick]);
    }
    runs(W & ~I);
    int degree_sum = 0;
    for (Mask r = W; r; r &= r - 1) degree_sum += popcount(d.adj[lowest(r)] & W);
    Mask high = 0;
    for (Mask r = W; r; r &= r - 1)
        if (popcount(d.adj[lowest(r)] & W) * n > degree_sum) high |= bit(lowest(r));
    if (high && high != W) runs(high);
    return best;
}

struct PathSearch {
    const Dense& d;
    Budget& budget;
    int t;
    Mask required;
    std::vector<int> path;
    std::vector<int> best;
    int target_len;  // stop once reached

    bool done() const { return static_cast<int>(best.size()) - 1 >= target_len; }

    void run(int end, Mask visited) {
        if (done() || !budget.spend()) return;
        if (end == t) {
            if ((visited & required) == required && path.size() > best.size()) best = path;
            return;
        }
        Mask open = ~visited;
        Mask u = block_path_union(d, open | bit(end), end, t);
        if (!u) return;
        if ((required & ~visited & ~u) != 0) return;
        int bound = static_cast<int>(path.size()) - 1 + popcount(u & ~bit(end));
        if (bound <= static_cast<int>(best.size()) - 1) return;
        bound = static_cast<int>(path.size()) + inner_bound(d, u & ~bit(end) & ~bit(t), bit(end) | bit(t));
        if (bound <= static_cast<int>(best.size()) - 1) return;
        for (Mask nb = d.adj[end] & open & u; nb; nb &= nb - 1) {
            int y = lowest(nb);
            path.push_back(y);
            run(y, visited | bit(y));
            path.pop_back();
            if (done() || budget.exhausted) return;
        }
    }
};

struct CycleSearch {
    const Dense& d;
    Budget& budget;
    int root = 0;
    std::vector<int> path;
    std::vector<int> best;
    int target_len = 0;

    bool done() const { return static_cast<int>(best.size()) >= target_len; }

    void run(int end, Mask visited, Mask allowed) {
        if (done() || !budget.spend()) return;
        int len = static_cast<int>(path.size());
        if (len >= 3 && (d.adj[end] & bit(root)) && len > static_cast<int>(best.size())) best = path;
        Mask open = allowed & ~visited;
        if (end != root) {
            Mask u = block_path_union(d, open | bit(end) | bit(root), end, root);
            if (!u) return;
            int bound = len + popcount(u) - 2;
            if (bound <= static_cast<int>(best.size())) return;
            bound = len + inner_bound(d, u & open, bit(end) | bit(root));
            if (bound <= static_cast<int>(best.size())) return;
            open &= u;
        }
        for (Mask nb = d.adj[end] & open; nb; nb &= nb - 1) {
            int y = lowest(nb);
            path.push_back(y);
            run(y, visited | bit(y), allowed);
            path.pop_back();
            if (done() || budget.exhausted) return;
        }
    }
};

}  // namespace

std::vector<int> longest_st_path(const Dense& d, Mask allowed, int s, int t, Budget& budget,
                                 Mask required) {
    allowed |= bit(s) | bit(t);
    Mask u = block_path_union(d, allowed, s, t);
    if (!u || (required & ~u)) return {};
    PathSearch ps{d, budget, t, required, {s}, {}, popcount(u) - 1};
    ps.run(s, bit(s) | ~allowed);
    return ps.best;
}

std::vector<int> longest_cycle(const Dense& d, Mask allowed, Budget& budget) {
    CycleSearch cs{d, budget, 0, {}, {}, 0};
    for (Mask rs = allowed; rs; rs &= rs - 1) {
        int r = lowest(rs);
        Mask sub = allowed & ~(bit(r) - 1);
        // The largest cycle through r lives in r's block; bound by r's component.
        Mask comp = reach(d, sub, r);
        if (popcount(comp) <= static_cast<int>(cs.best.size())) continue;
        cs.root = r;
        cs.path = {r};
        cs.target_len = popcount(comp);
        cs.run(r, bit(r), comp);
        if (budget.exhausted) break;
    }
    return cs.best;
}

}  // namespace longcycle::detail
