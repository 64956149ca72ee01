#include "longcycle/eg_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dense.hpp"
#include "vertex_sets.hpp"
#include "longcycle/connectivity.hpp"
#include "longcycle/paths.hpp"
#include "search.hpp"

namespace longcycle {

namespace {

using detail::IndexPath;
using detail::leaf_inner_vertices;
using detail::matching_is_one;
using detail::neighbours_in;
using detail::sorted;
using detail::sorted_contains;
using detail::to_labels;

// Longest (s,t)-path we can find, stopping once `target` edges are reached.
PathWitness search_st_path(const Graph& g, Vertex s, Vertex t, std::size_t target, ExactOptions options) {
    if (g.order() <= options.threshold && g.order() <= kMaxExactOrder) return exact_longest_st_path(g, s, t, options);
    std::vector<char> allowed(g.order(), 1);
    auto p = detail::bfs_path(g, allowed, g.index_of(s), g.index_of(t));
    if (p.empty()) throw Error("disconnected pair");
    detail::ImproveOptions opt;
    opt.target = target;
    return to_labels(g, detail::improve_path(g, p, opt));
}

// Vertex-disjoint paths joining each terminal pair inside `allowed`
// (terminals are always usable). Budgeted backtracking; the last pair is
// routed by BFS.
class Linkage {
public:
    Linkage(const Graph& g, std::vector<char> allowed, std::vector<std::pair<std::size_t, std::size_t>> pairs,
            std::uint64_t budget)
        : g_(g), usable_(std::move(allowed)), pairs_(std::move(pairs)) {
        budget_.left = budget;
    }

    std::optional<std::vector<IndexPath>> solve() {
        std::vector<std::size_t> terms;
        for (auto [a, b] : pairs_) {
            terms.push_back(a);
            if (b != a) terms.push_back(b);
        }
        std::vector<std::size_t> uniq = terms;
        std::sort(uniq.begin(), uniq.end());
        if (std::unique(uniq.begin(), uniq.end()) != uniq.end()) return std::nullopt;
        for (std::size_t x : terms) usable_[x] = 0;
        if (!route(0)) return std::nullopt;
        return paths_;
    }

    bool exhausted() const { return budget_.exhausted; }

private:
    bool feasible(std::size_t from) {
        for (std::size_t i = from; i < pairs_.size(); ++i) {
            auto [a, b] = pairs_[i];
            if (a == b) continue;
            usable_[a] = usable_[b] = 1;
            bool ok = !detail::bfs_path(g_, usable_, a, b).empty();
            usable_[a] = usable_[b] = 0;
            if (!ok) return false;
        }
        return true;
    }

    bool route(std::size_t i) {
        if (i == pairs_.size()) return true;
        auto [a, b] = pairs_[i];
        if (a == b) {
            paths_.push_back({a});
            if (route(i + 1)) return true;
            paths_.pop_back();
            return false;
        }
        if (i + 1 == pairs_.size()) {
            usable_[a] = usable_[b] = 1;
            auto p = detail::bfs_path(g_, usable_, a, b);
            usable_[a] = usable_[b] = 0;
            if (p.empty()) return false;
            paths_.push_back(p);
            return true;
        }
        IndexPath cur{a};
        return dfs(i, cur, b);
    }

    bool dfs(std::size_t i, IndexPath& cur, std::size_t b) {
        if (!budget_.spend()) return false;
        std::size_t x = cur.back();
        for (std::size_t y : g_.adj(x)) {
            if (y == b) {
                // Interior vertices are already blocked by the enclosing frames.
                cur.push_back(y);
                paths_.push_back(cur);
                if (feasible(i + 1) && route(i + 1)) return true;
                paths_.pop_back();
                cur.pop_back();
                continue;
            }
            if (!usable_[y]) continue;
            usable_[y] = 0;
            cur.push_back(y);
            bool done = dfs(i, cur, b);
            cur.pop_back();
            usable_[y] = 1;
            if (done) return true;
            if (budget_.exhausted) return false;
        }
        return false;
    }

    const Graph& g_;
    std::vector<char> usable_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    detail::Budget budget_;
    std::vector<IndexPath> paths_;
};

void append(std::vector<Vertex>& out, const std::vector<Vertex>& part) {
    auto it = part.begin();
    if (!out.empty() && !part.empty() && out.back() == part.front()) ++it;
    out.insert(out.end(), it, part.end());
}

// An (s,t)-path entering two Erdős–Gallai components, if three disjoint
// linking paths exist for some ordered pair and orientation.
std::optional<PathWitness> path_through_two(const EGDecomposition& d, ExactOptions options) {
    const Graph& g = d.host;
    std::vector<ComponentInstance> inst;
    for (std::size_t i = 0; i < d.eg_components.size(); ++i) inst.push_back(eg_component_to_instance(d, i));
    const std::uint64_t budget = g.order() <= options.threshold ? std::numeric_limits<std::uint64_t>::max() : 200000;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t j = 0; j < inst.size(); ++j) {
            if (i == j) continue;
            std::vector<char> allowed(g.order(), 1);
            for (const auto* k : {&inst[i], &inst[j]})
                for (Vertex x : k->K.vertices()) allowed[g.index_of(x)] = 0;
            for (int o1 = 0; o1 < 2; ++o1) {
                for (int o2 = 0; o2 < 2; ++o2) {
                    Vertex a1 = o1 ? inst[i].t : inst[i].s, b1 = o1 ? inst[i].s : inst[i].t;
                    Vertex a2 = o2 ? inst[j].t : inst[j].s, b2 = o2 ? inst[j].s : inst[j].t;
                    std::vector<std::pair<std::size_t, std::size_t>> pairs{{g.index_of(d.s), g.index_of(a1)},
                                                                           {g.index_of(b1), g.index_of(a2)},
                                                                           {g.index_of(b2), g.index_of(d.t)}};
                    Linkage link(g, allowed, pairs, budget);
                    auto paths = link.solve();
                    if (!paths) continue;
                    std::vector<Vertex> out;
                    append(out, to_labels(g, (*paths)[0]).vertices);
                    append(out, eg_long_st_path(inst[i].K, a1, b1, {a1, b1}, options).vertices);
                    append(out, to_labels(g, (*paths)[1]).vertices);
                    append(out, eg_long_st_path(inst[j].K, a2, b2, {a2, b2}, options).vertices);
                    append(out, to_labels(g, (*paths)[2]).vertices);
                    PathWitness w{out};
                    if (validate_st_path(g, w, d.s, d.t)) return w;
                }
            }
        }
    }
    return std::nullopt;
}

// Vertex of the P-side or M-side that covers every M–P edge.
Vertex attachment(const Graph& g, const std::vector<Vertex>& M, const std::vector<Vertex>& P) {
    std::vector<std::pair<Vertex, Vertex>> pairs;  // (in M, on P)
    for (Vertex x : M)
        for (Vertex y : g.neighbors(x))
            if (sorted_contains(P, y)) pairs.push_back({x, y});
    if (pairs.empty()) throw Error("component has no neighbour on the path");
    Vertex u = pairs[0].second;
    bool p_side = std::all_of(pairs.begin(), pairs.end(), [&](auto& e) { return e.second == u; });
    if (p_side && pairs.size() >= 2) return u;
    Vertex h = pairs[0].first;
    bool m_side = std::all_of(pairs.begin(), pairs.end(), [&](auto& e) { return e.first == h; });
    if (m_side) return h;
    if (p_side) return u;
    throw Error("matching between component and path larger than one");
}

}  // namespace

std::string to_string(EgType type) {
    switch (type) {
        case EgType::R1: return "R1";
        case EgType::R2: return "R2";
        case EgType::R3: return "R3";
    }
    return "?";
}

std::size_t EGDecomposition::delta_st() const { return min_degree_without(host, {s, t}); }

bool path_enters(const PathWitness& path, const std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (sorted_contains(vertices, path.vertices[i]) && sorted_contains(vertices, path.vertices[i + 1])) return true;
    return false;
}

EgValidation validate_eg_decomposition(const Graph& host, Vertex s, Vertex t, const PathWitness& P,
                                       const PathWitness& P1, const PathWitness& P2) {
    auto fail = [](std::string clause, std::vector<Vertex> comp = {}) -> EgValidation {
        return EgViolation{std::move(clause), std::move(comp)};
    };
    if (!validate_st_path(host, P, s, t)) return fail("P is an (s,t)-path");
    const auto& pv = P.vertices;
    if (P1.vertices.empty() || P1.vertices.size() > pv.size() ||
        !std::equal(P1.vertices.begin(), P1.vertices.end(), pv.begin()))
        return fail("P1 is a prefix of P");
    if (P2.vertices.empty() || P2.vertices.size() > pv.size() ||
        !std::equal(P2.vertices.rbegin(), P2.vertices.rend(), pv.rbegin()))
        return fail("P2 is a suffix of P");
    if (P1.vertices.size() + P2.vertices.size() > pv.size()) return fail("P1 and P2 are disjoint");
    if (!is_two_connected(host)) return fail("G is 2-connected");

    EGDecomposition d;
    d.host = host;
    d.s = s;
    d.t = t;
    d.P = P;
    d.P1 = P1;
    d.P2 = P2;
    if (d.inner_length() < d.delta_st()) return fail("|E(P′)| ≥ δ(G−{s,t})");

    const std::vector<Vertex> in1 = sorted(P1.vertices), in2 = sorted(P2.vertices);
    std::vector<Vertex> removed = in1;
    removed.insert(removed.end(), in2.begin(), in2.end());
    auto comps = connected_components(host, removed);
    if (comps.size() < 2) return fail("at least two connected components", comps.empty() ? std::vector<Vertex>{} : comps[0]);

    for (auto& h : comps) {
        h = sorted(h);
        if (h.size() < 3) return fail("|V(H)| ≥ 3", h);
    }
    for (const auto& h : comps) {
        Graph hg = host.induced(h);
        EgComponent c{h, EgType::R1};
        if (is_two_connected(hg)) {
            if (!matching_is_one(host, h, in1)) return fail("(R1) matching of size one between V(H) and V(P1)", h);
            if (!matching_is_one(host, h, in2)) return fail("(R1) matching of size one between V(H) and V(P2)", h);
            d.eg_owner.push_back(d.components.size());
            d.eg_components.push_back(h);
        } else {
            BlockTree bt = block_cut_tree(hg);
            auto inner = leaf_inner_vertices(bt);
            const bool one1 = neighbours_in(host, h, in1).size() == 1;
            const bool one2 = neighbours_in(host, h, in2).size() == 1;
            const bool leaf2 = !neighbours_in(host, inner, in2).empty();
            const bool leaf1 = !neighbours_in(host, inner, in1).empty();
            if (one1 && !leaf2) {
                c.type = EgType::R2;
            } else if (one2 && !leaf1) {
                c.type = EgType::R3;
            } else if (one1) {
                return fail("(R2) no inner vertex of a leaf-block has a neighbor in P2", h);
            } else if (one2) {
                return fail("(R3) no inner vertex of a leaf-block has a neighbor in P1", h);
            } else {
                return fail("(R2/R3) exactly one vertex of P1 or P2 has neighbors in H", h);
            }
            for (std::size_t b : bt.leaf_blocks) {
                d.eg_owner.push_back(d.components.size());
                d.eg_components.push_back(sorted(bt.blocks[b]));
            }
        }
        d.components.push_back(std::move(c));
    }
    return d;
}

ComponentInstance eg_component_to_instance(const EGDecomposition& d, std::size_t eg_index) {
    if (eg_index >= d.eg_components.size()) throw Error("no such Erdős–Gallai component");
    const Graph& g = d.host;
    const auto& M = d.eg_components[eg_index];
    const auto& comp = d.components[d.eg_owner[eg_index]];
    const std::vector<Vertex> in1 = sorted(d.P1.vertices), in2 = sorted(d.P2.vertices);

    ComponentInstance ci;
    ci.origin = eg_index;
    if (comp.type == EgType::R1) {
        ci.s = attachment(g, M, in1);
        ci.t = attachment(g, M, in2);
    } else {
        const bool left = comp.type == EgType::R2;
        auto outer = neighbours_in(g, comp.vertices, left ? in1 : in2);
        if (outer.size() != 1) throw Error("separable component without a unique path neighbour");
        BlockTree bt = block_cut_tree(g.induced(comp.vertices));
        std::optional<Vertex> cut;
        for (std::size_t b : bt.leaf_blocks)
            if (sorted(bt.blocks[b]) == M) cut = bt.leaf_cut_vertex(b);
        if (!cut) throw Error("leaf-block without a cut vertex");
        Vertex entry = outer[0];
        auto into = neighbours_in(g, {entry}, M);
        if (into.size() == 1) entry = into[0];
        ci.s = left ? entry : *cut;
        ci.t = left ? *cut : entry;
    }
    if (ci.s == ci.t) throw Error("component instance endpoints coincide");
    std::vector<Vertex> keep = M;
    keep.push_back(ci.s);
    keep.push_back(ci.t);
    ci.K = g.induced(sorted(keep));
    if (!is_two_connected(ci.K)) throw Error("component instance is not 2-connected");
    const std::size_t host_delta = d.delta_st();
    if (min_degree_without(ci.K, {ci.s, ci.t}) + 2 < host_delta)
        throw Error("component instance violates δ(K−{s′,t′}) ≥ δ(G−{s,t})−2");
    return ci;
}

PathOrDecomposition long_path_or_eg_decomposition(const Graph& g, Vertex s, Vertex t, ExactOptions options) {
    if (s == t) throw Error("s and t must differ");
    if (!is_two_connected(g)) throw Error("graph not 2-connected");
    const std::size_t delta = min_degree_without(g, {s, t});
    if (delta < kDecompositionDegree) throw Error("δ(G−{s,t}) below 16");
    const std::size_t target = std::min((5 * delta - 12 + 3) / 4, g.order() - 1);

    PathWitness P = search_st_path(g, s, t, target, options);
    if (P.length() >= target) return P;

    const std::size_t L = P.length();
    std::vector<std::pair<std::size_t, std::size_t>> splits;  // (|E(P1)|, |E(P2)|)
    for (std::size_t a = 0; a <= L; ++a)
        for (std::size_t b = 0; a + b + delta <= L; ++b) splits.push_back({a, b});
    std::stable_sort(splits.begin(), splits.end(),
                     [](auto x, auto y) { return x.first + x.second < y.first + y.second; });
    for (auto [a, b] : splits) {
        PathWitness P1{{P.vertices.begin(), P.vertices.begin() + static_cast<std::ptrdiff_t>(a) + 1}};
        PathWitness P2{{P.vertices.end() - static_cast<std::ptrdiff_t>(b) - 1, P.vertices.end()}};
        auto v = validate_eg_decomposition(g, s, t, P, P1, P2);
        if (!std::holds_alternative<EGDecomposition>(v)) continue;
        auto& d = std::get<EGDecomposition>(v);
        if (auto through = path_through_two(d, options)) {
            if (through->length() >= target) return *through;
            throw Error("path through two components shorter than expected");
        }
        return std::move(d);
    }
    throw Error("inconclusive: no decomposition induced by the current path");
}

SeparablePath long_path_in_separable(const Graph& H, const std::vector<Vertex>& S, Vertex v, ExactOptions options) {
    if (!H.has_vertex(v)) throw Error("unknown vertex");
    BlockTree bt = block_cut_tree(H);
    if (bt.cut_vertices.empty()) throw Error("graph has no cut vertex");
    const auto inner = leaf_inner_vertices(bt);
    if (sorted_contains(inner, v)) throw Error("v is an inner vertex of a leaf-block");
    std::vector<Vertex> cuts;
    for (std::size_t b : bt.leaf_blocks) cuts.push_back(*bt.leaf_cut_vertex(b));
    cuts = sorted(cuts);

    const Graph rest = H.without(inner);
    const double bound = (static_cast<double>(min_degree(H)) - static_cast<double>(sorted(S).size())) / 2.0;
    if (bound <= 0) {
        if (sorted_contains(cuts, v)) return {v, PathWitness{{v}}};
        std::optional<SeparablePath> best;
        std::vector<char> allowed(rest.order(), 1);
        for (Vertex c : cuts) {
            auto p = detail::bfs_path(rest, allowed, rest.index_of(c), rest.index_of(v));
            if (!p.empty() && (!best || p.size() - 1 < best->path.length())) best = SeparablePath{c, to_labels(rest, p)};
        }
        return *best;
    }
    if (sorted_contains(cuts, v)) throw Error("v is the cut vertex of a leaf-block");
    const auto target = static_cast<std::size_t>(std::ceil(bound));
    std::optional<SeparablePath> best;
    for (Vertex c : cuts) {
        PathWitness p = search_st_path(rest, c, v, target, options);
        if (!best || p.length() > best->path.length()) best = SeparablePath{c, p};
        if (best->path.length() >= target) break;
    }
    if (static_cast<double>(best->path.length()) < bound) throw Error("separable path bound not reached");
    return *best;
}

namespace {

// Longest (c,z)-path inside the leaf-block L.
PathWitness path_in_leaf(const Graph& g, const std::vector<Vertex>& L, Vertex c, Vertex z, ExactOptions options) {
    if (L.size() == 2) return PathWitness{{c, z}};
    return eg_long_st_path(g.induced(L), c, z, {c}, options);
}

std::vector<Vertex> bfs_labels(const Graph& g, const std::vector<Vertex>& allowed_set, Vertex a, Vertex b) {
    std::vector<char> allowed(g.order(), 0);
    for (Vertex x : allowed_set) allowed[g.index_of(x)] = 1;
    return to_labels(g, detail::bfs_path(g, allowed, g.index_of(a), g.index_of(b))).vertices;
}

// The boosting construction with the separable component attached to P1 by
// a single vertex. P1 runs from s, P2 ends at t, Q runs from s to t.
PathWitness boost_left(const Graph& g, const std::vector<Vertex>& P1, const std::vector<Vertex>& P2,
                       const std::vector<Vertex>& Q, const std::vector<Vertex>& H, Vertex u, Vertex v, std::size_t k,
                       ExactOptions options) {
    const std::vector<Vertex> in1 = sorted(P1), in2 = sorted(P2);
    const Vertex p = neighbours_in(g, H, in1).at(0);
    const Graph hg = g.induced(H);
    const BlockTree bt = block_cut_tree(hg);
    std::vector<Vertex> blocked(Q.begin(), Q.begin() + static_cast<std::ptrdiff_t>(k));
    blocked.insert(blocked.end(), Q.end() - static_cast<std::ptrdiff_t>(k), Q.end());
    blocked = sorted(blocked);

    std::vector<Vertex> open;
    for (Vertex x : H)
        if (!sorted_contains(blocked, x)) open.push_back(x);

    auto leaf_with_cut = [&](Vertex c) -> std::vector<Vertex> {
        for (std::size_t b : bt.leaf_blocks)
            if (bt.leaf_cut_vertex(b) == c) {
                auto L = sorted(bt.blocks[b]);
                for (Vertex z : L)
                    if (z != c && g.adjacent(z, p)) return L;
            }
        throw Error("leaf-block without a neighbour of P1");
    };
    auto p1_prefix = [&](Vertex end) {
        auto it = std::find(P1.begin(), P1.end(), end);
        return std::vector<Vertex>(P1.begin(), it + 1);
    };

    std::vector<Vertex> cuts;
    for (std::size_t b : bt.leaf_blocks) cuts.push_back(*bt.leaf_cut_vertex(b));
    cuts = sorted(cuts);

    // Case 2: some leaf cut vertex is reachable from u or v avoiding S and T.
    for (Vertex from : {v, u}) {
        for (Vertex c : cuts) {
            if (sorted_contains(blocked, c)) continue;
            auto head = bfs_labels(hg, open, from, c);
            if (head.empty()) continue;
            auto L = leaf_with_cut(c);
            Vertex w = 0;
            for (Vertex z : L)
                if (z != c && g.adjacent(z, p)) {
                    w = z;
                    break;
                }
            std::vector<Vertex> qp = head;
            const std::size_t ic = qp.size() - 1;
            append(qp, path_in_leaf(g, L, c, w, options).vertices);
            const std::size_t iw = qp.size() - 1;
            auto back = p1_prefix(p);
            std::reverse(back.begin(), back.end());
            qp.insert(qp.end(), back.begin(), back.end());

            std::vector<std::ptrdiff_t> pos(g.order(), -1);
            for (std::size_t i = 0; i < Q.size(); ++i) pos[g.index_of(Q[i])] = static_cast<std::ptrdiff_t>(i);
            std::size_t ix = ic + 1;
            for (std::size_t i = 0; i <= ic; ++i)
                if (pos[g.index_of(qp[i])] >= 0) ix = i;
            std::size_t iy = iw + 1;
            while (pos[g.index_of(qp[iy])] < 0) ++iy;
            const auto px = static_cast<std::size_t>(pos[g.index_of(qp[ix])]);
            const auto py = static_cast<std::size_t>(pos[g.index_of(qp[iy])]);
            std::vector<Vertex> out;
            if (py < px) {
                out.assign(Q.begin(), Q.begin() + static_cast<std::ptrdiff_t>(py) + 1);
                for (std::size_t i = iy; i-- > ix;) out.push_back(qp[i]);
                out.insert(out.end(), Q.begin() + static_cast<std::ptrdiff_t>(px) + 1, Q.end());
            } else {
                out.assign(Q.begin(), Q.begin() + static_cast<std::ptrdiff_t>(px) + 1);
                out.insert(out.end(), qp.begin() + static_cast<std::ptrdiff_t>(ix) + 1,
                           qp.begin() + static_cast<std::ptrdiff_t>(iy));
                out.insert(out.end(), Q.begin() + static_cast<std::ptrdiff_t>(py), Q.end());
            }
            return PathWitness{out};
        }
    }

    // Case 1: S and T cut u and v off every leaf cut vertex.
    std::vector<Vertex> hs;
    for (Vertex x : blocked)
        if (sorted_contains(H, x)) hs.push_back(x);
    std::optional<PathWitness> best;
    for (Vertex w : H) {
        auto exits = neighbours_in(g, {w}, in2);
        if (exits.empty() || sorted_contains(cuts, w)) continue;
        SeparablePath sp = long_path_in_separable(hg, hs, w, options);
        auto L = leaf_with_cut(sp.cut_vertex);
        Vertex z = 0;
        for (Vertex x : L)
            if (x != sp.cut_vertex && g.adjacent(x, p)) {
                z = x;
                break;
            }
        std::vector<Vertex> out = p1_prefix(p);
        auto inside = path_in_leaf(g, L, sp.cut_vertex, z, options).reversed();
        out.insert(out.end(), inside.vertices.begin(), inside.vertices.end());
        append(out, sp.path.vertices);
        // Exit at the P2 neighbour of w farthest from t.
        auto q = std::find_if(P2.begin(), P2.end(), [&](Vertex y) { return sorted_contains(exits, y); });
        out.insert(out.end(), q, P2.end());
        PathWitness cand{out};
        if (!best || cand.length() > best->length()) best = cand;
    }
    if (!best) throw Error("separable component without a neighbour of P2");
    return *best;
}

}  // namespace

PathWitness boost_non_entering_path(const EGDecomposition& d, const PathWitness& Q, std::size_t k, ExactOptions options) {
    const Graph& g = d.host;
    if (!validate_st_path(g, Q, d.s, d.t)) throw Error("Q is not an (s,t)-path");
    const std::size_t delta = d.delta_st();
    if (d.P.length() > delta + k) throw Error("P longer than δ(G−{s,t}) + k");
    if (Q.length() < 4 * k + 5) throw Error("Q shorter than 4k + 5");
    for (const auto& M : d.eg_components)
        if (path_enters(Q, M)) throw Error("Q enters an Erdős–Gallai component");
    const double bound = std::min(static_cast<double>(delta + k) - 1.0,
                                  1.5 * static_cast<double>(delta) - 2.5 * static_cast<double>(k) - 1.0);

    std::vector<Vertex> on_p = sorted(d.P1.vertices);
    for (Vertex x : d.P2.vertices) on_p.push_back(x);
    on_p = sorted(on_p);
    const auto& q = Q.vertices;
    std::optional<std::size_t> edge;
    for (std::size_t i = k; i + 1 + k <= Q.length(); ++i)
        if (!sorted_contains(on_p, q[i]) && !sorted_contains(on_p, q[i + 1])) {
            edge = i;
            break;
        }
    if (!edge) throw Error("no edge of Q avoids P1 and P2");
    const Vertex u = q[*edge], v = q[*edge + 1];
    const EgComponent* comp = nullptr;
    for (const auto& c : d.components)
        if (sorted_contains(c.vertices, u)) comp = &c;
    if (!comp || comp->type == EgType::R1) throw Error("Q enters an Erdős–Gallai component");

    PathWitness built;
    if (comp->type == EgType::R2) {
        built = boost_left(g, d.P1.vertices, d.P2.vertices, q, comp->vertices, u, v, k, options);
    } else {
        auto p1 = d.P2.reversed().vertices, p2 = d.P1.reversed().vertices;
        auto rq = Q.reversed().vertices;
        built = boost_left(g, p1, p2, rq, comp->vertices, v, u, k, options).reversed();
    }
    if (!validate_st_path(g, built, d.s, d.t))
        throw Error("boost construction produced an invalid path: " + validate_st_path(g, built, d.s, d.t).violation);
    const PathWitness& out = built.length() >= Q.length() ? built : Q;
    if (static_cast<double>(out.length()) < bound) throw Error("boost bound not reached");
    return out;
}

NestedEGDecomposition build_nested_decomposition(const Graph& g, Vertex s, Vertex t, ExactOptions options) {
    if (s == t) throw Error("s and t must differ");
    if (!is_two_connected(g)) throw Error("graph not 2-connected");
    NestedEGDecomposition nd;
    Triple root;
    root.graph = g;
    root.s = s;
    root.t = t;
    nd.triples.push_back(std::move(root));
    for (std::size_t i = 0; i < nd.triples.size(); ++i) {
        Triple& tr = nd.triples[i];
        tr.delta_st = min_degree_without(tr.graph, {tr.s, tr.t});
        auto fallback = [&]() {
            if (tr.graph.order() <= options.threshold) return exact_longest_st_path(tr.graph, tr.s, tr.t, options);
            return eg_long_st_path(tr.graph, tr.s, tr.t, {}, options);
        };
        if (tr.delta_st < kDecompositionDegree) {
            tr.path = fallback();
            continue;
        }
        PathOrDecomposition r;
        try {
            r = long_path_or_eg_decomposition(tr.graph, tr.s, tr.t, options);
        } catch (const Error&) {
            tr.inconclusive = true;
            tr.path = fallback();
            continue;
        }
        if (auto* p = std::get_if<PathWitness>(&r)) {
            tr.path = *p;
            continue;
        }
        auto dec = std::get<EGDecomposition>(std::move(r));
        tr.decomposed = true;
        tr.path = dec.P;
        std::vector<Triple> kids;
        for (std::size_t m = 0; m < dec.eg_components.size(); ++m) {
            ComponentInstance ci = eg_component_to_instance(dec, m);
            Triple child;
            child.graph = ci.K;
            child.s = ci.s;
            child.t = ci.t;
            child.parent = i;
            std::size_t d = 0;
            for (Vertex x : {tr.s, tr.t})
                if (x != ci.s && x != ci.t) ++d;
            child.d = d;
            kids.push_back(std::move(child));
        }
        tr.decomposition = std::move(dec);
        for (auto& kid : kids) {
            nd.triples[i].children.push_back(nd.triples.size());
            nd.triples.push_back(std::move(kid));
        }
    }
    return nd;
}

}  // namespace longcycle
