#include "longcycle/st_path.hpp"

#include <algorithm>
#include <set>

#include "longcycle/connectivity.hpp"
#include "longcycle/exact.hpp"
#include "longcycle/paths.hpp"

namespace longcycle {

namespace {

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    for (Vertex x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
    return out;
}

std::vector<Vertex> interior(const Triple& tr) {
    std::vector<Vertex> out;
    for (Vertex x : tr.graph.vertices())
        if (x != tr.s && x != tr.t) out.push_back(x);
    return out;
}

// G_e(i) minus the interior of G_i: where the connectors between the two
// entry pairs live.
Graph slice(const NestedEGDecomposition& d, std::size_t i) {
    const Triple& tr = d.triples[i];
    return d.triples[*tr.parent].graph.without(interior(tr));
}

std::optional<std::size_t> position(const std::vector<Vertex>& p, Vertex v) {
    auto it = std::find(p.begin(), p.end(), v);
    if (it == p.end()) return std::nullopt;
    return static_cast<std::size_t>(it - p.begin());
}

bool enters(const std::vector<Vertex>& p, const Graph& g) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (g.has_vertex(p[i]) && g.has_vertex(p[i + 1])) return true;
    return false;
}

// Swaps the two connector stretches of R between the parent entry pair and
// the child entry pair for `pair`, keeping the child segment.
std::optional<PathWitness> splice_connectors(const Graph& g, const std::vector<Vertex>& R, const Triple& parent,
                                             const Triple& child, const PathPair& pair) {
    auto pj1 = position(R, parent.s), pj2 = position(R, parent.t);
    auto pi1 = position(R, child.s), pi2 = position(R, child.t);
    if (!pj1 || !pj2 || !pi1 || !pi2) return std::nullopt;
    const std::size_t lo_j = std::min(*pj1, *pj2), hi_j = std::max(*pj1, *pj2);
    const std::size_t lo_i = std::min(*pi1, *pi2), hi_i = std::max(*pi1, *pi2);
    if (lo_j > lo_i || hi_i > hi_j) return std::nullopt;
    const PathWitness& px = pair.first.front() == R[lo_j] ? pair.first : pair.second;
    const PathWitness& py = pair.first.front() == R[lo_j] ? pair.second : pair.first;
    std::vector<Vertex> mid(R.begin() + static_cast<std::ptrdiff_t>(lo_i), R.begin() + static_cast<std::ptrdiff_t>(hi_i) + 1);
    if (px.back() != mid.front()) std::reverse(mid.begin(), mid.end());
    if (px.front() != R[lo_j] || py.front() != R[hi_j] || px.back() != mid.front() || py.back() != mid.back())
        return std::nullopt;
    std::vector<Vertex> out(R.begin(), R.begin() + static_cast<std::ptrdiff_t>(lo_j));
    out.insert(out.end(), px.vertices.begin(), px.vertices.end());
    out.insert(out.end(), mid.begin() + 1, mid.end());
    for (std::size_t k = py.vertices.size() - 1; k-- > 0;) out.push_back(py.vertices[k]);
    out.insert(out.end(), R.begin() + static_cast<std::ptrdiff_t>(hi_j) + 1, R.end());
    PathWitness w{out};
    if (!validate_witness(g, w)) return std::nullopt;
    return w;
}

// Replaces the (a,b)-segment of R, a and b in either order, by `inner`
// (which runs from a to b).
PathWitness replace_segment(const std::vector<Vertex>& R, Vertex a, Vertex b, PathWitness inner) {
    std::size_t pa = *position(R, a), pb = *position(R, b);
    if (pa > pb) {
        std::swap(pa, pb);
        inner = inner.reversed();
    }
    std::vector<Vertex> out(R.begin(), R.begin() + static_cast<std::ptrdiff_t>(pa));
    out.insert(out.end(), inner.vertices.begin(), inner.vertices.end());
    out.insert(out.end(), R.begin() + static_cast<std::ptrdiff_t>(pb) + 1, R.end());
    return PathWitness{out};
}

}  // namespace

Vertex CompressedGraph::rep_of(Vertex original) const {
    auto it = rep.find(original);
    if (it == rep.end()) throw Error("vertex " + std::to_string(original) + " not present in the compressed graph");
    return it->second;
}

CompressedGraph nested_compress(const NestedEGDecomposition& d, ExactOptions options) {
    if (d.triples.empty()) throw Error("empty decomposition");
    const Graph& G = d.triples[0].graph;
    ContractionState state(G);
    CompressedGraph out;
    out.contracted.assign(d.triples.size(), 0);
    for (std::size_t i = 1; i < d.triples.size(); ++i) {
        const Triple& tr = d.triples[i];
        const Triple& par = d.triples[*tr.parent];
        auto pair = two_disjoint_paths_min_total(slice(d, i), {par.s, par.t}, {tr.s, tr.t}, tr.d + 1, options);
        if (!pair) {
            // Maximum matching between the two entry pairs, original edges only.
            auto left = minus({par.s, par.t}, {tr.s, tr.t});
            auto right = minus({tr.s, tr.t}, {par.s, par.t});
            std::vector<Edge> best;
            for (std::size_t mask = 0; mask < (std::size_t{1} << (left.size() * right.size())); ++mask) {
                std::vector<Edge> pick;
                std::set<Vertex> used;
                bool ok = true;
                for (std::size_t a = 0; a < left.size() && ok; ++a)
                    for (std::size_t b = 0; b < right.size() && ok; ++b) {
                        if (!(mask >> (a * right.size() + b) & 1)) continue;
                        if (!G.adjacent(left[a], right[b]) || used.count(left[a]) || used.count(right[b])) ok = false;
                        used.insert(left[a]);
                        used.insert(right[b]);
                        pick.push_back({left[a], right[b]});
                    }
                if (ok && pick.size() > best.size()) best = pick;
            }
            for (const Edge& e : best) {
                auto ru = state.rep(e.u), rv = state.rep(e.v);
                if (!ru || !rv || *ru == *rv || !state.adjacent(*ru, *rv)) continue;
                state.contract(*ru, *rv);
                out.contracted[i] = 1;
            }
        }
        if (!tr.decomposed) {
            for (Vertex x : interior(tr))
                if (state.present(x)) state.remove_vertex(x);
            out.marked.push_back({tr.s, tr.t, i});
        }
    }
    Graph cur = state.current();
    std::vector<Edge> edges = cur.edges();
    for (const auto& m : out.marked) {
        auto a = state.rep(m.a), b = state.rep(m.b);
        if (!a || !b) throw Error("marked edge endpoint lost during compression");
        if (*a != *b) edges.push_back({*a, *b});
    }
    out.H = Graph::from_edges_merged(cur.vertices(), edges);
    out.log = state.log();
    for (Vertex v : G.vertices())
        if (auto r = state.rep(v)) out.rep[v] = *r;
    return out;
}

PathWitness nested_decompress(const NestedEGDecomposition& d, const CompressedGraph& c, const PathWitness& Q,
                              ExactOptions options) {
    const Triple& root = d.triples.at(0);
    const Graph& G = root.graph;
    if (auto v = validate_st_path(c.H, Q, c.rep_of(root.s), c.rep_of(root.t)); !v)
        throw Error("path invalid in the compressed graph: " + v.violation);

    LiftOptions lift;
    lift.first = root.s;
    lift.last = root.t;
    for (const auto& m : c.marked) lift.virtual_edges.push_back({m.a, m.b, d.triples[m.triple].path});
    PathWitness R = reverse(G, c.log, Q, lift);

    for (std::size_t i = 1; i < d.triples.size(); ++i) {
        const Triple& tr = d.triples[i];
        if (tr.d == 0 || c.contracted[i] || !enters(R.vertices, tr.graph)) continue;
        const Triple& par = d.triples[*tr.parent];
        auto pair = two_disjoint_paths_min_total(slice(d, i), {par.s, par.t}, {tr.s, tr.t}, tr.d + 1, options);
        if (!pair) continue;
        auto next = splice_connectors(G, R.vertices, par, tr, *pair);
        if (next && next->length() > R.length()) R = *next;
    }

    std::size_t h = 0;
    for (std::size_t i = d.triples.size(); i-- > 0;)
        if (enters(R.vertices, d.triples[i].graph)) {
            h = i;
            break;
        }
    const Triple& th = d.triples[h];
    if (th.decomposed) {
        auto ps = position(R.vertices, th.s), pt = position(R.vertices, th.t);
        if (ps && pt) {
            const std::size_t lo = std::min(*ps, *pt), hi = std::max(*ps, *pt);
            std::vector<Vertex> seg(R.vertices.begin() + static_cast<std::ptrdiff_t>(lo),
                                    R.vertices.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
            if (seg.front() != th.s) std::reverse(seg.begin(), seg.end());
            const auto q = static_cast<long>(seg.size()) - 1;
            const long kp = q >= 5 ? (q - 5) / 8 : -((5 - q + 7) / 8);
            std::optional<PathWitness> Rh;
            if (static_cast<long>(th.path.length()) >= static_cast<long>(th.delta_st) + kp) {
                Rh = th.path;
            } else if (std::all_of(seg.begin(), seg.end(), [&](Vertex x) { return th.graph.has_vertex(x); })) {
                try {
                    Rh = boost_non_entering_path(*th.decomposition, PathWitness{seg}, static_cast<std::size_t>(kp), options);
                } catch (const Error&) {
                }
            }
            if (Rh && static_cast<long>(Rh->length()) > q) {
                PathWitness next = replace_segment(R.vertices, th.s, th.t, *Rh);
                if (validate_st_path(G, next, root.s, root.t)) R = next;
            }
        }
    }
    if (auto v = validate_st_path(G, R, root.s, root.t); !v) throw Error("decompressed path invalid: " + v.violation);
    return R;
}

NestedPathResult long_nested_st_path(const NestedEGDecomposition& d, const ApproximatorHandle& oracle,
                                     ExactOptions options) {
    const Triple& root = d.triples.at(0);
    const Graph& G = root.graph;
    NestedPathResult res;
    CompressedGraph c = nested_compress(d, options);
    const Vertex hs = c.rep_of(root.s), ht = c.rep_of(root.t);
    PathWitness Q;
    if (hs == ht) throw Error("s and t merged by compression");
    try {
        Q = st_path_from_cycle_oracle(c.H, hs, ht, oracle);
    } catch (const Error& e) {
        res.anomalies.push_back(std::string("oracle on compressed graph: ") + e.what());
        Q = long_st_path(c.H, hs, ht, options);
    }
    res.path = nested_decompress(d, c, Q, options);
    if (d.triples.size() >= 2)
        res.decompression = DecompressionCheck{Q.length(), res.path.length(), root.delta_st};

    for (std::size_t i = 0; i < d.triples.size(); ++i) {
        const Triple& tr = d.triples[i];
        PathWitness inner = eg_long_st_path(tr.graph, tr.s, tr.t, {}, options);
        try {
            PathWitness viaOracle = st_path_from_cycle_oracle(tr.graph, tr.s, tr.t, oracle);
            if (viaOracle.length() > inner.length()) inner = viaOracle;
        } catch (const Error& e) {
            res.anomalies.push_back("oracle on triple " + std::to_string(i) + ": " + e.what());
        }
        PathWitness cand;
        if (tr.s == root.s && tr.t == root.t) {
            cand = inner;
        } else if (tr.s == root.t && tr.t == root.s) {
            cand = inner.reversed();
        } else {
            Graph outside = G.without(interior(tr));
            auto pair = two_disjoint_paths_min_total(outside, {root.s, root.t}, {tr.s, tr.t}, 0, options);
            if (!pair) {
                res.anomalies.push_back("triple " + std::to_string(i) + ": no disjoint connectors");
                continue;
            }
            if (pair->first.back() != tr.s) inner = inner.reversed();
            std::vector<Vertex> out = pair->first.vertices;
            out.insert(out.end(), inner.vertices.begin() + 1, inner.vertices.end());
            for (std::size_t k = pair->second.vertices.size() - 1; k-- > 0;) out.push_back(pair->second.vertices[k]);
            cand = PathWitness{out};
        }
        if (!validate_st_path(G, cand, root.s, root.t)) {
            res.anomalies.push_back("triple " + std::to_string(i) + ": candidate invalid");
            continue;
        }
        if (cand.length() > res.path.length()) res.path = cand;
    }
    return res;
}

OracleReport approximate_long_st_path(const Graph& g, Vertex s, Vertex t, const ApproximatorHandle& oracle,
                                      ExactOptions options) {
    if (s == t) throw Error("s and t must differ");
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw Error("unknown vertex");
    if (!is_two_connected(g)) throw Error("graph not 2-connected");
    auto nd = build_nested_decomposition(g, s, t, options);
    auto run = long_nested_st_path(nd, oracle, options);
    OracleReport rep;
    rep.witness = run.path;
    rep.decompression = run.decompression;
    if (g.order() <= options.threshold) {
        const std::size_t opt = exact_longest_st_path(g, s, t, options).length();
        rep.exact_optimum = opt;
        rep.offset_k = static_cast<long>(opt) - static_cast<long>(min_degree_without(g, {s, t}));
    }
    return rep;
}

}  // namespace longcycle
