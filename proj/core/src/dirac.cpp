#include "longcycle/dirac.hpp"

#include <algorithm>
#include <functional>

#include "longcycle/connectivity.hpp"
#include "longcycle/eg_decomposition.hpp"
#include "longcycle/st_path.hpp"
#include "search.hpp"
#include "vertex_sets.hpp"

namespace longcycle {

namespace {

using detail::IndexPath;
using detail::leaf_inner_vertices;
using detail::matching_is_one;
using detail::neighbours_in;
using detail::sorted;

CycleWitness to_cycle(const Graph& g, const IndexPath& p) {
    CycleWitness c;
    for (std::size_t i : p) c.vertices.push_back(g.label(i));
    return c;
}

IndexPath to_indices(const Graph& g, const CycleWitness& c) {
    IndexPath p;
    for (Vertex v : c.vertices) p.push_back(g.index_of(v));
    return p;
}

std::vector<Vertex> interior(const PathWitness& p) {
    if (p.vertices.size() < 2) return {};
    return sorted(std::vector<Vertex>(p.vertices.begin() + 1, p.vertices.end() - 1));
}

// Arc of C from position `from` walking `dir` for `count` vertices.
std::vector<Vertex> arc(const std::vector<Vertex>& C, std::size_t from, int dir, std::size_t count) {
    const std::size_t L = C.size();
    std::vector<Vertex> out;
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t shift = dir > 0 ? j % L : (L - j % L) % L;
        out.push_back(C[(from + shift) % L]);
    }
    return out;
}

bool runs_along(const std::vector<Vertex>& C, std::size_t from, int dir, const std::vector<Vertex>& p) {
    return arc(C, from, dir, p.size()) == p;
}

struct Split {
    PathWitness P2;  // oriented along C
    PathWitness Pprime;
    PathWitness Pdprime;
};

// Reads C as P1 P′ P2 P″.
std::optional<Split> split_cycle(const CycleWitness& C, const PathWitness& P1, const PathWitness& P2) {
    const auto& cv = C.vertices;
    const std::size_t L = cv.size();
    auto start = std::find(cv.begin(), cv.end(), P1.front());
    if (start == cv.end()) return std::nullopt;
    const std::size_t i = static_cast<std::size_t>(start - cv.begin());
    for (int dir : {1, -1}) {
        if (!runs_along(cv, i, dir, P1.vertices)) continue;
        for (const auto& q : {P2.vertices, P2.reversed().vertices}) {
            auto at = std::find(cv.begin(), cv.end(), q.front());
            if (at == cv.end()) return std::nullopt;
            const std::size_t j = static_cast<std::size_t>(at - cv.begin());
            if (!runs_along(cv, j, dir, q)) continue;
            const std::size_t e1 = dir > 0 ? (i + P1.vertices.size() - 1) % L : (i + L - (P1.vertices.size() - 1) % L) % L;
            const std::size_t gap = dir > 0 ? (j + L - e1) % L : (e1 + L - j) % L;
            const std::size_t e2 = dir > 0 ? (j + q.size() - 1) % L : (j + L - (q.size() - 1) % L) % L;
            const std::size_t back = dir > 0 ? (i + L - e2) % L : (e2 + L - i) % L;
            if (P1.vertices.size() + q.size() + gap + back - 2 != L) continue;
            Split s;
            s.P2 = PathWitness{q};
            s.Pprime = PathWitness{arc(cv, e1, dir, gap + 1)};
            s.Pdprime = PathWitness{arc(cv, e2, dir, back + 1)};
            return s;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(DiracType type) {
    switch (type) {
        case DiracType::D1: return "D1";
        case DiracType::D2: return "D2";
        case DiracType::D3: return "D3";
    }
    return "?";
}

std::string to_string(CycleOutcome::Kind kind) {
    switch (kind) {
        case CycleOutcome::Kind::longer_cycle: return "longer_cycle";
        case CycleOutcome::Kind::vertex_cover: return "vertex_cover";
        case CycleOutcome::Kind::decomposition: return "decomposition";
        case CycleOutcome::Kind::inconclusive: return "inconclusive";
    }
    return "?";
}

DiracValidation validate_dirac_decomposition(const Graph& host, const CycleWitness& C, const PathWitness& P1,
                                             const PathWitness& P2) {
    auto fail = [](std::string clause, std::vector<Vertex> comp = {}) -> DiracValidation {
        return DiracViolation{std::move(clause), std::move(comp)};
    };
    if (C.vertices.size() < 3 || !validate_witness(host, C)) return fail("C is a cycle");
    if (P1.vertices.empty() || P2.vertices.empty() || !validate_witness(host, P1) || !validate_witness(host, P2))
        return fail("P1 and P2 are paths");
    const std::vector<Vertex> in1 = sorted(P1.vertices), in2 = sorted(P2.vertices);
    for (Vertex x : in1)
        if (std::binary_search(in2.begin(), in2.end(), x)) return fail("P1 and P2 are disjoint");
    auto split = split_cycle(C, P1, P2);
    if (!split) return fail("C = P1·P′·P2·P″");
    const std::size_t delta = min_degree(host);
    if (C.length() < 2 * delta) return fail("|V(C)| ≥ 2δ(G)");
    if (!is_two_connected(host)) return fail("G is 2-connected");
    if (split->Pprime.length() + 2 < delta) return fail("P′ has at least δ(G)−2 edges");
    if (split->Pdprime.length() + 2 < delta) return fail("P″ has at least δ(G)−2 edges");

    DiracDecomposition d;
    d.host = host;
    d.C = C;
    d.P1 = P1;
    d.P2 = split->P2;
    d.Pprime = split->Pprime;
    d.Pdprime = split->Pdprime;

    std::vector<Vertex> removed = in1;
    removed.insert(removed.end(), in2.begin(), in2.end());
    auto comps = connected_components(host, removed);
    for (auto& h : comps) {
        h = sorted(h);
        if (h.size() < 3) return fail("|V(H)| ≥ 3", h);
    }
    for (const auto& h : comps) {
        Graph hg = host.induced(h);
        DiracComponent c{h, DiracType::D1};
        if (is_two_connected(hg)) {
            if (!matching_is_one(host, h, in1)) return fail("(D1) matching of size one between V(H) and V(P1)", h);
            if (!matching_is_one(host, h, in2)) return fail("(D1) matching of size one between V(H) and V(P2)", h);
            d.dirac_components.push_back(h);
        } else {
            BlockTree bt = block_cut_tree(hg);
            auto inner = leaf_inner_vertices(bt);
            const bool one1 = neighbours_in(host, h, in1).size() == 1;
            const bool one2 = neighbours_in(host, h, in2).size() == 1;
            const bool leaf2 = !neighbours_in(host, inner, in2).empty();
            const bool leaf1 = !neighbours_in(host, inner, in1).empty();
            if (one1 && !leaf2) {
                c.type = DiracType::D2;
            } else if (one2 && !leaf1) {
                c.type = DiracType::D3;
            } else if (one1) {
                return fail("(D2) no inner vertex of a leaf-block has a neighbor in P2", h);
            } else if (one2) {
                return fail("(D3) no inner vertex of a leaf-block has a neighbor in P1", h);
            } else {
                return fail("(D2/D3) exactly one vertex of P1 or P2 has neighbors in H", h);
            }
            for (std::size_t b : bt.leaf_blocks) d.dirac_components.push_back(sorted(bt.blocks[b]));
        }
        d.components.push_back(std::move(c));
    }
    const auto mid1 = interior(d.Pprime), mid2 = interior(d.Pdprime);
    if (std::count(comps.begin(), comps.end(), mid1) != 1) return fail("exactly one component with V(H)=V(P′)∖{s′,t′}");
    if (std::count(comps.begin(), comps.end(), mid2) != 1) return fail("exactly one component with V(H)=V(P″)∖{s″,t″}");
    return d;
}

std::optional<DiracDecomposition> find_dirac_decomposition(const Graph& g, const CycleWitness& C) {
    const auto& cv = C.vertices;
    const std::size_t L = cv.size();
    const std::size_t delta = min_degree(g);
    // Each arc needs at least three inner vertices and δ−2 edges.
    const std::size_t min_inner = std::max<std::size_t>(3, delta >= 3 ? delta - 3 : 0);
    if (L < 2 * min_inner + 2) return std::nullopt;
    for (std::size_t total = 2; total + 2 * min_inner <= L; ++total)
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t a = 1; a < total; ++a) {
                const std::size_t b = total - a;
                const std::size_t rest = L - total;
                for (std::size_t gap = min_inner; gap + min_inner <= rest; ++gap) {
                    PathWitness P1{arc(cv, i, 1, a)};
                    PathWitness P2{arc(cv, (i + a + gap) % L, 1, b)};
                    auto v = validate_dirac_decomposition(g, C, P1, P2);
                    if (auto* d = std::get_if<DiracDecomposition>(&v)) return *d;
                }
            }
    return std::nullopt;
}

CoverSearch bounded_vertex_cover(const Graph& g, std::size_t limit, std::uint64_t budget) {
    const std::size_t n = g.order();
    std::vector<char> taken(n, 0);
    std::vector<std::size_t> deg(n);
    std::size_t edges = g.size();
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.adj(v).size();
    std::vector<std::size_t> cover;
    CoverSearch out;

    auto take = [&](std::size_t v) {
        taken[v] = 1;
        cover.push_back(v);
        edges -= deg[v];
        for (std::size_t w : g.adj(v))
            if (!taken[w]) --deg[w];
    };
    auto untake = [&](std::size_t v) {
        for (std::size_t w : g.adj(v))
            if (!taken[w]) ++deg[w];
        edges += deg[v];
        cover.pop_back();
        taken[v] = 0;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (edges == 0) return true;
        if (budget == 0) {
            out.exhausted = true;
            return false;
        }
        --budget;
        std::size_t v = n, best = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (!taken[x] && deg[x] > best) {
                best = deg[x];
                v = x;
            }
        if (k == 0 || edges > k * best) return false;
        take(v);
        if (rec(k - 1)) return true;
        untake(v);
        if (best > k) return false;
        std::vector<std::size_t> nb;
        for (std::size_t w : g.adj(v))
            if (!taken[w]) nb.push_back(w);
        for (std::size_t w : nb) take(w);
        if (rec(k - nb.size())) return true;
        for (std::size_t j = nb.size(); j-- > 0;) untake(nb[j]);
        return false;
    };
    if (rec(limit)) {
        std::vector<Vertex> labels;
        for (std::size_t v : cover) labels.push_back(g.label(v));
        out.cover = sorted(labels);
    }
    return out;
}

CycleOutcome enlarge_or_decompose_cycle(const Graph& g, const CycleWitness& C, std::size_t k, ExactOptions options) {
    const std::size_t n = g.order();
    const std::size_t delta = min_degree(g);
    if (C.vertices.size() < 3 || !validate_witness(g, C)) throw Error("precondition: C is not a cycle of g");
    if (!is_two_connected(g)) throw Error("precondition: graph not 2-connected");
    if (delta < 12) throw Error("precondition: δ(G) ≥ 12");
    if (k == 0 || 24 * k > delta) throw Error("precondition: 0 < k ≤ δ(G)/24");
    if (2 * k + 12 > delta) throw Error("precondition: 2k+12 ≤ δ(G)");
    if (2 * delta >= n) throw Error("precondition: δ(G) < n/2");
    if (C.length() >= n) throw Error("precondition: C is non-hamiltonian");
    if (C.length() >= 2 * delta + k) throw Error("precondition: |V(C)| < 2δ(G)+k");

    CycleOutcome out;
    detail::ImproveOptions improve;
    improve.target = C.length() + 1;
    IndexPath grown = detail::improve_cycle(g, to_indices(g, C), improve);
    if (grown.size() > C.length()) {
        out.kind = CycleOutcome::Kind::longer_cycle;
        out.cycle = to_cycle(g, grown);
        return out;
    }
    if (auto vc = bounded_vertex_cover(g, delta + 2 * k); vc.cover) {
        out.kind = CycleOutcome::Kind::vertex_cover;
        out.cover = *vc.cover;
        return out;
    }
    if (auto d = find_dirac_decomposition(g, C)) {
        out.kind = CycleOutcome::Kind::decomposition;
        out.decomposition = std::move(d);
        return out;
    }
    if (n <= options.threshold) {
        auto best = exact_longest_cycle(g, options);
        if (best && best->length() > C.length()) {
            out.kind = CycleOutcome::Kind::longer_cycle;
            out.cycle = best;
            return out;
        }
        throw Error("no outcome for a cycle below the exact threshold");
    }
    return out;
}

CycleWitness dirac_cycle(const Graph& g, ExactOptions options) {
    const std::size_t n = g.order();
    if (n <= options.threshold) {
        auto c = exact_longest_cycle(g, options);
        if (!c) throw Error("graph is acyclic");
        return *c;
    }
    detail::ImproveOptions improve;
    improve.target = std::min(2 * min_degree(g), n);
    IndexPath c = detail::heuristic_long_cycle(g, improve);
    if (c.size() < 3) throw Error("graph is acyclic");
    return to_cycle(g, c);
}

namespace {

// Two longest (u,v)-paths over the components of g−{u,v}, joined.
std::optional<CycleWitness> separated_cycle(const Graph& g, Vertex u, Vertex v,
                                            const std::vector<std::vector<Vertex>>& comps,
                                            const ApproximatorHandle& oracle, ExactOptions options,
                                            std::vector<std::string>& anomalies) {
    std::vector<PathWitness> found;
    for (const auto& h : comps) {
        std::vector<Vertex> keep = h;
        keep.push_back(u);
        keep.push_back(v);
        Graph part = g.induced(sorted(keep));
        if (!part.adjacent(u, v)) part = part.with_edge(u, v);
        try {
            auto nd = build_nested_decomposition(part, u, v, options);
            auto r = long_nested_st_path(nd, oracle, options);
            if (r.path.length() >= 2) found.push_back(r.path);
        } catch (const Error& e) {
            anomalies.push_back("pair " + std::to_string(u) + "," + std::to_string(v) + ": " + e.what());
        }
    }
    if (found.size() < 2) return std::nullopt;
    std::stable_sort(found.begin(), found.end(),
                     [](const PathWitness& a, const PathWitness& b) { return a.length() > b.length(); });
    CycleWitness c{found[0].vertices};
    for (std::size_t j = found[1].vertices.size() - 1; j-- > 1;) c.vertices.push_back(found[1].vertices[j]);
    if (!validate_witness(g, c)) return std::nullopt;
    return c;
}

}  // namespace

CycleRun long_cycle_above_degree(const Graph& g, const ApproximatorHandle& oracle, ExactOptions options) {
    if (!is_two_connected(g)) throw Error("graph not 2-connected");
    const std::size_t n = g.order();
    const std::size_t delta = min_degree(g);
    CycleRun run;
    auto keep = [&](const CycleWitness& c) {
        if (c.length() > run.cycle.length()) run.cycle = c;
    };

    if (2 * delta >= n) {
        keep(dirac_cycle(g, options));
        if (run.cycle.length() < n) run.anomalies.push_back("no hamiltonian cycle found although 2δ ≥ n");
        return run;
    }
    try {
        if (auto c = oracle.invoke(g)) keep(*c);
    } catch (const Error& e) {
        run.anomalies.push_back(std::string("oracle: ") + e.what());
    }

    // Is there a cycle of length at least 2δ+1?
    keep(dirac_cycle(g, options));
    if (run.cycle.length() < 2 * delta) run.anomalies.push_back("cycle shorter than 2δ");
    if (run.cycle.length() <= 2 * delta) {
        detail::ImproveOptions improve;
        improve.target = 2 * delta + 1;
        keep(to_cycle(g, detail::improve_cycle(g, to_indices(g, run.cycle), improve)));
    }
    if (run.cycle.length() <= 2 * delta) {
        if (n > options.threshold) return run;
        auto best = exact_longest_cycle(g, options);
        if (!best || best->length() <= 2 * delta) return run;
        keep(*best);
    }
    if (delta <= 24) return run;

    std::optional<CycleOutcome> last;
    while (run.cycle.length() < n && run.cycle.length() - 2 * delta < delta / 24) {
        const std::size_t k = run.cycle.length() - 2 * delta + 1;
        last = enlarge_or_decompose_cycle(g, run.cycle, k, options);
        if (last->kind != CycleOutcome::Kind::longer_cycle) break;
        keep(*last->cycle);
    }
    if (run.cycle.length() >= n || run.cycle.length() >= (49 * delta) / 24) return run;
    if (last && last->kind == CycleOutcome::Kind::vertex_cover) return run;

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vertex u = g.label(a), v = g.label(b);
            auto comps = connected_components(g, {u, v});
            if (comps.size() < 2) continue;
            if (auto c = separated_cycle(g, u, v, comps, oracle, options, run.anomalies)) keep(*c);
        }
    return run;
}

OracleReport approximate_long_cycle(const Graph& g, const ApproximatorHandle& oracle, ExactOptions options) {
    auto run = long_cycle_above_degree(g, oracle, options);
    OracleReport rep;
    rep.witness = run.cycle;
    if (g.order() <= options.threshold) {
        auto best = exact_longest_cycle(g, options);
        const std::size_t opt = best ? best->length() : 0;
        rep.exact_optimum = opt;
        rep.offset_k = static_cast<long>(opt) - 2 * static_cast<long>(min_degree(g));
    }
    return rep;
}

OracleReport approximate_long_path(const Graph& g, const ApproximatorHandle& oracle, ExactOptions options) {
    if (g.empty()) throw Error("empty graph");
    PathWitness best{{g.vertices().front()}};
    for (const auto& comp : connected_components(g)) {
        if (comp.size() <= 2) {
            PathWitness p{sorted(comp)};
            if (p.length() > best.length()) best = p;
            continue;
        }
        const Graph part = g.induced(sorted(comp));
        const Vertex apex = part.vertices().back() + 1;
        std::vector<Vertex> vs = part.vertices();
        vs.push_back(apex);
        std::vector<Edge> es = part.edges();
        for (Vertex x : part.vertices()) es.push_back({x, apex});
        const Graph lifted = Graph::from_edges(vs, es);
        auto run = long_cycle_above_degree(lifted, oracle, options);
        auto& cv = run.cycle.vertices;
        auto at = std::find(cv.begin(), cv.end(), apex);
        std::vector<Vertex> p;
        if (at == cv.end()) {
            p = cv;
        } else {
            p.assign(at + 1, cv.end());
            p.insert(p.end(), cv.begin(), at);
        }
        PathWitness w{p};
        if (w.length() > best.length()) best = w;
    }
    if (!validate_witness(g, best)) throw Error("path lifted from the apex graph is invalid");
    OracleReport rep;
    rep.witness = best;
    if (g.order() <= options.threshold) {
        const std::size_t opt = exact_longest_path(g, options).length();
        rep.exact_optimum = opt;
        rep.offset_k = static_cast<long>(opt) - 2 * static_cast<long>(min_degree(g));
    }
    return rep;
}

}  // namespace longcycle
