#pragma once

// Planted decomposition hosts and single-clause mutations. Each mutation is
// built to break exactly one clause while every clause checked before it
// still holds, so the expected clause is known by construction.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "longcycle/connectivity.hpp"
#include "longcycle/dirac.hpp"
#include "longcycle/eg_decomposition.hpp"
#include "longcycle/generators.hpp"
#include "planted.hpp"

namespace hosts {

using namespace longcycle;
using planted::range;

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[draw(rng, v.size())];
}

inline int between(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(draw(rng, hi - lo + 1)); }

inline Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
    std::set<Edge> es;
    for (const Edge& e : g.edges()) es.insert(e);
    std::vector<Vertex> vs = g.vertices();
    for (const Edge& e : extra) {
        es.insert(e);
        for (Vertex x : {e.u, e.v})
            if (!g.has_vertex(x) && std::find(vs.begin(), vs.end(), x) == vs.end()) vs.push_back(x);
    }
    return Graph::from_edges(vs, std::vector<Edge>(es.begin(), es.end()));
}

inline Vertex fresh(const Graph& g) { return g.vertices().back() + 1; }

// ---------------------------------------------------------------- EG side

struct EgCase {
    std::string name;
    planted::Host host;
};

struct EgMutation {
    std::string expected;
    planted::Host host;
};

inline PathWitness prefix(const PathWitness& p, std::size_t len) {
    return PathWitness{{p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(len)}};
}

inline PathWitness suffix(const PathWitness& p, std::size_t len) {
    return PathWitness{{p.vertices.end() - static_cast<std::ptrdiff_t>(len), p.vertices.end()}};
}

// A = 3..b+2 carries P; P1 = s, A.front.
inline planted::Host two_blocks_left(int b) {
    auto h = planted::two_blocks(b);
    h.P1 = prefix(h.P, 2);
    return h;
}

// P2 = A.back, t.
inline planted::Host two_blocks_right(int b) {
    auto h = planted::two_blocks(b);
    h.P2 = suffix(h.P, 2);
    return h;
}

// The bowtie host read backwards: s=2, t=1, P1 = 2, A.back with A.back
// joined to the cut vertex, so the separable component is of type R3.
inline planted::Host r3_bowtie(int b) {
    auto h = planted::r2_bowtie(b);
    const Vertex c = b + 3, back = b + 2;
    h.g = add_edges(h.g, {{back, c}});
    h.s = 2;
    h.t = 1;
    h.P = h.P.reversed();
    h.P1 = prefix(h.P, 2);
    h.P2 = suffix(h.P, 1);
    return h;
}

// Bowtie host with P1 = s, A.front and P2 = A.back, t.
inline planted::Host bowtie_wide(int b) {
    auto h = planted::r2_bowtie(b);
    h.P1 = prefix(h.P, 2);
    h.P2 = suffix(h.P, 2);
    return h;
}

inline std::vector<Vertex> bowtie_inner(int b) {
    auto out = range(b + 4, 2 * b + 2);
    auto l2 = range(2 * b + 3, 3 * b + 1);
    out.insert(out.end(), l2.begin(), l2.end());
    return out;
}

inline std::vector<Vertex> bowtie_all(int b) {
    auto out = bowtie_inner(b);
    out.push_back(b + 3);
    return out;
}

inline std::vector<EgCase> eg_planted() {
    std::vector<EgCase> out;
    for (int b = 3; b <= 18; ++b) {
        const std::string s = std::to_string(b);
        out.push_back({"two_blocks:" + s, planted::two_blocks(b)});
        out.push_back({"r1_tail:" + s, planted::r1_tail(b)});
        out.push_back({"r2_bowtie:" + s, planted::r2_bowtie(b)});
        auto gen = generate(InstanceSpec::parse("two_triangle_eg:" + s));
        out.push_back({"two_triangle_eg:" + s, {gen.graph, 1, 2, PathWitness{[&] {
                                                     std::vector<Vertex> p{1};
                                                     for (Vertex x = 3; x <= b + 2; ++x) p.push_back(x);
                                                     p.push_back(2);
                                                     return p;
                                                 }()},
                                                 PathWitness{{1}}, PathWitness{{2}}}});
        if (b >= 4) {
            out.push_back({"two_blocks_left:" + s, two_blocks_left(b)});
            out.push_back({"two_blocks_right:" + s, two_blocks_right(b)});
            out.push_back({"r3_bowtie:" + s, r3_bowtie(b)});
        }
        if (b >= 5) out.push_back({"bowtie_wide:" + s, bowtie_wide(b)});
    }
    return out;
}

// Components of G - V(P1 ∪ P2), joined in a chain by one edge each.
inline Graph join_components(const planted::Host& h, std::mt19937_64& rng) {
    std::vector<Vertex> removed = h.P1.vertices;
    removed.insert(removed.end(), h.P2.vertices.begin(), h.P2.vertices.end());
    auto comps = connected_components(h.g, removed);
    std::vector<Edge> extra;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) extra.emplace_back(pick(rng, comps[i]), pick(rng, comps[i + 1]));
    return add_edges(h.g, extra);
}

using EgMaker = std::function<EgMutation(std::mt19937_64&)>;

inline std::vector<EgMaker> eg_mutations() {
    std::vector<EgMaker> out;
    auto any_base = [](std::mt19937_64& rng) {
        const int b = between(rng, 4, 18);
        switch (draw(rng, 4)) {
            case 0: return planted::two_blocks(b);
            case 1: return planted::r1_tail(b);
            case 2: return planted::r2_bowtie(b);
            default: return r3_bowtie(b);
        }
    };
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        auto& p = h.P.vertices;
        switch (draw(rng, 3)) {
            case 0: h.P = h.P.reversed(); break;
            case 1: {
                const std::size_t at = 1 + draw(rng, p.size() - 2);
                p.insert(p.begin() + static_cast<std::ptrdiff_t>(at), p[at]);
                break;
            }
            default: p.pop_back();
        }
        return EgMutation{"P is an (s,t)-path", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const auto& p = h.P.vertices;
        switch (draw(rng, 3)) {
            case 0: h.P1 = PathWitness{{p[1]}}; break;
            case 1: h.P1 = PathWitness{{h.t}}; break;
            default: h.P1 = PathWitness{{h.s, p[2 + draw(rng, p.size() - 2)]}};
        }
        return EgMutation{"P1 is a prefix of P", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const auto& p = h.P.vertices;
        switch (draw(rng, 3)) {
            case 0: h.P2 = PathWitness{{p[p.size() - 2]}}; break;
            case 1: h.P2 = PathWitness{{h.s}}; break;
            default: h.P2 = PathWitness{{p[draw(rng, p.size() - 2)], h.t}};
        }
        return EgMutation{"P2 is a suffix of P", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const std::size_t L = h.P.vertices.size();
        const std::size_t a = 1 + draw(rng, L);
        const std::size_t b = L - a + 1 + draw(rng, a);
        h.P1 = prefix(h.P, a);
        h.P2 = suffix(h.P, b);
        return EgMutation{"P1 and P2 are disjoint", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        h.g = add_edges(h.g, {{pick(rng, h.g.vertices()), fresh(h.g)}});
        return EgMutation{"G is 2-connected", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const std::size_t L = h.P.vertices.size();
        const std::size_t dst = min_degree_without(h.g, {h.s, h.t});
        // inner length (L-1) - (a-1) - (b-1) < dst with a + b <= L.
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t a = 1; a < L; ++a)
            for (std::size_t b = 1; a + b <= L; ++b)
                if (L + 1 - a - b < dst) options.emplace_back(a, b);
        const auto [a, b] = pick(rng, options);
        h.P1 = prefix(h.P, a);
        h.P2 = suffix(h.P, b);
        return EgMutation{"|E(P′)| ≥ δ(G−{s,t})", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        h.g = join_components(h, rng);
        return EgMutation{"at least two connected components", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const Vertex x = fresh(h.g), u = pick(rng, h.P1.vertices), v = pick(rng, h.P2.vertices);
        if (draw(rng, 2)) {
            h.g = add_edges(h.g, {{u, x}, {x, v}});
        } else {
            h.g = add_edges(h.g, {{u, x}, {x, x + 1}, {x + 1, v}});
        }
        return EgMutation{"|V(H)| ≥ 3", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int b = between(rng, 4, 18);
        if (draw(rng, 2)) {
            auto h = planted::r1_tail(b);
            h.g = add_edges(h.g, {{1, pick(rng, range(6, b + 3))}});
            return EgMutation{"(R1) matching of size one between V(H) and V(P1)", h};
        }
        auto h = two_blocks_left(b);
        h.g = add_edges(h.g, {{1, pick(rng, range(4, b + 2))}});
        return EgMutation{"(R1) matching of size one between V(H) and V(P1)", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int b = between(rng, 4, 18);
        auto h = two_blocks_right(b);
        h.g = add_edges(h.g, {{2, pick(rng, range(3, b + 1))}});
        return EgMutation{"(R1) matching of size one between V(H) and V(P2)", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int b = between(rng, 3, 18);
        auto h = planted::r2_bowtie(b);
        h.g = add_edges(h.g, {{2, pick(rng, bowtie_inner(b))}});
        return EgMutation{"(R2) no inner vertex of a leaf-block has a neighbor in P2", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int b = between(rng, 4, 18);
        auto h = r3_bowtie(b);
        h.g = add_edges(h.g, {{pick(rng, h.P1.vertices), pick(rng, bowtie_inner(b))}});
        return EgMutation{"(R3) no inner vertex of a leaf-block has a neighbor in P1", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int b = between(rng, 5, 18);
        auto h = bowtie_wide(b);
        h.g = add_edges(h.g, {{h.P1.vertices[1], pick(rng, bowtie_all(b))}, {h.P2.vertices[0], pick(rng, bowtie_all(b))}});
        return EgMutation{"(R2/R3) exactly one vertex of P1 or P2 has neighbors in H", h};
    });
    return out;
}

// ------------------------------------------------------------- Dirac side

struct DiracHost {
    Graph g;
    CycleWitness C;
    PathWitness P1, P2;
};

struct DiracCase {
    std::string name;
    DiracHost host;
};

struct DiracMutation {
    std::string expected;
    DiracHost host;
};

// dirac_family:m,c read along 1, first clique, 2, second clique.
inline DiracHost cliques(int m, int c) {
    DiracHost h;
    h.g = generate(InstanceSpec::parse("dirac_family:" + std::to_string(m) + "," + std::to_string(c))).graph;
    std::vector<Vertex> cv{1};
    for (Vertex x = 3; x < 3 + m; ++x) cv.push_back(x);
    cv.push_back(2);
    for (Vertex x = 3 + m; x < 3 + 2 * m; ++x) cv.push_back(x);
    h.C = CycleWitness{cv};
    h.P1 = PathWitness{{1}};
    h.P2 = PathWitness{{2}};
    return h;
}

inline std::vector<Vertex> clique_vertices(int m, int i) { return range(3 + i * m, 2 + (i + 1) * m); }

// Arcs A1 = 3..r+2 (1 to 2) and A2 = r+3..2r+2 (2 to 1) carry C; the bowtie
// has cut vertex c = 2r+3 and leaf cliques of size q. 1 sees two inner
// vertices of each leaf, 2 sees c.
struct Bowtie {
    int q = 3, r = 3;
    Vertex c() const { return 2 * r + 3; }
    std::vector<Vertex> A1() const { return range(3, r + 2); }
    std::vector<Vertex> A2() const { return range(r + 3, 2 * r + 2); }
    std::vector<Vertex> L1() const { return range(2 * r + 4, 2 * r + 2 + q); }
    std::vector<Vertex> L2() const { return range(2 * r + 3 + q, 2 * r + 1 + 2 * q); }
    std::vector<Vertex> inner() const {
        auto out = L1();
        auto l2 = L2();
        out.insert(out.end(), l2.begin(), l2.end());
        return out;
    }
    std::vector<Vertex> all() const {
        auto out = inner();
        out.push_back(c());
        return out;
    }

    DiracHost host() const {
        std::set<Edge> es;
        auto a1 = A1(), a2 = A2(), l1 = L1(), l2 = L2();
        planted::clique(es, a1);
        planted::clique(es, a2);
        l1.push_back(c());
        l2.push_back(c());
        planted::clique(es, l1);
        planted::clique(es, l2);
        es.insert({1, a1.front()});
        es.insert({a1.back(), 2});
        es.insert({2, a2.front()});
        es.insert({a2.back(), 1});
        for (Vertex x : {l1[0], l1[1], l2[0], l2[1]}) es.insert({1, x});
        es.insert({2, c()});
        DiracHost h;
        h.g = planted::build(2 * r + 1 + 2 * q, es);
        std::vector<Vertex> cv{1};
        cv.insert(cv.end(), a1.begin(), a1.end());
        cv.push_back(2);
        cv.insert(cv.end(), a2.begin(), a2.end());
        h.C = CycleWitness{cv};
        h.P1 = PathWitness{{1}};
        h.P2 = PathWitness{{2}};
        return h;
    }

    // P1 = A1.back, 2 with A1.back joined to c; P2 = 1. Type D3.
    DiracHost mirrored() const {
        DiracHost h = host();
        h.g = add_edges(h.g, {{A1().back(), c()}});
        h.P1 = PathWitness{{A1().back(), 2}};
        h.P2 = PathWitness{{1}};
        return h;
    }

    // P1 = 1, A1.front and P2 = 2, A2.front.
    DiracHost wide() const {
        DiracHost h = host();
        h.P1 = PathWitness{{1, A1().front()}};
        h.P2 = PathWitness{{2, A2().front()}};
        return h;
    }
};

inline std::vector<DiracCase> dirac_planted() {
    std::vector<DiracCase> out;
    for (int m = 3; m <= 18; ++m)
        for (int c = 2; c <= 3; ++c)
            out.push_back({"dirac_family:" + std::to_string(m) + "," + std::to_string(c), cliques(m, c)});
    for (int q = 3; q <= 18; q += 3)
        for (int r = 3; r <= 18; r += 3) {
            const Bowtie bt{q, r};
            const std::string s = std::to_string(q) + "," + std::to_string(r);
            out.push_back({"bowtie:" + s, bt.host()});
            if (r >= 4) {
                out.push_back({"bowtie_mirrored:" + s, bt.mirrored()});
                out.push_back({"bowtie_wide:" + s, bt.wide()});
            }
        }
    return out;
}

using DiracMaker = std::function<DiracMutation(std::mt19937_64&)>;

inline std::vector<DiracMaker> dirac_mutations() {
    std::vector<DiracMaker> out;
    auto any_base = [](std::mt19937_64& rng) {
        if (draw(rng, 2)) return cliques(between(rng, 3, 18), between(rng, 2, 3));
        return Bowtie{between(rng, 3, 18), between(rng, 3, 18)}.host();
    };
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        auto& cv = h.C.vertices;
        if (draw(rng, 2)) {
            const std::size_t at = draw(rng, cv.size());
            cv.insert(cv.begin() + static_cast<std::ptrdiff_t>(at), cv[at]);
        } else {
            cv.resize(2);
        }
        return DiracMutation{"C is a cycle", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        switch (draw(rng, 3)) {
            case 0: h.P1 = PathWitness{}; break;
            case 1: h.P2 = PathWitness{{1, 2}}; break;
            default: h.P1 = PathWitness{{1, 1}};
        }
        return DiracMutation{"P1 and P2 are paths", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const auto& cv = h.C.vertices;
        if (draw(rng, 2)) {
            h.P2 = h.P1;
        } else {
            h.P1 = PathWitness{{cv[0], cv[1]}};
            h.P2 = PathWitness{{cv[1], cv[2]}};
        }
        return DiracMutation{"P1 and P2 are disjoint", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        if (draw(rng, 2)) {
            const int m = between(rng, 3, 18);
            auto h = cliques(m, 3);
            if (draw(rng, 2)) {
                auto A = clique_vertices(m, 0);
                const std::size_t i = draw(rng, A.size() - 2);
                h.P1 = PathWitness{{A[i], A[i + 2]}};
            } else {
                h.P2 = PathWitness{{pick(rng, clique_vertices(m, 2))}};
            }
            return DiracMutation{"C = P1·P′·P2·P″", h};
        }
        const Bowtie bt{between(rng, 3, 18), between(rng, 3, 18)};
        auto h = bt.host();
        h.P2 = PathWitness{{draw(rng, 2) ? bt.c() : pick(rng, bt.inner())}};
        return DiracMutation{"C = P1·P′·P2·P″", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int m = between(rng, 3, 18);
        auto h = cliques(m, between(rng, 2, 3));
        // Drop a nonempty part of one arc; both arcs keep a vertex.
        auto arc = clique_vertices(m, static_cast<int>(draw(rng, 2)));
        const std::size_t drop = 1 + draw(rng, arc.size() - 1);
        std::shuffle(arc.begin(), arc.end(), rng);
        std::set<Vertex> gone(arc.begin(), arc.begin() + static_cast<std::ptrdiff_t>(drop));
        std::erase_if(h.C.vertices, [&](Vertex x) { return gone.count(x) > 0; });
        return DiracMutation{"|V(C)| ≥ 2δ(G)", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        h.g = add_edges(h.g, {{pick(rng, h.g.vertices()), fresh(h.g)}});
        return DiracMutation{"G is 2-connected", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int m = between(rng, 3, 18);
        auto h = cliques(m, between(rng, 2, 3));
        const int a = between(rng, 3, m);
        std::vector<Vertex> p{1};
        for (int i = 0; i < a; ++i) p.push_back(3 + i);
        h.P1 = PathWitness{p};
        return DiracMutation{"P′ has at least δ(G)−2 edges", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int m = between(rng, 3, 18);
        auto h = cliques(m, between(rng, 2, 3));
        const int a = between(rng, 3, m);
        std::vector<Vertex> p{2};
        for (int i = 0; i < a; ++i) p.push_back(3 + m + i);
        h.P2 = PathWitness{p};
        return DiracMutation{"P″ has at least δ(G)−2 edges", h};
    });
    out.push_back([=](std::mt19937_64& rng) {
        auto h = any_base(rng);
        const Vertex x = fresh(h.g), u = pick(rng, h.P1.vertices), v = pick(rng, h.P2.vertices);
        if (draw(rng, 2)) {
            h.g = add_edges(h.g, {{u, x}, {x, v}});
        } else {
            h.g = add_edges(h.g, {{u, x}, {x, x + 1}, {x + 1, v}});
        }
        return DiracMutation{"|V(H)| ≥ 3", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int m = between(rng, 5, 18);
        auto h = cliques(m, between(rng, 2, 3));
        const int a = between(rng, 1, 2);
        std::vector<Vertex> p;
        for (int i = m - a; i < m; ++i) p.push_back(3 + m + i);
        p.push_back(1);
        h.P1 = PathWitness{p};
        return DiracMutation{"(D1) matching of size one between V(H) and V(P1)", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const int m = between(rng, 5, 18);
        auto h = cliques(m, between(rng, 2, 3));
        const int a = between(rng, 1, 2);
        std::vector<Vertex> p{2};
        for (int i = 0; i < a; ++i) p.push_back(3 + m + i);
        h.P2 = PathWitness{p};
        return DiracMutation{"(D1) matching of size one between V(H) and V(P2)", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const Bowtie bt{between(rng, 3, 18), between(rng, 3, 18)};
        auto h = bt.host();
        h.g = add_edges(h.g, {{2, pick(rng, bt.inner())}});
        return DiracMutation{"(D2) no inner vertex of a leaf-block has a neighbor in P2", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const Bowtie bt{between(rng, 3, 18), between(rng, 4, 18)};
        auto h = bt.mirrored();
        h.g = add_edges(h.g, {{pick(rng, h.P1.vertices), pick(rng, bt.inner())}});
        return DiracMutation{"(D3) no inner vertex of a leaf-block has a neighbor in P1", h};
    });
    out.push_back([](std::mt19937_64& rng) {
        const Bowtie bt{between(rng, 3, 18), between(rng, 4, 18)};
        auto h = bt.wide();
        h.g = add_edges(h.g, {{bt.A1().front(), pick(rng, bt.all())}, {bt.A2().front(), pick(rng, bt.all())}});
        return DiracMutation{"(D2/D3) exactly one vertex of P1 or P2 has neighbors in H", h};
    });
    // Two disjoint edges merge the P′ arc (or the P″ arc) with another
    // clique into one 2-connected component.
    auto merge = [](std::mt19937_64& rng, int arc, int other) {
        const int m = between(rng, 3, 18);
        auto h = cliques(m, 3);
        auto A = clique_vertices(m, arc), B = clique_vertices(m, other);
        std::shuffle(A.begin(), A.end(), rng);
        std::shuffle(B.begin(), B.end(), rng);
        h.g = add_edges(h.g, {{A[0], B[0]}, {A[1], B[1]}});
        return h;
    };
    out.push_back([=](std::mt19937_64& rng) {
        return DiracMutation{"exactly one component with V(H)=V(P′)∖{s′,t′}", merge(rng, 0, draw(rng, 2) ? 1 : 2)};
    });
    out.push_back([=](std::mt19937_64& rng) {
        return DiracMutation{"exactly one component with V(H)=V(P″)∖{s″,t″}", merge(rng, 1, 2)};
    });
    return out;
}

}  // namespace hosts
