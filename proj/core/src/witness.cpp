#include "longcycle/witness.hpp"

#include <algorithm>
#include <set>

namespace longcycle {

bool PathWitness::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

PathWitness PathWitness::reversed() const {
    return PathWitness{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

bool CycleWitness::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

Validation check_sequence(const Graph& g, const std::vector<Vertex>& vs, bool closed) {
    for (Vertex v : vs)
        if (!g.has_vertex(v)) return Validation::fail("unknown vertex " + std::to_string(v));
    std::set<Vertex> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) return Validation::fail("vertices not distinct");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.adjacent(vs[i], vs[i + 1])) return Validation::fail("non-adjacent consecutive pair");
    if (closed && !g.adjacent(vs.back(), vs.front()))
        return Validation::fail("non-adjacent consecutive pair");
    return Validation::pass();
}

}  // namespace

Validation validate_witness(const Graph& g, const PathWitness& w) {
    if (w.vertices.empty()) return Validation::fail("empty path");
    return check_sequence(g, w.vertices, false);
}

Validation validate_witness(const Graph& g, const CycleWitness& w) {
    if (w.vertices.size() < 3) return Validation::fail("cycle needs at least 3 vertices");
    return check_sequence(g, w.vertices, true);
}

Validation validate_st_path(const Graph& g, const PathWitness& w, Vertex s, Vertex t) {
    auto v = validate_witness(g, w);
    if (!v) return v;
    if (w.front() != s || w.back() != t) return Validation::fail("wrong endpoints");
    return v;
}

CycleWitness canonical_cycle(CycleWitness c) {
    auto& vs = c.vertices;
    if (vs.size() < 3) return c;
    auto it = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), it, vs.end());
    if (vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
    return c;
}

}  // namespace longcycle
