#include "longcycle/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "longcycle/connectivity.hpp"
#include "longcycle/dirac.hpp"
#include "longcycle/eg_decomposition.hpp"

namespace longcycle {

namespace {

struct Named {
    Family family;
    const char* name;
};

constexpr Named kNames[] = {
    {Family::random_2connected, "random_2connected"},
    {Family::two_triangle_eg, "two_triangle_eg"},
    {Family::dirac_family, "dirac_family"},
    {Family::cover_bounded, "cover_bounded"},
    {Family::complete, "complete"},
    {Family::cycle, "cycle"},
    {Family::petersen, "petersen"},
    {Family::barbell, "barbell"},
};

int param(const InstanceSpec& spec, std::size_t i, std::optional<int> fallback = std::nullopt) {
    if (i < spec.params.size()) return spec.params[i];
    if (fallback) return *fallback;
    throw Error(to_string(spec.family) + ": missing parameter " + std::to_string(i + 1));
}

void require(bool ok, const InstanceSpec& spec, const std::string& what) {
    if (!ok) throw Error("infeasible " + to_string(spec.family) + " parameters: " + what);
}

std::vector<Vertex> range(Vertex first, Vertex last) {
    std::vector<Vertex> out;
    for (Vertex v = first; v <= last; ++v) out.push_back(v);
    return out;
}

void clique(std::set<Edge>& es, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) es.insert({vs[i], vs[j]});
}

Graph build(Vertex n, const std::set<Edge>& es) { return Graph::from_edges(range(1, n), {es.begin(), es.end()}); }

Graph random_two_connected(int n, int chord_percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t bound) { return rng() % bound; };
    const int base = 3 + static_cast<int>(draw(static_cast<std::uint64_t>(n - 2)));
    std::vector<Vertex> vs;
    std::set<Edge> es;
    for (int i = 1; i <= base; ++i) {
        vs.push_back(i);
        es.insert({i, i % base + 1});
    }
    int next = base + 1;
    while (next <= n) {
        const int len = 1 + static_cast<int>(draw(static_cast<std::uint64_t>(std::min(3, n - next + 1))));
        const Vertex a = vs[draw(vs.size())];
        Vertex b = a;
        while (b == a) b = vs[draw(vs.size())];
        Vertex prev = a;
        for (int k = 0; k < len; ++k) {
            vs.push_back(next);
            es.insert({prev, next});
            prev = next++;
        }
        es.insert({prev, b});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (static_cast<int>(draw(100)) < chord_percent) es.insert({i, j});
    return build(n, es);
}

}  // namespace

std::string to_string(Family f) {
    for (const auto& n : kNames)
        if (n.family == f) return n.name;
    return "?";
}

Family family_from_string(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.family;
    throw Error("unknown family " + name);
}

std::string InstanceSpec::id() const {
    std::string out = to_string(family);
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : ":") + std::to_string(params[i]);
    if (family == Family::random_2connected) out += "@" + std::to_string(seed);
    return out;
}

InstanceSpec InstanceSpec::parse(const std::string& text) {
    InstanceSpec spec;
    std::string body = text;
    if (auto at = body.find('@'); at != std::string::npos) {
        spec.seed = std::stoull(body.substr(at + 1));
        body = body.substr(0, at);
    }
    std::string name = body;
    if (auto colon = body.find(':'); colon != std::string::npos) {
        name = body.substr(0, colon);
        std::stringstream ss(body.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                spec.params.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw Error("bad instance parameter '" + item + "'");
            }
        }
    }
    spec.family = family_from_string(name);
    return spec;
}

Instance generate(const InstanceSpec& spec) {
    Instance inst;
    std::set<Edge> es;
    switch (spec.family) {
        case Family::random_2connected: {
            const int n = param(spec, 0), pct = param(spec, 1, 20);
            require(n >= 3, spec, "n >= 3");
            require(pct >= 0 && pct <= 100, spec, "chord percent in [0,100]");
            inst.graph = random_two_connected(n, pct, spec.seed);
            if (!is_two_connected(inst.graph)) throw Error("generator produced a graph that is not 2-connected");
            return inst;
        }
        case Family::two_triangle_eg: {
            // s = 1, t = 2, blocks A = 3..b+2 and B = b+3..2b+2.
            const int b = param(spec, 0);
            require(b >= 3, spec, "block size >= 3");
            auto A = range(3, b + 2), B = range(b + 3, 2 * b + 2);
            clique(es, A);
            clique(es, B);
            es.insert({1, A.front()});
            es.insert({1, B.front()});
            es.insert({2, A.back()});
            es.insert({2, B.back()});
            inst.graph = build(2 * b + 2, es);
            inst.st = {1, 2};
            std::vector<Vertex> p{1};
            p.insert(p.end(), A.begin(), A.end());
            p.push_back(2);
            auto v = validate_eg_decomposition(inst.graph, 1, 2, PathWitness{p}, PathWitness{{1}}, PathWitness{{2}});
            if (!std::holds_alternative<EGDecomposition>(v)) throw Error("planted decomposition rejected");
            return inst;
        }
        case Family::dirac_family: {
            // u = 1 and v = 2 are adjacent to every clique vertex.
            const int m = param(spec, 0), count = param(spec, 1, 2);
            require(m >= 3, spec, "clique size >= 3");
            require(count >= 2, spec, "at least two cliques");
            Vertex next = 3;
            for (int c = 0; c < count; ++c) {
                auto K = range(next, next + m - 1);
                clique(es, K);
                for (Vertex x : K) {
                    es.insert({1, x});
                    es.insert({2, x});
                }
                next += m;
            }
            inst.graph = build(next - 1, es);
            inst.st = {1, 2};
            // 1, first clique, 2, second clique back to 1.
            std::vector<Vertex> c{1};
            for (Vertex x = 3; x < 3 + m; ++x) c.push_back(x);
            c.push_back(2);
            for (Vertex x = 3 + m; x < 3 + 2 * m; ++x) c.push_back(x);
            auto v = validate_dirac_decomposition(inst.graph, CycleWitness{c}, PathWitness{{1}}, PathWitness{{2}});
            if (!std::holds_alternative<DiracDecomposition>(v)) throw Error("planted Dirac decomposition rejected");
            return inst;
        }
        case Family::cover_bounded: {
            const int a = param(spec, 0), b = param(spec, 1);
            require(a >= 1 && a <= b, spec, "1 <= a <= b");
            for (Vertex x = 1; x <= a; ++x)
                for (Vertex y = a + 1; y <= a + b; ++y) es.insert({x, y});
            inst.graph = build(a + b, es);
            inst.cover = range(1, a);
            return inst;
        }
        case Family::complete: {
            const int n = param(spec, 0);
            require(n >= 1, spec, "n >= 1");
            inst.graph = complete_graph(n);
            return inst;
        }
        case Family::cycle: {
            const int n = param(spec, 0);
            require(n >= 3, spec, "n >= 3");
            inst.graph = cycle_graph(n);
            return inst;
        }
        case Family::petersen:
            inst.graph = petersen_graph();
            return inst;
        case Family::barbell: {
            // K_m on 1..m, bridge path from m to m+len, K_m on m+len..2m+len-1.
            const int m = param(spec, 0), len = param(spec, 1, 1);
            require(m >= 3, spec, "clique size >= 3");
            require(len >= 1, spec, "bridge length >= 1");
            clique(es, range(1, m));
            for (Vertex x = m; x < m + len; ++x) es.insert({x, x + 1});
            clique(es, range(m + len, 2 * m + len - 1));
            inst.graph = build(2 * m + len - 1, es);
            return inst;
        }
    }
    throw Error("unknown family");
}

}  // namespace longcycle
