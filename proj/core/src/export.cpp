#include "longcycle/export.hpp"

#include "json.hpp"

namespace longcycle {

namespace {

std::string node(std::size_t i, std::size_t order, std::size_t delta, bool decomposed, const std::string& extra = {}) {
    std::string label = "(" + std::to_string(i) + ", " + std::to_string(order) + ", " + std::to_string(delta) + ", " +
                        (decomposed ? "true" : "false") + ")";
    if (!extra.empty()) label += "\\n" + extra;
    return "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
}

std::size_t delta_of(const Graph& g) { return g.empty() ? 0 : min_degree(g); }

}  // namespace

std::string export_dot(const NestedEGDecomposition& d) {
    std::string out = "digraph nested_eg {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < d.triples.size(); ++i) {
        const Triple& tr = d.triples[i];
        out += node(i, tr.graph.order(), tr.delta_st, tr.decomposed, tr.inconclusive ? "inconclusive" : "");
    }
    for (std::size_t i = 0; i < d.triples.size(); ++i)
        for (std::size_t c : d.triples[i].children)
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(c) + ";\n";
    return out + "}\n";
}

std::string export_dot(const DiracDecomposition& d) {
    std::string out = "digraph dirac {\n  node [shape=box];\n";
    out += node(0, d.host.order(), delta_of(d.host), true, "cycle " + std::to_string(d.C.length()));
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& c = d.components[i];
        out += node(i + 1, c.vertices.size(), delta_of(d.host.induced(c.vertices)), false, to_string(c.type));
    }
    for (std::size_t i = 0; i < d.components.size(); ++i) out += "  n0 -> n" + std::to_string(i + 1) + ";\n";
    return out + "}\n";
}

std::string export_json(const NestedEGDecomposition& d) {
    using nlohmann::ordered_json;
    ordered_json triples = ordered_json::array();
    for (std::size_t i = 0; i < d.triples.size(); ++i) {
        const Triple& tr = d.triples[i];
        ordered_json j;
        j["index"] = i;
        j["order"] = tr.graph.order();
        j["size"] = tr.graph.size();
        j["s"] = tr.s;
        j["t"] = tr.t;
        j["parent"] = tr.parent ? ordered_json(*tr.parent) : ordered_json(nullptr);
        j["d"] = tr.d;
        j["delta_st"] = tr.delta_st;
        j["decomposed"] = tr.decomposed;
        j["inconclusive"] = tr.inconclusive;
        j["path"] = tr.path.vertices;
        j["children"] = tr.children;
        if (tr.decomposition) {
            j["P1"] = tr.decomposition->P1.vertices;
            j["P2"] = tr.decomposition->P2.vertices;
            j["eg_components"] = tr.decomposition->eg_components;
        }
        triples.push_back(std::move(j));
    }
    ordered_json root;
    root["triples"] = std::move(triples);
    return root.dump() + "\n";
}

std::string export_json(const DiracDecomposition& d) {
    using nlohmann::ordered_json;
    ordered_json root;
    root["n"] = d.host.order();
    root["delta"] = delta_of(d.host);
    root["C"] = d.C.vertices;
    root["P1"] = d.P1.vertices;
    root["P2"] = d.P2.vertices;
    root["Pprime"] = d.Pprime.vertices;
    root["Pdprime"] = d.Pdprime.vertices;
    ordered_json comps = ordered_json::array();
    for (const auto& c : d.components) comps.push_back({{"vertices", c.vertices}, {"type", to_string(c.type)}});
    root["components"] = std::move(comps);
    root["dirac_components"] = d.dirac_components;
    return root.dump() + "\n";
}

}  // namespace longcycle
