#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "longcycle/exact.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/witness.hpp"

namespace longcycle {

enum class EgType { R1, R2, R3 };
std::string to_string(EgType type);

struct EgComponent {
    std::vector<Vertex> vertices;  // sorted
    EgType type = EgType::R1;
};

struct EGDecomposition {
    Graph host;
    Vertex s = 0;
    Vertex t = 0;
    PathWitness P;
    PathWitness P1;
    PathWitness P2;
    std::vector<EgComponent> components;
    std::vector<std::vector<Vertex>> eg_components;  // sorted vertex sets
    std::vector<std::size_t> eg_owner;               // index into components

    std::size_t inner_length() const { return P.length() - P1.length() - P2.length(); }
    std::size_t delta_st() const;
};

struct EgViolation {
    std::string clause;
    std::vector<Vertex> component;  // offending component, when there is one
};

using EgValidation = std::variant<EGDecomposition, EgViolation>;

// Checks every clause of the Erdős–Gallai decomposition definition and
// reports the first one that fails.
EgValidation validate_eg_decomposition(const Graph& host, Vertex s, Vertex t, const PathWitness& P,
                                       const PathWitness& P1, const PathWitness& P2);

// True when the path uses an edge with both ends in `vertices` (sorted).
bool path_enters(const PathWitness& path, const std::vector<Vertex>& vertices);

using PathOrDecomposition = std::variant<PathWitness, EGDecomposition>;

// Either an (s,t)-path of length >= min(5/4 δ(g-{s,t}) - 3, n - 1) or a
// decomposition no (s,t)-path of which enters two Erdős–Gallai components.
// Requires g 2-connected and δ(g-{s,t}) >= 16.
PathOrDecomposition long_path_or_eg_decomposition(const Graph& g, Vertex s, Vertex t, ExactOptions options = {});

struct ComponentInstance {
    Graph K;
    Vertex s = 0;
    Vertex t = 0;
    std::size_t origin = 0;  // index into eg_components
};

ComponentInstance eg_component_to_instance(const EGDecomposition& d, std::size_t eg_index);

struct SeparablePath {
    Vertex cut_vertex = 0;
    PathWitness path;  // from cut_vertex to v
};

// A (c,v)-path of length >= (δ(H) - |S|)/2 with c the cut vertex of a
// leaf-block of H. For a non-positive bound the shortest such path is
// returned.
SeparablePath long_path_in_separable(const Graph& H, const std::vector<Vertex>& S, Vertex v,
                                     ExactOptions options = {});

// Given Q of length >= 4k+5 entering no Erdős–Gallai component of d and
// |E(d.P)| <= δ(g-{s,t}) + k, an (s,t)-path of length at least
// min(δ + k - 1, 3/2 δ - 5/2 k - 1).
PathWitness boost_non_entering_path(const EGDecomposition& d, const PathWitness& Q, std::size_t k,
                                    ExactOptions options = {});

inline constexpr std::size_t kDecompositionDegree = 16;

struct Triple {
    Graph graph;
    Vertex s = 0;
    Vertex t = 0;
    std::optional<std::size_t> parent;  // e(i)
    std::size_t d = 0;                  // |{s_e(i), t_e(i)} \ {s_i, t_i}|
    std::size_t delta_st = 0;           // δ(G_i - {s_i, t_i})
    PathWitness path;                   // P_i
    bool decomposed = false;
    bool inconclusive = false;  // the finder gave up above the exact threshold
    std::optional<EGDecomposition> decomposition;
    std::vector<std::size_t> children;  // in eg_components order
};

struct NestedEGDecomposition {
    std::vector<Triple> triples;
};

NestedEGDecomposition build_nested_decomposition(const Graph& g, Vertex s, Vertex t, ExactOptions options = {});

}  // namespace longcycle
