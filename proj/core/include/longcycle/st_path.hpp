#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/contraction.hpp"
#include "longcycle/eg_decomposition.hpp"
#include "longcycle/oracle.hpp"

namespace longcycle {

// Edge s_i t_i standing in for the removed interior of triple i; endpoints
// are original labels.
struct MarkedEdge {
    Vertex a = 0;
    Vertex b = 0;
    std::size_t triple = 0;
};

struct CompressedGraph {
    Graph H;
    ContractionLog log;
    std::vector<MarkedEdge> marked;
    std::vector<char> contracted;       // per triple: connector matching contracted
    std::map<Vertex, Vertex> rep;       // original vertex -> vertex of H, for survivors

    Vertex rep_of(Vertex original) const;
};

CompressedGraph nested_compress(const NestedEGDecomposition& d, ExactOptions options = {});

// Lifts an (s,t)-path of H to an (s,t)-path of the original graph, then
// lengthens it by connector replacement and the deepest-triple step.
PathWitness nested_decompress(const NestedEGDecomposition& d, const CompressedGraph& c, const PathWitness& Q,
                              ExactOptions options = {});

struct NestedPathResult {
    PathWitness path;
    std::optional<DecompressionCheck> decompression;  // when d has >= 2 triples
    std::vector<std::string> anomalies;               // skipped candidates
};

NestedPathResult long_nested_st_path(const NestedEGDecomposition& d, const ApproximatorHandle& oracle,
                                     ExactOptions options = {});

OracleReport approximate_long_st_path(const Graph& g, Vertex s, Vertex t, const ApproximatorHandle& oracle,
                                      ExactOptions options = {});

}  // namespace longcycle
