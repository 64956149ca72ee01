#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "longcycle/exact.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/witness.hpp"

namespace longcycle {

// (s,t)-path of length >= ceil(|C|/2) when s,t lie on C, >= |C|/2 otherwise.
PathWitness path_between_via_cycle(const Graph& g, const CycleWitness& c, Vertex s, Vertex t);

// Doubling construction: the oracle runs on the block of two copies of g
// glued at s and t.
PathWitness st_path_from_cycle_oracle(const Graph& g, Vertex s, Vertex t, const ApproximatorHandle& oracle);

using PathPair = std::pair<PathWitness, PathWitness>;

// Two vertex-disjoint paths starting at a.first and a.second and ending at
// the two vertices of b (either pairing) with total length >= k, or nullopt.
// Up to the exact threshold the pair of maximum total length is returned.
std::optional<PathPair> two_disjoint_paths_min_total(const Graph& g, std::pair<Vertex, Vertex> a,
                                                     std::pair<Vertex, Vertex> b, std::size_t k,
                                                     ExactOptions options = {});

// (s,t)-path of length >= δ(g - B) in a 2-connected graph.
PathWitness eg_long_st_path(const Graph& g, Vertex s, Vertex t, const std::vector<Vertex>& B,
                            ExactOptions options = {});

// Best-effort long (s,t)-path: shortest path grown by detours and local
// re-optimisation. Exact when n <= threshold.
PathWitness long_st_path(const Graph& g, Vertex s, Vertex t, ExactOptions options = {});

bool is_bridge(const Graph& g, Vertex a, Vertex b);

}  // namespace longcycle
