#pragma once

#include <cstddef>
#include <optional>

#include "longcycle/graph.hpp"
#include "longcycle/witness.hpp"

namespace longcycle {

inline constexpr std::size_t kDefaultExactThreshold = 18;
inline constexpr std::size_t kMaxExactOrder = 64;

struct ExactOptions {
    std::size_t threshold = kDefaultExactThreshold;
};

// Longest cycle, lexicographically smallest canonical sequence among the
// longest; nullopt for acyclic graphs.
std::optional<CycleWitness> exact_longest_cycle(const Graph& g, ExactOptions options = {});

PathWitness exact_longest_st_path(const Graph& g, Vertex s, Vertex t, ExactOptions options = {});

// Longest path overall (any endpoints); a single vertex for edgeless graphs.
PathWitness exact_longest_path(const Graph& g, ExactOptions options = {});

}  // namespace longcycle
