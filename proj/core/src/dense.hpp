#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

// Graph over indices 0..n-1 (n <= 64) with bitmask rows. Index order is the
// label order of the source graph.
struct Dense {
    int n = 0;
    std::vector<Mask> adj;
    Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
};

Dense make_dense(const Graph& g);

// Vertices reachable from `from` inside `allowed`.
Mask reach(const Dense& d, Mask allowed, int from);

// Vertices lying on at least one a-b path inside G[allowed]; 0 if b is
// unreachable. a == b yields {a}.
Mask block_path_union(const Dense& d, Mask allowed, int a, int b);

struct Budget {
    std::uint64_t left = std::numeric_limits<std::uint64_t>::max();
    bool exhausted = false;
    bool spend() {
        if (left == 0) {
            exhausted = true;
            return false;
        }
        --left;
        return true;
    }
};

// Longest s-t path inside allowed; lexicographically smallest among the
// longest when the search completes. Empty when t is unreachable.
// Paths must contain every vertex of `required`.
std::vector<int> longest_st_path(const Dense& d, Mask allowed, int s, int t, Budget& budget,
                                 Mask required = 0);

// Longest cycle inside allowed, canonical (smallest start, second < last),
// lexicographically smallest among the longest. Empty when acyclic.
std::vector<int> longest_cycle(const Dense& d, Mask allowed, Budget& budget);

}  // namespace longcycle::detail
