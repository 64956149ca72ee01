#pragma once

#include <string>

#include "longcycle/dirac.hpp"
#include "longcycle/eg_decomposition.hpp"

namespace longcycle {

// Recursion tree: node i per triple, labeled (i, |V(G_i)|, δ(G_i-{s_i,t_i}),
// decomposed), edges parent -> child.
std::string export_dot(const NestedEGDecomposition& d);
// Node 0 is the host (0, n, δ, true); node i >= 1 is the i-th component of
// G - V(P1 ∪ P2) labeled (i, |V(H)|, δ(H), false) plus its type.
std::string export_dot(const DiracDecomposition& d);

std::string export_json(const NestedEGDecomposition& d);
std::string export_json(const DiracDecomposition& d);

}  // namespace longcycle
