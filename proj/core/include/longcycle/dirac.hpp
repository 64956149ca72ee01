#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "longcycle/exact.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/witness.hpp"

namespace longcycle {

enum class DiracType { D1, D2, D3 };
std::string to_string(DiracType type);

struct DiracComponent {
    std::vector<Vertex> vertices;  // sorted
    DiracType type = DiracType::D1;
};

// C = P1 P′ P2 P″, read along C.vertices (possibly rotated and reversed).
struct DiracDecomposition {
    Graph host;
    CycleWitness C;
    PathWitness P1;
    PathWitness P2;
    PathWitness Pprime;   // last vertex of P1 .. first vertex of P2
    PathWitness Pdprime;  // last vertex of P2 .. first vertex of P1
    std::vector<DiracComponent> components;
    std::vector<std::vector<Vertex>> dirac_components;  // sorted vertex sets
};

struct DiracViolation {
    std::string clause;
    std::vector<Vertex> component;
};

using DiracValidation = std::variant<DiracDecomposition, DiracViolation>;

DiracValidation validate_dirac_decomposition(const Graph& host, const CycleWitness& C, const PathWitness& P1,
                                             const PathWitness& P2);

// First pair of disjoint subpaths of C inducing a Dirac decomposition, in
// order of |V(P1)| + |V(P2)|, then position on C.
std::optional<DiracDecomposition> find_dirac_decomposition(const Graph& g, const CycleWitness& C);

// Vertex cover of size <= limit, smallest found first; nullopt when none
// exists (or the search budget ran out, see `exhausted`).
struct CoverSearch {
    std::optional<std::vector<Vertex>> cover;
    bool exhausted = false;
};
CoverSearch bounded_vertex_cover(const Graph& g, std::size_t limit, std::uint64_t budget = 2'000'000);

struct CycleOutcome {
    enum class Kind { longer_cycle, vertex_cover, decomposition, inconclusive };
    Kind kind = Kind::inconclusive;
    std::optional<CycleWitness> cycle;
    std::vector<Vertex> cover;
    std::optional<DiracDecomposition> decomposition;
};
std::string to_string(CycleOutcome::Kind kind);

// Longer cycle, vertex cover of size <= δ+2k, or a Dirac decomposition for
// C. Requires g 2-connected, δ >= 12, 0 < k <= δ/24, 2k+12 <= δ < n/2 and
// C non-hamiltonian of length < 2δ+k. Inconclusive only above the exact
// threshold.
CycleOutcome enlarge_or_decompose_cycle(const Graph& g, const CycleWitness& C, std::size_t k,
                                        ExactOptions options = {});

// Cycle of length >= min(2δ, n) in a 2-connected graph.
CycleWitness dirac_cycle(const Graph& g, ExactOptions options = {});

struct CycleRun {
    CycleWitness cycle;
    std::vector<std::string> anomalies;
};

CycleRun long_cycle_above_degree(const Graph& g, const ApproximatorHandle& oracle, ExactOptions options = {});

OracleReport approximate_long_cycle(const Graph& g, const ApproximatorHandle& oracle, ExactOptions options = {});

// Longest-path variant through a universal apex, per connected component.
OracleReport approximate_long_path(const Graph& g, const ApproximatorHandle& oracle, ExactOptions options = {});

}  // namespace longcycle
