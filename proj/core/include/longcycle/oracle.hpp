#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "longcycle/exact.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/witness.hpp"

namespace longcycle {

using CycleResult = std::optional<CycleWitness>;  // nullopt: acyclic

// A black-box longest-cycle approximator with its guarantee f. The stored
// guarantee is clamped to min(x, f(x)).
class ApproximatorHandle {
public:
    ApproximatorHandle(std::string name, std::function<CycleResult(const Graph&)> invoke,
                       std::function<double(double)> guarantee);

    // Returned cycles are validated against g.
    CycleResult invoke(const Graph& g) const;
    double guarantee(double x) const;
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<CycleResult(const Graph&)> invoke_;
    std::function<double(double)> f_;
};

// f = identity. Accepts graphs up to `threshold` vertices.
ApproximatorHandle make_exact_oracle(std::size_t threshold = kMaxExactOrder);
// DFS back-edge cycles improved by detours; guarantee min(x, 3).
ApproximatorHandle make_dfs_heuristic_oracle();
ApproximatorHandle make_oracle(const std::string& name, std::size_t exact_threshold = kMaxExactOrder);

struct DecompressionCheck {
    std::size_t compressed_length = 0;  // r
    std::size_t result_length = 0;
    std::size_t delta_st = 0;
    double bound() const { return static_cast<double>(delta_st) + static_cast<double>(compressed_length) / 8.0 - 3.0; }
    bool holds() const { return static_cast<double>(result_length) >= bound(); }
};

struct OracleReport {
    std::variant<PathWitness, CycleWitness> witness;
    std::optional<std::size_t> exact_optimum;
    std::optional<long> offset_k;
    std::optional<DecompressionCheck> decompression;

    std::size_t length() const;
};

}  // namespace longcycle
