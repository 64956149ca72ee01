#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "longcycle/exact.hpp"
#include "longcycle/generators.hpp"
#include "longcycle/oracle.hpp"

namespace longcycle {

enum class RunMode { cycle, st_path, path };
std::string to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& name);

struct RunReport {
    std::string instance_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t delta = 0;
    std::optional<std::size_t> delta_st;  // st_path mode
    std::string oracle;
    std::optional<std::size_t> witness_length;  // null when the run failed
    std::optional<std::size_t> exact_optimum;
    std::optional<long> offset_k;
    double floor = 0.0;
    bool floor_satisfied = false;
    double wall_time_ms = 0.0;
    std::optional<std::string> error;

    bool ok() const { return floor_satisfied && !error; }
};

// One JSON object, no trailing newline.
std::string to_json_line(const RunReport& r);
std::string to_json_lines(const std::vector<RunReport>& reports);

// Guarantee floor from the recorded numbers of r:
//   cycle    max(min(2δ, n), 2δ + f(k)/128 - 8)
//   st_path  max(δst, δst + f(k)/32 - 3)
//   path     max(min(2δ, n-1), 2δ + f(k)/128 - 8) when connected, δ otherwise
// with k clamped at 0; the k term only when offset_k is known.
double guarantee_floor(RunMode mode, const RunReport& r, const ApproximatorHandle& oracle, bool connected = true);

struct RunOptions {
    ExactOptions exact;
    std::size_t jobs = 1;
    bool timing = true;  // false: wall_time_ms stays 0
};

struct CorpusEntry {
    std::string id;
    Instance instance;
};

// s,t default to instance.st, else the smallest and largest label.
RunReport run_instance(const CorpusEntry& entry, const ApproximatorHandle& oracle, RunMode mode,
                       const RunOptions& options = {});

// Reports in corpus order. Above the exact threshold the exact oracle is
// capped at the threshold.
// Per-instance failures (generation included) are
// recorded in the report's error field.
std::vector<RunReport> run_experiment(const std::vector<InstanceSpec>& corpus, const std::string& oracle,
                                      RunMode mode, const RunOptions& options = {});
std::vector<RunReport> run_experiment(const std::vector<CorpusEntry>& corpus, const std::string& oracle,
                                      RunMode mode, const RunOptions& options = {});

bool all_hold(const std::vector<RunReport>& reports);

}  // namespace longcycle
