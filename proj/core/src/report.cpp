#include "longcycle/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "json.hpp"
#include "longcycle/connectivity.hpp"
#include "longcycle/dirac.hpp"
#include "longcycle/st_path.hpp"

namespace longcycle {

std::string to_string(RunMode mode) {
    switch (mode) {
        case RunMode::cycle: return "cycle";
        case RunMode::st_path: return "st_path";
        case RunMode::path: return "path";
    }
    return "?";
}

RunMode run_mode_from_string(const std::string& name) {
    if (name == "cycle") return RunMode::cycle;
    if (name == "st_path") return RunMode::st_path;
    if (name == "path") return RunMode::path;
    throw Error("unknown mode '" + name + "'");
}

std::string to_json_line(const RunReport& r) {
    using nlohmann::ordered_json;
    auto opt = [](const auto& x) { return x ? ordered_json(*x) : ordered_json(nullptr); };
    ordered_json j;
    j["instance_id"] = r.instance_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["delta_st"] = opt(r.delta_st);
    j["oracle"] = r.oracle;
    j["witness_length"] = opt(r.witness_length);
    j["exact_optimum"] = opt(r.exact_optimum);
    j["offset_k"] = opt(r.offset_k);
    j["floor"] = r.floor;
    j["floor_satisfied"] = r.floor_satisfied;
    j["wall_time_ms"] = r.wall_time_ms;
    if (r.error) j["error"] = *r.error;
    return j.dump();
}

std::string to_json_lines(const std::vector<RunReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += to_json_line(r) + "\n";
    return out;
}

double guarantee_floor(RunMode mode, const RunReport& r, const ApproximatorHandle& oracle, bool connected) {
    const double delta = static_cast<double>(r.delta);
    const double n = static_cast<double>(r.n);
    std::optional<double> fk;
    if (r.offset_k) fk = oracle.guarantee(static_cast<double>(std::max(*r.offset_k, 0L)));
    switch (mode) {
        case RunMode::cycle: {
            double floor = std::min(2 * delta, n);
            if (fk) floor = std::max(floor, 2 * delta + *fk / 128.0 - 8.0);
            return floor;
        }
        case RunMode::st_path: {
            const double dst = static_cast<double>(r.delta_st.value_or(0));
            double floor = dst;
            if (fk) floor = std::max(floor, dst + *fk / 32.0 - 3.0);
            return floor;
        }
        case RunMode::path: {
            if (!connected) return delta;
            double floor = std::min(2 * delta, n - 1);
            if (fk) floor = std::max(floor, 2 * delta + *fk / 128.0 - 8.0);
            return floor;
        }
    }
    return 0.0;
}

RunReport run_instance(const CorpusEntry& entry, const ApproximatorHandle& oracle, RunMode mode,
                       const RunOptions& options) {
    const Graph& g = entry.instance.graph;
    RunReport r;
    r.instance_id = entry.id;
    r.n = g.order();
    r.m = g.size();
    r.delta = g.empty() ? 0 : min_degree(g);
    r.oracle = oracle.name();
    const auto start = std::chrono::steady_clock::now();
    try {
        Vertex s = 0, t = 0;
        if (mode == RunMode::st_path) {
            if (g.order() < 2) throw Error("st_path mode needs two vertices");
            std::tie(s, t) = entry.instance.st.value_or(std::pair{g.vertices().front(), g.vertices().back()});
            r.delta_st = min_degree_without(g, {s, t});
        }
        OracleReport rep;
        Validation valid;
        switch (mode) {
            case RunMode::cycle:
                rep = approximate_long_cycle(g, oracle, options.exact);
                valid = validate_witness(g, std::get<CycleWitness>(rep.witness));
                break;
            case RunMode::st_path:
                rep = approximate_long_st_path(g, s, t, oracle, options.exact);
                valid = validate_st_path(g, std::get<PathWitness>(rep.witness), s, t);
                break;
            case RunMode::path:
                rep = approximate_long_path(g, oracle, options.exact);
                valid = validate_witness(g, std::get<PathWitness>(rep.witness));
                break;
        }
        if (!valid) throw Error("invalid witness: " + valid.violation);
        r.witness_length = rep.length();
        r.exact_optimum = rep.exact_optimum;
        r.offset_k = rep.offset_k;
        if (r.exact_optimum && *r.witness_length > *r.exact_optimum)
            throw Error("witness longer than the exact optimum");
        if (rep.decompression && !rep.decompression->holds())
            throw Error("decompressed path below δst + r/8 - 3");
        r.floor = guarantee_floor(mode, r, oracle, mode != RunMode::path || is_connected(g));
        r.floor_satisfied = static_cast<double>(*r.witness_length) >= r.floor;
    } catch (const std::exception& e) {
        r.error = e.what();
        r.floor_satisfied = false;
    }
    if (options.timing)
        r.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

std::vector<RunReport> run_all(std::size_t count, std::size_t jobs, const std::function<RunReport(std::size_t)>& one) {
    std::vector<RunReport> out(count);
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = one(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace

namespace {

// Full exact oracle up to the threshold; above it the oracle is capped so
// the pipeline falls back to its heuristics instead of searching forever.
struct Oracles {
    ApproximatorHandle full;
    ApproximatorHandle capped;

    Oracles(const std::string& name, const ExactOptions& exact)
        : full(make_oracle(name)), capped(make_oracle(name, exact.threshold)) {}
    const ApproximatorHandle& pick(const Graph& g, const ExactOptions& exact) const {
        return g.order() <= exact.threshold ? full : capped;
    }
};

}  // namespace

std::vector<RunReport> run_experiment(const std::vector<CorpusEntry>& corpus, const std::string& oracle,
                                      RunMode mode, const RunOptions& options) {
    const Oracles oracles(oracle, options.exact);
    return run_all(corpus.size(), options.jobs, [&](std::size_t i) {
        return run_instance(corpus[i], oracles.pick(corpus[i].instance.graph, options.exact), mode, options);
    });
}

std::vector<RunReport> run_experiment(const std::vector<InstanceSpec>& corpus, const std::string& oracle,
                                      RunMode mode, const RunOptions& options) {
    const Oracles oracles(oracle, options.exact);
    return run_all(corpus.size(), options.jobs, [&](std::size_t i) {
        CorpusEntry entry{corpus[i].id(), {}};
        try {
            entry.instance = generate(corpus[i]);
        } catch (const std::exception& e) {
            RunReport r;
            r.instance_id = entry.id;
            r.oracle = oracles.full.name();
            r.error = e.what();
            return r;
        }
        return run_instance(entry, oracles.pick(entry.instance.graph, options.exact), mode, options);
    });
}

bool all_hold(const std::vector<RunReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const RunReport& r) { return r.ok(); });
}

}  // namespace longcycle
