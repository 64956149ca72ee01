#include "longcycle/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "search.hpp"

namespace longcycle {

ApproximatorHandle::ApproximatorHandle(std::string name, std::function<CycleResult(const Graph&)> invoke,
                                       std::function<double(double)> guarantee)
    : name_(std::move(name)), invoke_(std::move(invoke)) {
    auto raw = std::move(guarantee);
    f_ = [raw](double x) { return std::max(0.0, std::min(x, raw(x))); };
    std::vector<double> xs;
    for (double x = 0; x <= 64; x += 0.5) xs.push_back(x);
    for (double x = 128; x <= 4096; x *= 2) xs.push_back(x);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0 && f_(xs[i]) + 1e-9 < f_(xs[i - 1]))
            throw Error("guarantee function must be non-decreasing");
        for (std::size_t j = i; j < xs.size() && xs[i] + xs[j] <= 4096; ++j)
            if (f_(xs[i] + xs[j]) > f_(xs[i]) + f_(xs[j]) + 1e-9)
                throw Error("guarantee function must be subadditive");
    }
}

CycleResult ApproximatorHandle::invoke(const Graph& g) const {
    CycleResult r = invoke_(g);
    if (r) {
        auto v = validate_witness(g, *r);
        if (!v) throw Error("oracle " + name_ + " returned an invalid cycle: " + v.violation);
    }
    return r;
}

double ApproximatorHandle::guarantee(double x) const { return f_(std::max(0.0, x)); }

ApproximatorHandle make_exact_oracle(std::size_t threshold) {
    return ApproximatorHandle(
        "exact", [threshold](const Graph& g) { return exact_longest_cycle(g, ExactOptions{threshold}); },
        [](double x) { return x; });
}

ApproximatorHandle make_dfs_heuristic_oracle() {
    return ApproximatorHandle(
        "dfs-heuristic",
        [](const Graph& g) -> CycleResult {
            detail::ImproveOptions opt;
            auto idx = detail::heuristic_long_cycle(g, opt);
            if (idx.size() < 3) return std::nullopt;
            CycleWitness c;
            for (std::size_t i : idx) c.vertices.push_back(g.label(i));
            return c;
        },
        [](double x) { return std::min(x, 3.0); });
}

ApproximatorHandle make_oracle(const std::string& name, std::size_t exact_threshold) {
    if (name == "exact") return make_exact_oracle(exact_threshold);
    if (name == "dfs-heuristic") return make_dfs_heuristic_oracle();
    throw Error("unknown oracle " + name);
}

std::size_t OracleReport::length() const {
    return std::visit([](const auto& w) { return w.length(); }, witness);
}

}  // namespace longcycle
