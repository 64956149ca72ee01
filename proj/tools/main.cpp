#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "longcycle/connectivity.hpp"
#include "longcycle/dirac.hpp"
#include "longcycle/eg_decomposition.hpp"
#include "longcycle/export.hpp"
#include "longcycle/generators.hpp"
#include "longcycle/io.hpp"
#include "longcycle/report.hpp"

using namespace longcycle;

namespace {

struct Globals {
    std::optional<std::uint64_t> seed;
    std::string oracle = "exact";
    std::size_t exact_threshold = kDefaultExactThreshold;
    std::string format = "json";
    std::string out;
    std::size_t jobs = 1;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw Error("cannot write " + g.out);
    f << text;
}

InstanceSpec spec_of(const Globals& g, const std::string& text) {
    InstanceSpec spec = InstanceSpec::parse(text);
    if (g.seed) spec.seed = *g.seed;
    return spec;
}

// A graph file (optionally carrying "# st u v") or an instance spec.
CorpusEntry load(const Globals& g, const std::string& input) {
    if (input == "-" || std::filesystem::is_regular_file(input)) {
        std::stringstream buf;
        if (input == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream f(input);
            buf << f.rdbuf();
        }
        CorpusEntry e{input, {parse_graph(buf.str()), std::nullopt, {}}};
        std::string line;
        std::istringstream lines(buf.str());
        while (std::getline(lines, line)) {
            std::istringstream words(line);
            std::string hash, tag;
            Vertex s = 0, t = 0;
            if (words >> hash >> tag >> s >> t && hash == "#" && tag == "st") e.instance.st = {{s, t}};
        }
        return e;
    }
    const InstanceSpec spec = spec_of(g, input);
    return {spec.id(), generate(spec)};
}

std::pair<Vertex, Vertex> endpoints(const CorpusEntry& e, std::optional<Vertex> s, std::optional<Vertex> t) {
    const auto& vs = e.instance.graph.vertices();
    if (vs.size() < 2) throw Error("need at least two vertices");
    auto st = e.instance.st.value_or(std::pair{vs.front(), vs.back()});
    if (s) st.first = *s;
    if (t) st.second = *t;
    return st;
}

std::vector<Vertex> vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

int approximate(const Globals& g, const std::vector<std::string>& inputs, RunMode mode, std::optional<Vertex> s,
                std::optional<Vertex> t) {
    if (g.format != "json") throw Error("reports are JSON lines only");
    const RunOptions options{ExactOptions{g.exact_threshold}, g.jobs, true};
    std::vector<CorpusEntry> corpus;
    std::vector<std::optional<std::string>> load_errors;
    for (const auto& in : inputs) {
        try {
            corpus.push_back(load(g, in));
            if (mode == RunMode::st_path && (s || t)) corpus.back().instance.st = endpoints(corpus.back(), s, t);
            load_errors.push_back(std::nullopt);
        } catch (const std::exception& e) {
            corpus.push_back({in, {}});
            load_errors.push_back(e.what());
        }
    }
    auto reports = run_experiment(corpus, g.oracle, mode, options);
    for (std::size_t i = 0; i < reports.size(); ++i)
        if (load_errors[i]) {
            reports[i] = RunReport{};
            reports[i].instance_id = inputs[i];
            reports[i].oracle = g.oracle;
            reports[i].error = *load_errors[i];
        }
    emit(g, to_json_lines(reports));
    return all_hold(reports) ? 0 : 1;
}

std::vector<InstanceSpec> bench_corpus(std::uint64_t seed, std::size_t count) {
    std::vector<InstanceSpec> corpus;
    for (const char* id : {"complete:8", "cycle:9", "petersen", "two_triangle_eg:3", "dirac_family:4,3",
                           "cover_bounded:3,6"})
        corpus.push_back(InstanceSpec::parse(id));
    for (std::size_t i = 0; i < count; ++i) {
        InstanceSpec spec;
        spec.family = Family::random_2connected;
        spec.params = {6 + static_cast<int>((seed + i) % 13), 10 + static_cast<int>((seed + 3 * i) % 40)};
        spec.seed = seed + i;
        corpus.push_back(spec);
    }
    return corpus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long cycles and (s,t)-paths above the degree bound"};
    app.require_subcommand(1);
    Globals g;
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "Seed for random families (overrides spec seeds)");
    app.add_option("--oracle", g.oracle, "Longest-cycle oracle")
        ->check(CLI::IsMember({"exact", "dfs-heuristic"}));
    app.add_option("--exact-threshold", g.exact_threshold, "Largest order solved exactly")
        ->check(CLI::Range(std::size_t{1}, kMaxExactOrder));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_option("--out", g.out, "Write output to FILE instead of stdout");
    app.add_option("--jobs", g.jobs, "Instances processed concurrently")->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string spec_text;
    auto* gen = app.add_subcommand("gen", "Generate an instance in graph text format");
    gen->add_option("spec", spec_text, "family:p1,p2[@seed]")->required();

    std::string graph_in, cycle_text, path_text;
    std::optional<Vertex> s, t;
    auto* validate = app.add_subcommand("validate", "Check a graph file and optionally a witness");
    validate->add_option("graph", graph_in, "Graph file or instance spec")->required();
    validate->add_option("--cycle", cycle_text, "Comma-separated cycle");
    validate->add_option("--path", path_text, "Comma-separated path");

    std::string kind = "eg";
    auto* decompose = app.add_subcommand("decompose", "Nested Erdős–Gallai or Dirac decomposition");
    decompose->add_option("graph", graph_in, "Graph file or instance spec")->required();
    decompose->add_option("--kind", kind, "Decomposition kind")->check(CLI::IsMember({"eg", "dirac"}));

    std::vector<std::string> inputs;
    auto* cyc = app.add_subcommand("approx-cycle", "Long cycle, one report per input");
    auto* stp = app.add_subcommand("approx-st-path", "Long (s,t)-path, one report per input");
    auto* pth = app.add_subcommand("approx-path", "Long path, one report per input");
    for (auto* sub : {cyc, stp, pth}) sub->add_option("inputs", inputs, "Graph files or instance specs");
    for (auto* sub : {validate, decompose, stp}) {
        sub->add_option("-s,--source", s, "Source vertex");
        sub->add_option("-t,--target", t, "Target vertex");
    }

    std::size_t count = 100;
    std::string mode = "all";
    auto* bench = app.add_subcommand("bench", "Run the seeded benchmark corpus");
    bench->add_option("--count", count, "Random instances");
    bench->add_option("--mode", mode, "Pipeline")->check(CLI::IsMember({"all", "cycle", "st_path", "path"}));

    CLI11_PARSE(app, argc, argv);
    if (*seed_opt) g.seed = seed;

    try {
        if (*gen) {
            const InstanceSpec spec = spec_of(g, spec_text);
            const Instance inst = generate(spec);
            std::string header = "# " + spec.id() + "\n";
            if (inst.st) header += "# st " + std::to_string(inst.st->first) + " " + std::to_string(inst.st->second) + "\n";
            emit(g, header + write_graph(inst.graph));
            return 0;
        }
        if (*validate) {
            const CorpusEntry e = load(g, graph_in);
            const Graph& G = e.instance.graph;
            std::string out = "{\"instance_id\":" + json_string(e.id) + ",\"n\":" + std::to_string(G.order()) +
                              ",\"m\":" + std::to_string(G.size()) +
                              ",\"delta\":" + std::to_string(G.empty() ? 0 : min_degree(G)) +
                              ",\"connected\":" + (is_connected(G) ? "true" : "false") +
                              ",\"two_connected\":" + (is_two_connected(G) ? "true" : "false");
            bool ok = true;
            if (!cycle_text.empty() || !path_text.empty()) {
                Validation v;
                if (!cycle_text.empty()) {
                    v = validate_witness(G, CycleWitness{vertex_list(cycle_text)});
                } else {
                    PathWitness p{vertex_list(path_text)};
                    v = (s || t) ? validate_st_path(G, p, s.value_or(p.front()), t.value_or(p.back()))
                                 : validate_witness(G, p);
                }
                ok = v.ok;
                out += std::string(",\"witness_valid\":") + (v.ok ? "true" : "false");
                if (!v.ok) out += ",\"violation\":" + json_string(v.violation);
            }
            emit(g, out + "}\n");
            return ok ? 0 : 1;
        }
        if (*decompose) {
            const CorpusEntry e = load(g, graph_in);
            const ExactOptions options{g.exact_threshold};
            if (kind == "eg") {
                const auto [u, v] = endpoints(e, s, t);
                const auto d = build_nested_decomposition(e.instance.graph, u, v, options);
                emit(g, g.format == "dot" ? export_dot(d) : export_json(d));
                return 0;
            }
            const CycleWitness c = dirac_cycle(e.instance.graph, options);
            const auto d = find_dirac_decomposition(e.instance.graph, c);
            if (!d) throw Error("no Dirac decomposition along a cycle of length " + std::to_string(c.length()));
            emit(g, g.format == "dot" ? export_dot(*d) : export_json(*d));
            return 0;
        }
        if (*cyc) return approximate(g, inputs, RunMode::cycle, s, t);
        if (*stp) return approximate(g, inputs, RunMode::st_path, s, t);
        if (*pth) return approximate(g, inputs, RunMode::path, s, t);
        if (*bench) {
            if (g.format != "json") throw Error("reports are JSON lines only");
            const auto corpus = bench_corpus(g.seed.value_or(1), count);
            const RunOptions options{ExactOptions{g.exact_threshold}, g.jobs, true};
            std::vector<RunMode> modes;
            if (mode == "all") modes = {RunMode::cycle, RunMode::st_path, RunMode::path};
            else modes = {run_mode_from_string(mode)};
            std::string out;
            bool ok = true;
            for (RunMode m : modes) {
                auto reports = run_experiment(corpus, g.oracle, m, options);
                ok = ok && all_hold(reports);
                out += to_json_lines(reports);
            }
            emit(g, out);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "longcycle: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
