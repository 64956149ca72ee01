#include "longcycle/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace longcycle {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t number(std::string_view f, std::size_t line_no) {
    std::int64_t x = 0;
    auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), x);
    if (ec != std::errc() || end != f.data() + f.size())
        throw Error("line " + std::to_string(line_no) + ": malformed line, expected an integer, got '" +
                    std::string(f) + "'");
    return x;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::int64_t n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto f = fields(line);
        if (f.empty()) continue;
        const std::string at = "line " + std::to_string(line_no) + ": ";
        if (f.size() != 2) throw Error(at + "malformed line, expected two integers");
        const std::int64_t a = number(f[0], line_no), b = number(f[1], line_no);
        if (n < 0) {
            if (a < 0 || b < 0) throw Error(at + "malformed header, negative count");
            n = a;
            m = b;
            continue;
        }
        if (a < 1 || a > n || b < 1 || b > n)
            throw Error(at + "vertex out of range 1.." + std::to_string(n));
        if (a == b) throw Error(at + "self-loop at " + std::to_string(a));
        Edge e(a, b);
        if (!seen.insert(e).second) throw Error(at + "duplicate edge " + to_string(e));
        if (static_cast<std::int64_t>(edges.size()) == m)
            throw Error(at + "more edges than declared (" + std::to_string(m) + ")");
        edges.push_back(e);
    }
    if (n < 0) throw Error("missing header line");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw Error("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i + 1;
    return Graph::from_edges(vs, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string write_graph(const Graph& g) {
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != static_cast<Vertex>(i + 1)) throw Error("write_graph needs labels 1..n");
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    for (const Edge& e : es) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace longcycle
