#include "longcycle/contraction.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace longcycle {

ContractionState::ContractionState(const Graph& original) : original_(&original) {
    for (Vertex v : original.vertices()) {
        auto nb = original.neighbors(v);
        adj_[v] = std::set<Vertex>(nb.begin(), nb.end());
        owner_[v] = v;
    }
}

bool ContractionState::adjacent(Vertex a, Vertex b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
}

std::optional<Vertex> ContractionState::rep(Vertex original) const {
    auto it = owner_.find(original);
    if (it == owner_.end()) return std::nullopt;
    return it->second;
}

std::vector<Vertex> ContractionState::bag(Vertex current) const {
    std::vector<Vertex> out;
    for (const auto& [orig, cur] : owner_)
        if (cur == current) out.push_back(orig);
    return out;
}

void ContractionState::contract(Vertex a, Vertex b) {
    if (!adjacent(a, b)) throw Error("cannot contract missing edge " + to_string(Edge(a, b)));
    Vertex keep = std::min(a, b);
    Vertex drop = std::max(a, b);
    auto keep_bag = bag(keep);
    auto drop_bag = bag(drop);
    std::optional<Edge> witness;
    for (Vertex x : keep_bag) {
        for (Vertex y : drop_bag)
            if (original_->adjacent(x, y)) {
                Edge e(x, y);
                if (!witness || e < *witness) witness = e;
            }
    }
    if (!witness) throw Error("no original edge behind " + to_string(Edge(a, b)));
    for (Vertex y : adj_[drop]) {
        adj_[y].erase(drop);
        if (y != keep) {
            adj_[y].insert(keep);
            adj_[keep].insert(y);
        }
    }
    adj_.erase(drop);
    for (Vertex y : drop_bag) owner_[y] = keep;
    log_.records.push_back({keep, drop, *witness});
}

void ContractionState::remove_vertex(Vertex v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("unknown vertex " + std::to_string(v));
    for (Vertex y : it->second) adj_[y].erase(v);
    adj_.erase(it);
    for (auto o = owner_.begin(); o != owner_.end();)
        o = (o->second == v) ? owner_.erase(o) : std::next(o);
}

Graph ContractionState::current() const {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (const auto& [v, nb] : adj_) {
        vs.push_back(v);
        for (Vertex y : nb)
            if (v < y) es.emplace_back(v, y);
    }
    return Graph::from_edges(vs, es);
}

std::pair<Graph, ContractionLog> contract_edges(const Graph& g, const std::vector<Edge>& edges) {
    ContractionState st(g);
    for (const Edge& e : edges) {
        if (!st.present(e.u) || !st.present(e.v) || !st.adjacent(e.u, e.v))
            throw Error("edge " + to_string(e) + " not present at contraction time");
        st.contract(e.u, e.v);
    }
    return {st.current(), st.log()};
}

namespace {

struct Bag {
    std::vector<Vertex> members;
    std::vector<Edge> tree;
};

std::vector<Vertex> tree_path(const Bag& bag, Vertex from, Vertex to) {
    if (from == to) return {from};
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : bag.tree) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::map<Vertex, Vertex> prev;
    std::queue<Vertex> q;
    q.push(from);
    prev[from] = from;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : adj[x])
            if (!prev.count(y)) {
                prev[y] = x;
                q.push(y);
            }
    }
    if (!prev.count(to)) throw Error("contraction bag is not connected");
    std::vector<Vertex> out{to};
    while (out.back() != from) out.push_back(prev[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

struct Step {
    long long score = std::numeric_limits<long long>::min();
    std::size_t prev_exit = 0;  // index into previous bag members
    std::size_t entry = 0;      // index into this bag's members
    int realisation = -1;       // -1 plain edge, otherwise virtual edge index
    bool virtual_reversed = false;
};

}  // namespace

PathWitness reverse(const Graph& original, const ContractionLog& log, const PathWitness& path,
                    const LiftOptions& options) {
    if (path.vertices.empty()) throw Error("empty path");
    {
        std::set<Vertex> seen(path.vertices.begin(), path.vertices.end());
        if (seen.size() != path.vertices.size()) throw Error("path invalid: vertices not distinct");
    }
    std::map<Vertex, Bag> bags;
    auto bag_of = [&](Vertex v) -> Bag& {
        auto it = bags.find(v);
        if (it == bags.end()) it = bags.emplace(v, Bag{{v}, {}}).first;
        return it->second;
    };
    for (const auto& rec : log.records) {
        Bag dropped = bag_of(rec.removed);
        bags.erase(rec.removed);
        Bag& keep = bag_of(rec.survivor);
        keep.members.insert(keep.members.end(), dropped.members.begin(), dropped.members.end());
        keep.tree.insert(keep.tree.end(), dropped.tree.begin(), dropped.tree.end());
        keep.tree.push_back(rec.original_edge);
    }
    std::vector<Bag> seq;
    for (Vertex v : path.vertices) {
        Bag b = bag_of(v);
        std::sort(b.members.begin(), b.members.end());
        for (Vertex x : b.members)
            if (!original.has_vertex(x)) throw Error("path invalid: unknown vertex " + std::to_string(x));
        seq.push_back(std::move(b));
    }

    const std::size_t r = seq.size();
    std::vector<std::vector<std::vector<long long>>> dist(r);
    for (std::size_t k = 0; k < r; ++k) {
        const auto& mem = seq[k].members;
        dist[k].assign(mem.size(), std::vector<long long>(mem.size(), 0));
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = 0; j < mem.size(); ++j)
                dist[k][i][j] = static_cast<long long>(tree_path(seq[k], mem[i], mem[j]).size()) - 1;
    }
    auto allowed_entry = [&](std::size_t k, Vertex x) {
        return k != 0 || !options.first || *options.first == x;
    };
    auto allowed_exit = [&](std::size_t k, Vertex x) {
        return k + 1 != r || !options.last || *options.last == x;
    };

    // best[k][x]: best score with exit vertex members[x] at position k.
    std::vector<std::vector<Step>> best(r);
    best[0].assign(seq[0].members.size(), Step{});
    for (std::size_t e = 0; e < seq[0].members.size(); ++e) {
        if (!allowed_entry(0, seq[0].members[e])) continue;
        for (std::size_t x = 0; x < seq[0].members.size(); ++x) {
            long long sc = dist[0][e][x];
            if (sc > best[0][x].score) best[0][x] = Step{sc, 0, e, -1, false};
        }
    }
    for (std::size_t k = 1; k < r; ++k) {
        const auto& prev = seq[k - 1].members;
        const auto& cur = seq[k].members;
        best[k].assign(cur.size(), Step{});
        bool any_link = false;
        for (std::size_t px = 0; px < prev.size(); ++px) {
            if (best[k - 1][px].score == std::numeric_limits<long long>::min()) continue;
            for (std::size_t e = 0; e < cur.size(); ++e) {
                struct Option {
                    long long w;
                    int idx;
                    bool rev;
                };
                std::vector<Option> opts;
                if (original.adjacent(prev[px], cur[e])) opts.push_back({1, -1, false});
                for (std::size_t vi = 0; vi < options.virtual_edges.size(); ++vi) {
                    const auto& ve = options.virtual_edges[vi];
                    long long w = static_cast<long long>(ve.expansion.length());
                    if (ve.a == prev[px] && ve.b == cur[e]) opts.push_back({w, static_cast<int>(vi), false});
                    if (ve.b == prev[px] && ve.a == cur[e]) opts.push_back({w, static_cast<int>(vi), true});
                }
                for (const auto& o : opts) {
                    any_link = true;
                    for (std::size_t x = 0; x < cur.size(); ++x) {
                        long long sc = best[k - 1][px].score + o.w + dist[k][e][x];
                        if (sc > best[k][x].score) best[k][x] = Step{sc, px, e, o.idx, o.rev};
                    }
                }
            }
        }
        if (!any_link)
            throw Error("path invalid: no edge between " + std::to_string(path.vertices[k - 1]) +
                        " and " + std::to_string(path.vertices[k]));
    }
    std::optional<std::size_t> end;
    for (std::size_t x = 0; x < seq[r - 1].members.size(); ++x) {
        if (!allowed_exit(r - 1, seq[r - 1].members[x])) continue;
        if (best[r - 1][x].score == std::numeric_limits<long long>::min()) continue;
        if (!end || best[r - 1][x].score > best[r - 1][*end].score) end = x;
    }
    if (!end) throw Error("path cannot be lifted with the requested endpoints");

    std::vector<std::vector<Vertex>> pieces(r);
    std::size_t x = *end;
    for (std::size_t k = r; k-- > 0;) {
        const Step& st = best[k][x];
        const auto& mem = seq[k].members;
        std::vector<Vertex> piece = tree_path(seq[k], mem[st.entry], mem[x]);
        if (k > 0 && st.realisation >= 0) {
            const auto& ve = options.virtual_edges[static_cast<std::size_t>(st.realisation)];
            std::vector<Vertex> inner(ve.expansion.vertices.begin() + 1, ve.expansion.vertices.end() - 1);
            if (st.virtual_reversed) std::reverse(inner.begin(), inner.end());
            piece.insert(piece.begin(), inner.begin(), inner.end());
        }
        pieces[k] = std::move(piece);
        x = st.prev_exit;
    }
    PathWitness out;
    for (auto& p : pieces) out.vertices.insert(out.vertices.end(), p.begin(), p.end());
    return out;
}

}  // namespace longcycle
