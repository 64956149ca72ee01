#include "longcycle/connectivity.hpp"

#include <algorithm>
#include <utility>

namespace longcycle {

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<Vertex>& removed) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    for (Vertex v : removed)
        if (g.has_vertex(v)) seen[g.index_of(v)] = 1;
    std::vector<std::vector<Vertex>> out;
    std::vector<std::size_t> stack;
    for (std::size_t r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::vector<Vertex> comp;
        seen[r] = 1;
        stack.push_back(r);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            comp.push_back(g.label(x));
            for (std::size_t y : g.adj(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

namespace {

struct Biconnected {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<char> cut;
};

// Iterative Hopcroft-Tarjan over all components.
Biconnected biconnected(const Graph& g) {
    const std::size_t n = g.order();
    Biconnected out;
    out.cut.assign(n, 0);
    std::vector<std::size_t> disc(n, 0), low(n, 0), parent(n, n), it(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> estack;
    std::size_t timer = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root]) continue;
        if (g.adj(root).empty()) {
            out.blocks.push_back({root});
            disc[root] = ++timer;
            continue;
        }
        std::size_t root_children = 0;
        std::vector<std::size_t> stack{root};
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            if (it[x] < g.adj(x).size()) {
                std::size_t y = g.adj(x)[it[x]++];
                if (!disc[y]) {
                    parent[y] = x;
                    disc[y] = low[y] = ++timer;
                    estack.emplace_back(x, y);
                    if (x == root) ++root_children;
                    stack.push_back(y);
                } else if (y != parent[x] && disc[y] < disc[x]) {
                    estack.emplace_back(x, y);
                    low[x] = std::min(low[x], disc[y]);
                }
                continue;
            }
            stack.pop_back();
            if (stack.empty()) break;
            std::size_t p = stack.back();
            low[p] = std::min(low[p], low[x]);
            if (low[x] >= disc[p]) {
                if (p != root) out.cut[p] = 1;
                std::vector<std::size_t> block;
                while (true) {
                    auto e = estack.back();
                    estack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e.first == p && e.second == x) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
        if (root_children > 1) out.cut[root] = 1;
    }
    return out;
}

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& g) {
    auto bc = biconnected(g);
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (bc.cut[i]) out.push_back(g.label(i));
    return out;
}

bool is_two_connected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    auto bc = biconnected(g);
    return std::none_of(bc.cut.begin(), bc.cut.end(), [](char c) { return c != 0; });
}

ConnectivityProfile connectivity_profile(const Graph& g, const std::vector<Vertex>& removed) {
    for (Vertex v : removed)
        if (!g.has_vertex(v)) throw Error("removed vertex " + std::to_string(v) + " not in graph");
    return {connected_components(g, removed), is_two_connected(g)};
}

bool BlockTree::is_cut(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

bool BlockTree::is_leaf(std::size_t block) const {
    return std::find(leaf_blocks.begin(), leaf_blocks.end(), block) != leaf_blocks.end();
}

std::optional<Vertex> BlockTree::leaf_cut_vertex(std::size_t block) const {
    for (Vertex v : blocks[block])
        if (is_cut(v)) return v;
    return std::nullopt;
}

std::vector<std::size_t> BlockTree::blocks_containing(Vertex v) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) out.push_back(b);
    return out;
}

BlockTree block_cut_tree(const Graph& g) {
    if (g.empty() || !is_connected(g)) throw Error("graph not connected");
    auto bc = biconnected(g);
    BlockTree t;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (bc.cut[i]) t.cut_vertices.push_back(g.label(i));
    std::sort(bc.blocks.begin(), bc.blocks.end());
    for (const auto& b : bc.blocks) {
        std::vector<Vertex> labels, inner;
        std::size_t cuts = 0;
        for (std::size_t x : b) {
            labels.push_back(g.label(x));
            if (bc.cut[x])
                ++cuts;
            else
                inner.push_back(g.label(x));
        }
        if (cuts <= 1) t.leaf_blocks.push_back(t.blocks.size());
        t.blocks.push_back(std::move(labels));
        t.inner_vertices.push_back(std::move(inner));
    }
    return t;
}

}  // namespace longcycle
