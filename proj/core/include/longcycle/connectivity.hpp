#pragma once

#include <optional>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

struct ConnectivityProfile {
    std::vector<std::vector<Vertex>> components;
    bool two_connected = false;
};

// Components of g - removed; the flag is computed on g itself.
ConnectivityProfile connectivity_profile(const Graph& g, const std::vector<Vertex>& removed = {});

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<Vertex>& removed = {});
bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);

struct BlockTree {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;
    std::vector<std::size_t> leaf_blocks;
    std::vector<std::vector<Vertex>> inner_vertices;

    bool is_cut(Vertex v) const;
    bool is_leaf(std::size_t block) const;
    // The cut vertex of a leaf block; empty when the graph is one block.
    std::optional<Vertex> leaf_cut_vertex(std::size_t block) const;
    std::vector<std::size_t> blocks_containing(Vertex v) const;
};

BlockTree block_cut_tree(const Graph& g);

}  // namespace longcycle
