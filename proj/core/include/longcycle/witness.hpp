#pragma once

#include <string>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

struct PathWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    bool contains(Vertex v) const;
    PathWitness reversed() const;

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct CycleWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    bool contains(Vertex v) const;

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct Validation {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
    static Validation pass() { return {}; }
    static Validation fail(std::string why) { return {false, std::move(why)}; }
};

Validation validate_witness(const Graph& g, const PathWitness& w);
Validation validate_witness(const Graph& g, const CycleWitness& w);
// Additionally checks the endpoints.
Validation validate_st_path(const Graph& g, const PathWitness& w, Vertex s, Vertex t);

// Rotates to the smallest vertex and orients so the second entry is smaller
// than the last.
CycleWitness canonical_cycle(CycleWitness c);

}  // namespace longcycle
