#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

enum class Family { random_2connected, two_triangle_eg, dirac_family, cover_bounded, complete, cycle, petersen, barbell };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

// params per family:
//   random_2connected  n, chord percent (default 20)
//   two_triangle_eg    block size b >= 3
//   dirac_family       clique size m >= 3, clique count >= 2
//   cover_bounded      a, b with 1 <= a <= b (K_{a,b})
//   complete / cycle   n
//   petersen           none
//   barbell            clique size m >= 3, bridge length >= 1
struct InstanceSpec {
    Family family = Family::complete;
    std::vector<int> params;
    std::uint64_t seed = 0;

    // "family:p1,p2@seed"; the seed part only for random families.
    std::string id() const;
    static InstanceSpec parse(const std::string& text);
};

struct Instance {
    Graph graph;
    std::optional<std::pair<Vertex, Vertex>> st;
    std::vector<Vertex> cover;  // cover_bounded only
};

Instance generate(const InstanceSpec& spec);

}  // namespace longcycle
