#include <gtest/gtest.h>

#include <random>

#include "longcycle/connectivity.hpp"
#include "longcycle/generators.hpp"
#include "longcycle/st_path.hpp"
#include "planted.hpp"
#include "support.hpp"

using namespace longcycle;

namespace {

Graph make(const std::string& id) { return generate(InstanceSpec::parse(id)).graph; }

}  // namespace

TEST(NestedCompress, SingleTripleKeepsGraph) {
    Graph g = complete_graph(6);
    auto d = build_nested_decomposition(g, 1, 2);
    auto c = nested_compress(d);
    EXPECT_EQ(c.H, g);
    EXPECT_TRUE(c.marked.empty());
    EXPECT_TRUE(c.log.records.empty());
}

TEST(NestedCompress, SingleEdgeConnectorsContracted) {
    Graph g = make("two_triangle_eg:22");
    auto d = build_nested_decomposition(g, 1, 2);
    ASSERT_EQ(d.triples.size(), 3u);
    auto c = nested_compress(d);
    EXPECT_EQ(c.contracted, (std::vector<char>{0, 1, 1}));
    ASSERT_EQ(c.marked.size(), 2u);
    for (const auto& m : c.marked) {
        EXPECT_FALSE(d.triples[m.triple].decomposed);
        EXPECT_EQ(m.a, d.triples[m.triple].s);
        EXPECT_EQ(m.b, d.triples[m.triple].t);
    }
    EXPECT_EQ(c.H.order(), 2u);
    EXPECT_EQ(c.H.size(), 1u);
    EXPECT_NE(c.rep_of(1), c.rep_of(2));
}

TEST(NestedCompress, LongerConnectorsPreventContraction) {
    Graph g = planted::linked_pair(28);
    auto d = build_nested_decomposition(g, 1, 2);
    ASSERT_EQ(d.triples.size(), 3u);
    auto c = nested_compress(d);
    EXPECT_EQ(c.contracted, (std::vector<char>{0, 0, 0}));
    EXPECT_TRUE(c.log.records.empty());
    EXPECT_EQ(c.marked.size(), 2u);
    EXPECT_EQ(c.H.order(), 6u);
}

TEST(NestedDecompress, ExpandsMarkedEdges) {
    Graph g = make("two_triangle_eg:22");
    auto d = build_nested_decomposition(g, 1, 2);
    auto c = nested_compress(d);
    PathWitness Q{{c.rep_of(1), c.rep_of(2)}};
    PathWitness R = nested_decompress(d, c, Q);
    EXPECT_TRUE(validate_st_path(g, R, 1, 2));
    EXPECT_GE(static_cast<double>(R.length()), min_degree_without(g, {1, 2}) + 1.0 / 8.0 - 3.0);
}

TEST(NestedDecompress, RejectsPathOutsideH) {
    Graph g = make("two_triangle_eg:22");
    auto d = build_nested_decomposition(g, 1, 2);
    auto c = nested_compress(d);
    EXPECT_THROW(nested_decompress(d, c, PathWitness{{1, 3, 2}}), Error);
}

TEST(NestedDecompress, IdentityWithoutCompression) {
    Graph g = complete_graph(6);
    auto d = build_nested_decomposition(g, 1, 2);
    auto c = nested_compress(d);
    PathWitness Q{{1, 4, 2}};
    EXPECT_EQ(nested_decompress(d, c, Q), Q);
}

TEST(LongNestedPath, CompleteGraph) {
    auto d = build_nested_decomposition(complete_graph(6), 1, 2);
    auto r = long_nested_st_path(d, make_exact_oracle());
    EXPECT_EQ(r.path.length(), 5u);
    EXPECT_FALSE(r.decompression);
}

TEST(LongNestedPath, CompressedFamilies) {
    for (const Graph& g : {make("two_triangle_eg:22"), planted::linked_pair(28)}) {
        auto d = build_nested_decomposition(g, 1, 2);
        auto r = long_nested_st_path(d, make_exact_oracle());
        EXPECT_TRUE(validate_st_path(g, r.path, 1, 2));
        ASSERT_TRUE(r.decompression);
        EXPECT_TRUE(r.decompression->holds());
        // Longest (s,t)-path runs through one clique and its entry.
        EXPECT_EQ(r.path.length(), g.order() == 46 ? 23u : 31u);
    }
}

TEST(ApproximateStPath, Examples) {
    auto oracle = make_exact_oracle();
    auto c6 = approximate_long_st_path(cycle_graph(6), 1, 4, oracle);
    EXPECT_EQ(c6.length(), 3u);
    EXPECT_EQ(c6.exact_optimum, 3u);
    EXPECT_EQ(c6.offset_k, 2);

    Graph p = petersen_graph();
    auto pr = approximate_long_st_path(p, 1, 2, oracle);
    EXPECT_EQ(pr.exact_optimum, static_cast<std::size_t>(support::brute_longest_st_path_length(p, 1, 2)));
    const double dst = static_cast<double>(min_degree_without(p, {1, 2}));
    EXPECT_GE(static_cast<double>(pr.length()), dst + static_cast<double>(*pr.offset_k) / 32.0 - 3.0);

    Graph two = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {3, 4}});
    EXPECT_THROW(approximate_long_st_path(two, 1, 3, oracle), Error);
    EXPECT_THROW(approximate_long_st_path(cycle_graph(5), 1, 1, oracle), Error);
}

TEST(ApproximateStPath, GuaranteeOnRandomGraphs) {
    std::mt19937_64 rng(20261019);
    auto exact = make_exact_oracle();
    auto heuristic = make_dfs_heuristic_oracle();
    for (int round = 0; round < 150; ++round) {
        const int n = 4 + static_cast<int>(support::draw(rng, 10));
        Graph g = support::random_two_connected(n, 10 + static_cast<int>(support::draw(rng, 60)), rng);
        const Vertex s = 1 + static_cast<Vertex>(support::draw(rng, n));
        Vertex t = 1 + static_cast<Vertex>(support::draw(rng, n - 1));
        if (t >= s) ++t;
        const int opt = support::brute_longest_st_path_length(g, s, t);
        const double dst = static_cast<double>(min_degree_without(g, {s, t}));
        auto r = approximate_long_st_path(g, s, t, exact);
        ASSERT_TRUE(validate_st_path(g, std::get<PathWitness>(r.witness), s, t));
        ASSERT_EQ(r.exact_optimum, static_cast<std::size_t>(opt));
        EXPECT_GE(static_cast<double>(r.length()), dst + (opt - dst) / 32.0 - 3.0);
        auto h = approximate_long_st_path(g, s, t, heuristic);
        ASSERT_TRUE(validate_st_path(g, std::get<PathWitness>(h.witness), s, t));
        EXPECT_GE(static_cast<double>(h.length()), dst - 2.0);
    }
}
