#include <gtest/gtest.h>

#include <random>

#include "longcycle/exact.hpp"
#include "support.hpp"

using namespace longcycle;

TEST(ExactCycle, Examples) {
    auto k4 = exact_longest_cycle(complete_graph(4));
    ASSERT_TRUE(k4);
    EXPECT_EQ(k4->length(), 4u);
    EXPECT_EQ(k4->vertices, (std::vector<Vertex>{1, 2, 3, 4}));

    Graph tree = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {1, 3}, {3, 4}});
    EXPECT_FALSE(exact_longest_cycle(tree));

    Graph p = petersen_graph();
    auto pc = exact_longest_cycle(p);
    ASSERT_TRUE(pc);
    EXPECT_EQ(static_cast<int>(pc->length()), support::brute_longest_cycle_length(p));
    EXPECT_EQ(pc->length(), 9u);
    EXPECT_TRUE(validate_witness(p, *pc));
}

TEST(ExactCycle, ThresholdEnforced) {
    try {
        exact_longest_cycle(cycle_graph(19));
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "instance too large for exact oracle");
    }
    EXPECT_EQ(exact_longest_cycle(cycle_graph(19), {19})->length(), 19u);
}

TEST(ExactCycle, LexicographicTieBreak) {
    // C4 plus a pendant triangle sharing vertex 4: cycles 1-2-3-4 and 4-5-6.
    Graph g = Graph::from_edges({1, 2, 3, 4, 5, 6},
                                {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {5, 6}, {4, 6}});
    auto c = exact_longest_cycle(g);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->vertices, (std::vector<Vertex>{1, 2, 3, 4}));
    // Among all longest cycles of K5 the canonical smallest is 1..5.
    EXPECT_EQ(exact_longest_cycle(complete_graph(5))->vertices, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(ExactStPath, Examples) {
    for (Vertex s = 1; s <= 4; ++s)
        for (Vertex t = 1; t <= 4; ++t)
            if (s != t) EXPECT_EQ(exact_longest_st_path(complete_graph(4), s, t).length(), 3u);
    EXPECT_EQ(exact_longest_st_path(path_graph(3), 1, 3).length(), 2u);
    Graph p = petersen_graph();
    auto pp = exact_longest_st_path(p, 1, 2);
    EXPECT_EQ(static_cast<int>(pp.length()), support::brute_longest_st_path_length(p, 1, 2));
    EXPECT_TRUE(validate_st_path(p, pp, 1, 2));
    EXPECT_EQ(exact_longest_st_path(complete_graph(5), 1, 5).vertices, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(ExactStPath, DisconnectedPair) {
    Graph g = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {3, 4}});
    try {
        exact_longest_st_path(g, 1, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "disconnected pair");
    }
}

TEST(ExactPath, ApexReduction) {
    EXPECT_EQ(exact_longest_path(path_graph(5)).length(), 4u);
    Graph star = Graph::from_edges({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    EXPECT_EQ(exact_longest_path(star).length(), 2u);
    EXPECT_EQ(exact_longest_path(Graph::from_edges({7}, {})).length(), 0u);
}

TEST(ExactOracles, AgreeWithSubsetDp) {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = support::random_graph(n, 20 + static_cast<int>(rng() % 60), rng);
        auto c = exact_longest_cycle(g);
        int ref = support::brute_longest_cycle_length(g);
        EXPECT_EQ(c ? static_cast<int>(c->length()) : 0, ref);
        if (c) EXPECT_TRUE(validate_witness(g, *c));
        Vertex s = g.vertices()[rng() % g.order()];
        Vertex t = g.vertices()[rng() % g.order()];
        if (s == t) continue;
        int rp = support::brute_longest_st_path_length(g, s, t);
        if (rp < 0) {
            EXPECT_THROW(exact_longest_st_path(g, s, t), Error);
        } else {
            auto p = exact_longest_st_path(g, s, t);
            EXPECT_EQ(static_cast<int>(p.length()), rp);
            EXPECT_TRUE(validate_st_path(g, p, s, t));
        }
    }
}
