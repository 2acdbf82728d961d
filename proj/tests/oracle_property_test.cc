#include "test_support.hh"

#include <zsig/chordal.hh>
#include <zsig/cycles.hh>
#include <zsig/invariants.hh>
#include <zsig/oracles.hh>
#include <zsig/verifier.hh>

#include <gtest/gtest.h>

#include <bit>
#include <stdexcept>

using namespace zsig;
using namespace zsig::testing;

TEST(Oracles, HandComputedValues)
{
    EXPECT_EQ(naive_girth(petersen_graph()), 5);
    EXPECT_EQ(naive_girth(complete_graph(3)), 3);
    EXPECT_FALSE(naive_girth(path_graph(5)).is_finite());
    EXPECT_EQ(naive_cycle_through_pair(cycle_graph(6), 0, 3), 6);
    EXPECT_FALSE(naive_cycle_through_pair(path_graph(3), 0, 2).is_finite());
    EXPECT_TRUE(naive_chordal(complete_graph(6)));
    EXPECT_FALSE(naive_chordal(cycle_graph(4)));
    EXPECT_FALSE(naive_chordal(petersen_graph()));
}

TEST(Oracles, CapIsEnforced)
{
    auto big = path_graph(15);
    EXPECT_THROW(naive_girth(big), std::length_error);
    EXPECT_NO_THROW(naive_girth(big, 15));
    EXPECT_THROW(naive_girth(path_graph(3), hard_oracle_cap + 1), std::length_error);
}

// Fast routines against the exhaustive oracles on seeded random graphs.
class RandomGraphs : public ::testing::TestWithParam<std::uint64_t>
{
};

TEST_P(RandomGraphs, FastRoutinesMatchOracles)
{
    for (auto & g : random_graph_corpus(GetParam(), 40, 10)) {
        EXPECT_EQ(girth(g), naive_girth(g));
        if (auto c = shortest_cycle(g)) {
            EXPECT_TRUE(is_valid_cycle(g, *c));
            EXPECT_EQ(Distance{c->length()}, naive_girth(g));
        }

        auto ch = is_chordal(g);
        EXPECT_EQ(ch.chordal, naive_chordal(g));
        if (ch.chordal)
            EXPECT_FALSE(first_elimination_failure(g, ch.elimination_order));
        else {
            ASSERT_TRUE(ch.hole);
            EXPECT_TRUE(is_chordless_cycle(g, *ch.hole));
        }

        DisjointPathSolver solver(g);
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u) {
            auto slow = naive_cycles_through_vertex(g, u);
            for (VertexId v = 0 ; v < g.vertex_count() ; ++v) {
                if (u == v)
                    continue;
                auto fast = solver.solve(u, v);
                EXPECT_EQ(fast.length, slow[v]) << "pair " << u << ", " << v;
                EXPECT_EQ(fast.witness.has_value(), fast.length.is_finite());
                if (fast.witness) {
                    EXPECT_TRUE(is_valid_cycle(g, *fast.witness));
                }
            }
        }
    }
}

TEST_P(RandomGraphs, DistanceAxioms)
{
    for (auto & g : random_graph_corpus(GetParam() + 1000, 20, 12)) {
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u) {
            auto du = bfs_distances(g, u);
            EXPECT_EQ(du[u], 0);
            for (VertexId v = 0 ; v < g.vertex_count() ; ++v) {
                EXPECT_EQ(du[v], distance(g, v, u));
                if (g.adjacent(u, v)) {
                    EXPECT_EQ(du[v], 1);
                }
                for (auto w : g.neighbours(v))
                    if (du[v].is_finite()) {
                        EXPECT_LE(du[w], Distance{du[v].value() + 1});
                    }
            }
        }
    }
}

TEST_P(RandomGraphs, DominationIsMinimal)
{
    for (auto & g : random_graph_corpus(GetParam() + 2000, 20, 8)) {
        auto dom = domination_number(g, 8);
        ASSERT_TRUE(dom.number);
        EXPECT_TRUE(dominates(g, dom.witness));
        // no smaller set dominates: exhaustive check over all subsets
        int n = g.vertex_count();
        for (unsigned mask = 0 ; mask < (1u << n) ; ++mask) {
            if (std::popcount(mask) >= *dom.number)
                continue;
            std::vector<VertexId> set;
            for (int v = 0 ; v < n ; ++v)
                if (mask & (1u << v))
                    set.push_back(v);
            EXPECT_FALSE(dominates(g, set));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Values(1u, 7u, 42u, 20240601u));

TEST(RandomCorpus, DeterministicForSeed)
{
    auto a = random_graph_corpus(5, 10, 12);
    auto b = random_graph_corpus(5, 10, 12);
    ASSERT_EQ(a.size(), 10u);
    for (std::size_t i = 0 ; i < a.size() ; ++i) {
        EXPECT_EQ(a[i].edges(), b[i].edges());
        EXPECT_LE(a[i].vertex_count(), 12);
        EXPECT_GE(a[i].vertex_count(), 1);
    }
}
