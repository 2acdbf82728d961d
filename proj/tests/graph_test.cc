#include "test_support.hh"

#include <zsig/bitset.hh>
#include <zsig/graph.hh>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace zsig;
using namespace zsig::testing;

TEST(Bitset, SetTestCountAcrossWordBoundary)
{
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    EXPECT_TRUE(b.test(64));
    EXPECT_FALSE(b.test(63));
    EXPECT_EQ(b.count(), 3);
    EXPECT_EQ(b.first_set(), 0);
    b.reset(0);
    EXPECT_EQ(b.first_set(), 64);

    std::vector<int> seen;
    b.for_each_set([&] (int i) { seen.push_back(i); });
    EXPECT_EQ(seen, (std::vector<int>{64, 129}));
}

TEST(Bitset, SetAlgebra)
{
    Bitset a(70), b(70);
    a.set(1);
    a.set(69);
    b.set(69);
    EXPECT_TRUE(a.intersects(b));
    EXPECT_TRUE(b.is_subset_of(a));
    EXPECT_FALSE(a.is_subset_of(b));
    a.intersect_with(b);
    EXPECT_EQ(a, b);
    Bitset empty(70);
    EXPECT_TRUE(empty.none());
    EXPECT_EQ(empty.first_set(), -1);
    empty.union_with(b);
    EXPECT_TRUE(empty.any());
}

TEST(Distance, InfinityOrderingAndText)
{
    EXPECT_LT(Distance{3}, Distance::infinity());
    EXPECT_EQ(Distance::infinity(), Distance::infinity());
    EXPECT_FALSE(Distance::infinity() == 0);
    EXPECT_TRUE(Distance{2} == 2);
    EXPECT_EQ(Distance::infinity().to_string(), "inf");
    EXPECT_EQ(Distance{7}.to_string(), "7");
}

TEST(Graph, BasicQueries)
{
    auto g = make_graph(4, {{2, 0}, {1, 2}, {2, 3}});
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.degree(2), 3);
    EXPECT_TRUE(g.adjacent(0, 2));
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_FALSE(g.adjacent(0, 1));
    auto nb = g.neighbours(2);
    EXPECT_EQ(std::vector<VertexId>(nb.begin(), nb.end()), (std::vector<VertexId>{0, 1, 3}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}}));
    EXPECT_EQ(g.find_label("v3"), 3);
    EXPECT_FALSE(g.find_label("nope"));
    EXPECT_TRUE(g.row(2).test(3));
}

TEST(Graph, RejectsMalformedEdges)
{
    EXPECT_THROW(make_graph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{-1, 0}}), std::invalid_argument);
    auto g = make_graph(2, {});
    EXPECT_THROW(g.neighbours(2), std::out_of_range);
    EXPECT_THROW(g.label(-1), std::out_of_range);
}

TEST(Witness, PathAndCycleValidation)
{
    auto g = cycle_graph(5);
    EXPECT_TRUE(is_valid_path(g, PathWitness{{0, 1, 2}}));
    EXPECT_FALSE(is_valid_path(g, PathWitness{{0, 2}}));
    EXPECT_FALSE(is_valid_path(g, PathWitness{{0, 1, 0}}));
    EXPECT_TRUE(is_valid_cycle(g, CycleWitness{{0, 1, 2, 3, 4}}));
    EXPECT_FALSE(is_valid_cycle(g, CycleWitness{{0, 1}}));
    EXPECT_FALSE(is_valid_cycle(g, CycleWitness{{0, 1, 2, 3}}));
    EXPECT_TRUE(is_chordless_cycle(g, CycleWitness{{0, 1, 2, 3, 4}}));

    auto k4 = complete_graph(4);
    EXPECT_TRUE(is_valid_cycle(k4, CycleWitness{{0, 1, 2, 3}}));
    EXPECT_FALSE(is_chordless_cycle(k4, CycleWitness{{0, 1, 2, 3}}));
    EXPECT_FALSE(is_chordless_cycle(k4, CycleWitness{{0, 1, 2}}));

    VertexId vs[] = {3, 1};
    EXPECT_EQ(labels_of(k4, vs), (std::vector<std::string>{"v3", "v1"}));
}
