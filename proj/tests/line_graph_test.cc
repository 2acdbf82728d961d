#include "test_support.hh"

#include <zsig/cycles.hh>
#include <zsig/invariants.hh>
#include <zsig/line_graph.hh>
#include <zsig/verifier.hh>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace zsig;
using namespace zsig::testing;

namespace
{
    auto edge_of(const GammaModel & model, const char * a, const char * b) -> EdgeVertex
    {
        return EdgeVertex::make(model.id_of_label(a), model.id_of_label(b));
    }
}

TEST(EdgeVertex, OrderingAndSharing)
{
    auto e = EdgeVertex::make(5, 2);
    EXPECT_EQ(e.first, 2);
    EXPECT_EQ(e.second, 5);
    EXPECT_THROW(EdgeVertex::make(3, 3), std::invalid_argument);
    EXPECT_TRUE(shares_endpoint(EdgeVertex::make(1, 2), EdgeVertex::make(2, 3)));
    EXPECT_FALSE(shares_endpoint(EdgeVertex::make(1, 2), EdgeVertex::make(3, 4)));
    EXPECT_THROW(shares_endpoint(EdgeVertex::make(1, 2), EdgeVertex::make(2, 1)), std::invalid_argument);
}

TEST(LineGraph, StarAndTriangle)
{
    // the line graph of a star K1,3 is a triangle, and of a triangle is a triangle
    auto star = build_line_graph(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(star.graph().vertex_count(), 3);
    EXPECT_EQ(star.graph().edge_count(), 3);
    auto tri = build_line_graph(complete_graph(3));
    EXPECT_EQ(tri.graph().edge_count(), 3);
    EXPECT_EQ(tri.graph().label(0), "[v0|v1]");
    EXPECT_EQ(tri.base_vertex_count(), 3);
}

TEST(LineGraph, MatchesPairwiseDefinition)
{
    for (auto & g : random_graph_corpus(99, 15, 9)) {
        auto line = build_line_graph(g);
        auto & lg = line.graph();
        ASSERT_EQ(lg.vertex_count(), g.edge_count());
        long expected_edges = 0;
        for (VertexId a = 0 ; a < lg.vertex_count() ; ++a) {
            EXPECT_EQ(line.id_of(line.edge_vertex(a)), a);
            auto [x, y] = g.edges()[a];
            EXPECT_EQ(line.edge_vertex(a), EdgeVertex::make(x, y));
            for (VertexId b = a + 1 ; b < lg.vertex_count() ; ++b) {
                auto [p, q] = g.edges()[b];
                bool share = x == p || x == q || y == p || y == q;
                expected_edges += share;
                EXPECT_EQ(lg.adjacent(a, b), share);
            }
        }
        EXPECT_EQ(lg.edge_count(), expected_edges);
    }
}

TEST(LineGraph, ModelSizes)
{
    // |V(L)| = |E(Gamma)|; |E(L)| = sum over base vertices of C(deg, 2)
    for (auto cfg : {ModelConfig{3, 1, false}, ModelConfig{3, 3, false}, ModelConfig{4, 2, true}}) {
        auto model = build_gamma(cfg);
        auto line = build_line_graph(model.graph());
        EXPECT_EQ(line.graph().vertex_count(), model.graph().edge_count());
        long pairs = 0;
        for (VertexId v = 0 ; v < model.graph().vertex_count() ; ++v) {
            long d = model.graph().degree(v);
            pairs += d * (d - 1) / 2;
        }
        EXPECT_EQ(line.graph().edge_count(), pairs);
    }
    auto small = build_line_graph(build_gamma(ModelConfig{3, 1, false}).graph());
    EXPECT_EQ(small.graph().vertex_count(), 9);
    EXPECT_EQ(small.graph().edge_count(), 21);
    EXPECT_EQ(build_line_graph(build_gamma(ModelConfig{3, 3, false}).graph()).graph().vertex_count(), 99);
}

TEST(LineGraph, LabelsPutSmallerEndpointFirst)
{
    auto model = build_gamma(ModelConfig{3, 1, false});
    auto line = build_line_graph(model.graph());
    EXPECT_EQ(line.graph().label(0), "[0:1|0,1:1]");
    EXPECT_TRUE(line.graph().find_label("[0,1:1|1,2:1]"));
    EXPECT_FALSE(line.graph().find_label("[1,2:1|0,1:1]"));
}

TEST(CrossPattern, Examples)
{
    auto model = build_gamma(ModelConfig{3, 2, false});
    auto e1 = edge_of(model, "0:1", "0,1:1");
    auto e2 = edge_of(model, "1:1", "1,2:1");
    auto p = cross_zero_pattern(model, e1, e2);
    EXPECT_EQ(p, (CrossPattern{{{false, false}, {true, true}}}));
    EXPECT_EQ(true_entries(p), 2);
    EXPECT_EQ(predicted_line_distance(model, e1, e2), 2);
    EXPECT_EQ(predicted_line_cycle(model, e1, e2), 4);

    auto e3 = edge_of(model, "2:1", "1,2:1");
    EXPECT_EQ(true_entries(cross_zero_pattern(model, e1, e3)), 1);
    EXPECT_EQ(predicted_line_cycle(model, e1, e3), 5);

    auto e4 = edge_of(model, "0:1", "0:2");
    auto e5 = edge_of(model, "1:1", "1:2");
    EXPECT_EQ(true_entries(cross_zero_pattern(model, e4, e5)), 0);
    EXPECT_EQ(predicted_line_distance(model, e4, e5), 3);
    EXPECT_EQ(predicted_line_cycle(model, e4, e5), 6);

    auto e6 = edge_of(model, "0:1", "0,2:1");
    EXPECT_EQ(predicted_line_distance(model, e1, e6), 1);
    EXPECT_EQ(predicted_line_cycle(model, e1, e6), 3);

    EXPECT_THROW(cross_zero_pattern(model, e1, EdgeVertex::make(0, 99)), std::invalid_argument);
}

TEST(CrossPattern, ObservedValuesMatchCases)
{
    auto model = build_gamma(ModelConfig{3, 2, false});
    auto line = build_line_graph(model.graph());
    auto & lg = line.graph();
    auto lid = [&] (const EdgeVertex & e) { return *line.id_of(e); };

    auto e4 = lid(edge_of(model, "0:1", "0:2")), e5 = lid(edge_of(model, "1:1", "1:2"));
    EXPECT_EQ(distance(lg, e4, e5), 3);
    EXPECT_EQ(smallest_cycle_through_pair(lg, e4, e5).length, 6);

    auto e1 = lid(edge_of(model, "0:1", "0,1:1")), e3 = lid(edge_of(model, "2:1", "1,2:1"));
    EXPECT_EQ(distance(lg, e1, e3), 2);
    EXPECT_EQ(smallest_cycle_through_pair(lg, e1, e3).length, 5);

    // eccentricity: union covers X gives 2, otherwise 3
    EXPECT_EQ(eccentricity(lg, lid(edge_of(model, "0,1:1", "1,2:1"))), 2);
    EXPECT_EQ(eccentricity(lg, lid(edge_of(model, "0:1", "0,1:1"))), 3);
}
