#include <zsig/invariants.hh>
#include <zsig/zeroset_model.hh>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace zsig;

namespace
{
    // Independent count: enumerate (subset, copy) pairs and test every pair for a shared point.
    auto brute_force_edge_count(int n, int m, bool zero) -> long
    {
        std::vector<unsigned> sets;
        unsigned full = (1u << n) - 1;
        for (unsigned s = 1 ; s < full ; ++s)
            for (int k = 0 ; k < m ; ++k)
                sets.push_back(s);
        if (zero)
            sets.push_back(full);
        long edges = 0;
        for (std::size_t i = 0 ; i < sets.size() ; ++i)
            for (std::size_t j = i + 1 ; j < sets.size() ; ++j)
                edges += (sets[i] & sets[j]) != 0;
        return edges;
    }
}

TEST(FiniteSpace, Bounds)
{
    EXPECT_EQ(FiniteSpace{3}.full(), 0b111u);
    EXPECT_THROW(FiniteSpace{0}, std::invalid_argument);
    EXPECT_THROW(FiniteSpace{FiniteSpace::max_points + 1}, std::invalid_argument);
}

TEST(ZeroSet, ConstructionAndText)
{
    FiniteSpace x{3};
    ZeroSet s{0b101, x};
    EXPECT_EQ(s.to_string(), "0,2");
    EXPECT_TRUE(s.meets(ZeroSet{0b100, x}));
    EXPECT_FALSE(s.meets(ZeroSet{0b010, x}));
    EXPECT_FALSE(s.is_full(x));
    EXPECT_TRUE((ZeroSet{0b111, x}.is_full(x)));
    EXPECT_THROW((ZeroSet{0, x}), std::invalid_argument);
    EXPECT_THROW((ZeroSet{0b1000, x}), std::invalid_argument);
}

TEST(FunctionVertex, LabelsRoundTrip)
{
    FiniteSpace x{4};
    FunctionVertex f{ZeroSet{0b0101, x}, 3};
    EXPECT_EQ(f.label(), "0,2:3");
    EXPECT_EQ(parse_function_label("0,2:3", x), f);
    EXPECT_EQ(parse_function_label("3:1", x).zero_set.members(), 0b1000u);
    for (auto bad : {"", ":1", "0", "0:", "0:0", "4:1", "0,,1:1", "0,:1", "1,0:1", "0,0:1", "a:1", "0:1x", "-1:1"})
        EXPECT_THROW(parse_function_label(bad, x), std::invalid_argument) << bad;
}

TEST(FunctionVertex, Adjacency)
{
    FiniteSpace x{3};
    FunctionVertex a{ZeroSet{0b001, x}, 1}, a2{ZeroSet{0b001, x}, 2}, b{ZeroSet{0b110, x}, 1};
    EXPECT_TRUE(adjacent(a, a2));
    EXPECT_FALSE(adjacent(a, a));
    EXPECT_FALSE(adjacent(a, b));
    EXPECT_EQ(complement_class(a.zero_set, x)->members(), 0b110u);
    EXPECT_FALSE(complement_class(ZeroSet{0b111, x}, x));
}

TEST(ModelConfig, ValidationAndText)
{
    EXPECT_EQ((ModelConfig{3, 2, false}.to_string()), "n=3,m=2");
    EXPECT_EQ((ModelConfig{3, 2, true}.to_string()), "n=3,m=2,zero");
    EXPECT_EQ((ModelConfig{3, 3, false}.vertex_count()), 18);
    EXPECT_EQ((ModelConfig{4, 1, true}.vertex_count()), 15);
    EXPECT_THROW((ModelConfig{0, 1, false}.validate()), std::invalid_argument);
    EXPECT_THROW((ModelConfig{3, 0, false}.validate()), std::invalid_argument);
    EXPECT_THROW(enumerate_vertices(ModelConfig{16, 1, false}), std::length_error);
}

TEST(GammaModel, VertexOrder)
{
    auto vs = enumerate_vertices(ModelConfig{3, 2, true});
    ASSERT_EQ(vs.size(), 13u);
    EXPECT_EQ(vs[0].label(), "0:1");
    EXPECT_EQ(vs[1].label(), "0:2");
    EXPECT_EQ(vs[2].label(), "1:1");
    EXPECT_EQ(vs[4].label(), "0,1:1");
    EXPECT_EQ(vs.back().label(), "0,1,2:1");
    EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end() - 1));
}

TEST(GammaModel, SizesMatchBruteForce)
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (int m = 1 ; m <= 4 ; ++m)
            for (bool zero : {false, true}) {
                auto model = build_gamma(ModelConfig{n, m, zero});
                EXPECT_EQ(model.graph().vertex_count(), (ModelConfig{n, m, zero}.vertex_count()));
                EXPECT_EQ(model.graph().edge_count(), brute_force_edge_count(n, m, zero))
                    << "n=" << n << " m=" << m << " zero=" << zero;
            }
}

TEST(GammaModel, FrozenCounts)
{
    EXPECT_EQ(build_gamma(ModelConfig{3, 1, false}).graph().edge_count(), 9);
    EXPECT_EQ(build_gamma(ModelConfig{4, 1, false}).graph().edge_count(), 66);
    auto two = build_gamma(ModelConfig{2, 1, false});
    EXPECT_EQ(two.graph().vertex_count(), 2);
    EXPECT_EQ(two.graph().edge_count(), 0);
}

TEST(GammaModel, Lookup)
{
    auto model = build_gamma(ModelConfig{3, 2, true});
    auto id = model.id_of_label("0,2:2");
    EXPECT_EQ(model.graph().label(id), "0,2:2");
    EXPECT_EQ(model.zero_set(id), 0b101u);
    EXPECT_EQ(model.zero_vertex(), model.graph().vertex_count() - 1);
    EXPECT_EQ(model.first_of_class(0b010), model.id_of_label("1:1"));
    EXPECT_FALSE(model.first_of_class(0));
    EXPECT_THROW(model.id_of_label("0:3"), std::invalid_argument);
    EXPECT_THROW(model.id_of_label("junk"), std::invalid_argument);
    EXPECT_FALSE(build_gamma(ModelConfig{3, 2, false}).zero_vertex());
}

TEST(GammaModel, CommonNeighbourExample)
{
    // ({0},1) and ({0,1},1) in n = 3, m = 1: ({0,2},1) is a common neighbour
    auto model = build_gamma(ModelConfig{3, 1, false});
    auto & g = model.graph();
    auto u = model.id_of_label("0:1"), v = model.id_of_label("0,1:1"), w = model.id_of_label("0,2:1");
    EXPECT_TRUE(g.adjacent(u, w));
    EXPECT_TRUE(g.adjacent(v, w));
}

TEST(GammaModel, DistanceTwoIffDisjoint)
{
    auto model = build_gamma(ModelConfig{4, 2, false});
    auto & g = model.graph();
    for (VertexId u = 0 ; u < g.vertex_count() ; ++u) {
        auto d = bfs_distances(g, u);
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
            if (u != v) {
                EXPECT_EQ(d[v], (model.zero_set(u) & model.zero_set(v)) ? 1 : 2);
            }
    }
}
