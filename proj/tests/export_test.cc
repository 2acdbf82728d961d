#include "test_support.hh"

#include <zsig/export.hh>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace zsig;
using namespace zsig::testing;

TEST(Export, DistanceJson)
{
    EXPECT_EQ(to_json(Distance{2}), Json(2));
    EXPECT_EQ(to_json(Distance::infinity()), Json("inf"));
}

TEST(Export, DotDocument)
{
    auto g = Graph{{"0:1", "a\"b"}, std::vector<Edge>{{0, 1}}};
    EXPECT_EQ(to_dot(g, "gamma"),
            "graph \"gamma\" {\n"
            "  0 [label=\"0:1\"];\n"
            "  1 [label=\"a\\\"b\"];\n"
            "  0 -- 1;\n"
            "}\n");
}

TEST(Export, ModelJsonShape)
{
    auto model = build_gamma(ModelConfig{3, 1, false});
    auto j = model_to_json(model);
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["m"], 1);
    EXPECT_EQ(j["include_zero"], false);
    EXPECT_EQ(j["vertices"].size(), 6u);
    EXPECT_EQ(j["edges"].size(), 9u);
    EXPECT_EQ(j["vertices"][0], "0:1");

    auto line = build_line_graph(model.graph());
    auto lj = line_graph_to_json(model, line);
    EXPECT_EQ(lj["kind"], "line");
    EXPECT_EQ(lj["vertices"].size(), 9u);
}

TEST(Export, RoundTripPreservesInvariants)
{
    for (auto cfg : {ModelConfig{3, 2, false}, ModelConfig{4, 1, false}, ModelConfig{2, 2, true}}) {
        auto model = build_gamma(cfg);
        auto text = model_to_json(model).dump();
        auto back = graph_from_json(Json::parse(text));
        EXPECT_EQ(back.labels(), model.graph().labels());
        EXPECT_EQ(back.edges(), model.graph().edges());
        EXPECT_EQ(invariant_report(back), invariant_report(model.graph()));
    }
}

TEST(Export, MalformedDocumentsRejected)
{
    EXPECT_THROW(graph_from_json(Json::parse("[]")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": ["a"]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": ["a", "b"], "edges": [[0]]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": ["a", "b"], "edges": [[0, 2]]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": [1], "edges": []})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices": ["a", "b"], "edges": [["x", 1]]})")), std::invalid_argument);
}

TEST(InvariantReport, ModelExamples)
{
    auto r = invariant_report(build_gamma(ModelConfig{3, 3, false}).graph());
    EXPECT_EQ(r["diameter"], 2);
    EXPECT_EQ(r["radius"], 2);
    EXPECT_EQ(r["girth"], 3);
    EXPECT_EQ(r["chordal"], true);
    EXPECT_EQ(r["domination_number"], 2);
    EXPECT_EQ(r["complemented"], false);
    EXPECT_EQ(r["witnesses"]["dominating_set"], Json({"0:1", "1,2:1"}));

    EXPECT_EQ(invariant_report(build_gamma(ModelConfig{4, 1, false}).graph())["chordal"], false);

    auto two = invariant_report(build_gamma(ModelConfig{2, 1, false}).graph());
    EXPECT_EQ(two["diameter"], "inf");
    EXPECT_EQ(two["girth"], "inf");
    EXPECT_EQ(two["connected"], false);
}

TEST(InvariantReport, DominationBeyondLimit)
{
    auto r = invariant_report(make_graph(5, {}), 3);
    EXPECT_EQ(r["domination_number"], "> 3");
}
