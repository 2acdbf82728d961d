#include "cli.hh"

#include <zsig/export.hh>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using zsig::Json;

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "zsig");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = zsig::cli::run(int(argv.size()), argv.data(), out, err);
        return Result{code, out.str(), err.str()};
    }

    auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("zsig_cli_test_" + name)).string();
    }
}

TEST(Cli, BuildJson)
{
    auto r = run({"build", "--n", "3", "--m", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["vertices"].size(), 6u);
    EXPECT_EQ(j["edges"].size(), 9u);

    auto two = Json::parse(run({"build", "--n", "2", "--m", "1"}).out);
    EXPECT_EQ(two["vertices"].size(), 2u);
    EXPECT_EQ(two["edges"].size(), 0u);

    auto line = Json::parse(run({"build", "--n", "3", "--m", "1", "--line"}).out);
    EXPECT_EQ(line["vertices"].size(), 9u);
    EXPECT_EQ(line, Json::parse(run({"linegraph", "--n", "3", "--m", "1"}).out));
}

TEST(Cli, BuildDot)
{
    auto r = run({"build", "--n", "2", "--m", "1", "--format", "dot"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "graph \"gamma_n2_m1\" {\n  0 [label=\"0:1\"];\n  1 [label=\"1:1\"];\n}\n");
    EXPECT_EQ(run({"build", "--format", "md"}).code, 2);
}

TEST(Cli, Invariants)
{
    auto j = Json::parse(run({"invariants", "--n", "3", "--m", "3"}).out);
    EXPECT_EQ(j["diameter"], 2);
    EXPECT_EQ(j["radius"], 2);
    EXPECT_EQ(j["girth"], 3);
    EXPECT_EQ(j["chordal"], true);
    EXPECT_EQ(j["domination_number"], 2);
    EXPECT_EQ(j["complemented"], false);
    EXPECT_EQ(Json::parse(run({"invariants", "--n", "4", "--m", "1"}).out)["chordal"], false);
    EXPECT_EQ(Json::parse(run({"invariants", "--n", "2", "--m", "1"}).out)["diameter"], "inf");
    auto md = run({"invariants", "--n", "2", "--m", "1", "--format", "md"});
    EXPECT_NE(md.out.find("| diameter | inf |"), std::string::npos);
}

TEST(Cli, JsonRoundTrip)
{
    auto path = temp_path("roundtrip.json");
    ASSERT_EQ(run({"build", "--n", "3", "--m", "2", "--include-zero", "--out", path}).code, 0);
    auto from_file = run({"invariants", "--in", path});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, run({"invariants", "--n", "3", "--m", "2", "--include-zero"}).out);
    std::remove(path.c_str());

    EXPECT_EQ(run({"invariants", "--in", temp_path("missing.json")}).code, 2);
    auto bad = temp_path("bad.json");
    std::ofstream(bad) << "{\"vertices\": 3}";
    EXPECT_EQ(run({"invariants", "--in", bad}).code, 2);
    std::remove(bad.c_str());
}

TEST(Cli, DistAndCycleThrough)
{
    auto d = Json::parse(run({"dist", "--n", "3", "--m", "1", "--u", "0:1", "--v", "1:1"}).out);
    EXPECT_EQ(d["distance"], 2);
    EXPECT_EQ(d["path"].size(), 3u);

    auto c = Json::parse(run({"cycle-through", "--n", "3", "--m", "1", "--u", "0:1", "--v", "1:1"}).out);
    EXPECT_EQ(c["length"], 5);
    EXPECT_EQ(c["cycle"].size(), 5u);
    auto c2 = Json::parse(run({"cycle-through", "--n", "3", "--m", "2", "--u", "0:1", "--v", "1:1"}).out);
    EXPECT_EQ(c2["length"], 4);

    auto far = Json::parse(run({"dist", "--n", "3", "--m", "2", "--line", "--u", "[0:1|0:2]", "--v", "[1:1|1:2]"}).out);
    EXPECT_EQ(far["distance"], 3);
    auto inf = Json::parse(run({"dist", "--n", "2", "--m", "1", "--u", "0:1", "--v", "1:1"}).out);
    EXPECT_EQ(inf["distance"], "inf");
    EXPECT_TRUE(inf["path"].is_null());

    EXPECT_EQ(run({"dist", "--n", "3", "--m", "1", "--u", "0:9", "--v", "1:1"}).code, 2);
    EXPECT_EQ(run({"dist", "--n", "3", "--m", "1", "--u", "0:1"}).code, 2);
    EXPECT_EQ(run({"cycle-through", "--n", "3", "--m", "1", "--u", "0:1", "--v", "0:1"}).code, 2);
}

TEST(Cli, VerifyFilterAndExitCodes)
{
    auto r = run({"verify", "--theorems", "T3.4", "--n-range", "2..5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["checks"].size(), 4u);
    EXPECT_EQ(j["summary"]["pass"], 4);

    EXPECT_EQ(run({"verify", "--n-range", "2.5"}).code, 2);
    EXPECT_EQ(run({"verify", "--n-range", "5..2"}).code, 2);
    EXPECT_EQ(run({"verify", "--n-range", "0..3"}).code, 2);
    EXPECT_EQ(run({"verify", "--m-range", "1..x"}).code, 2);
    EXPECT_EQ(run({"verify", "--theorems", "T7.7"}).code, 2);
    EXPECT_EQ(run({"build", "--n", "7"}).code, 2);
    EXPECT_EQ(run({"build", "--m", "0"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"build", "--out", "/nonexistent-dir/x.json"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyIsDeterministic)
{
    std::vector<std::string> args{"verify", "--n-range", "3..3", "--m-range", "2..3", "--include-zero", "--format", "md"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("ANOMALY"), std::string::npos);
}

TEST(Cli, VerifyToFilePrintsSummary)
{
    auto path = temp_path("report.json");
    auto r = run({"verify", "--theorems", "T2.1", "--n-range", "2..3", "--m-range", "1..2", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4 checks"), std::string::npos);
    std::ifstream in(path);
    auto j = Json::parse(in);
    EXPECT_EQ(j["checks"].size(), 4u);
    std::remove(path.c_str());
}
