#include "cli.hh"

#include <zsig/cycles.hh>
#include <zsig/export.hh>
#include <zsig/invariants.hh>
#include <zsig/line_graph.hh>
#include <zsig/verifier.hh>
#include <zsig/zeroset_model.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using std::optional;
using std::string;
using std::vector;

namespace zsig::cli
{
    namespace
    {
        struct ConfigError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Options
        {
            int n = 3;
            int m = 4;
            bool include_zero = false;
            bool line = false;
            string format;
            string out_path;
            string in_path;
            vector<string> theorems;
            string n_range, m_range;
            std::uint64_t seed = Sweep{}.seed;
            string u, v;
        };

        struct Range
        {
            int low, high;
        };

        auto parse_range(const string & text, const char * what, int low, int high) -> Range
        {
            auto dots = text.find("..");
            if (dots == string::npos)
                throw ConfigError(string(what) + " must look like a..b, got '" + text + "'");
            auto number = [&] (const string & s) {
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(s, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (s.empty() || used != s.size())
                    throw ConfigError(string(what) + " has a malformed bound in '" + text + "'");
                return value;
            };
            Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
            if (r.low > r.high || r.low < low || r.high > high)
                throw ConfigError(string(what) + " must satisfy " + std::to_string(low) + " <= a <= b <= "
                        + std::to_string(high) + ", got '" + text + "'");
            return r;
        }

        auto model_config(const Options & o) -> ModelConfig
        {
            ModelConfig cfg{o.n, o.m, o.include_zero};
            cfg.validate();
            return cfg;
        }

        auto emit(const Options & o, const string & text, std::ostream & out) -> void
        {
            if (o.out_path.empty()) {
                out << text;
                return;
            }
            std::ofstream file(o.out_path, std::ios::binary);
            if (! file)
                throw ConfigError("cannot open '" + o.out_path + "' for writing");
            file << text;
            if (! file.flush())
                throw ConfigError("cannot write '" + o.out_path + "'");
        }

        auto require_format(const Options & o, std::initializer_list<const char *> allowed, const char * fallback) -> string
        {
            auto format = o.format.empty() ? string(fallback) : o.format;
            for (auto a : allowed)
                if (format == a)
                    return format;
            throw ConfigError("format '" + format + "' is not available for this subcommand");
        }

        auto graph_name(const ModelConfig & cfg, bool line) -> string
        {
            return string(line ? "line_graph" : "gamma") + "_n" + std::to_string(cfg.n) + "_m" + std::to_string(cfg.m)
                + (cfg.include_zero ? "_zero" : "");
        }

        auto export_graph(const Options & o, bool line, std::ostream & out) -> void
        {
            auto format = require_format(o, {"json", "dot"}, "json");
            auto cfg = model_config(o);
            auto model = build_gamma(cfg);
            if (line) {
                auto lg = build_line_graph(model.graph());
                if (format == "dot")
                    emit(o, to_dot(lg.graph(), graph_name(cfg, true)), out);
                else
                    emit(o, line_graph_to_json(model, lg).dump(2) + "\n", out);
                return;
            }
            if (format == "dot")
                emit(o, to_dot(model.graph(), graph_name(cfg, false)), out);
            else
                emit(o, model_to_json(model).dump(2) + "\n", out);
        }

        auto read_json_file(const string & path) -> Json
        {
            std::ifstream file(path, std::ios::binary);
            if (! file)
                throw ConfigError("cannot open '" + path + "'");
            try {
                return Json::parse(file);
            }
            catch (const nlohmann::json::exception & e) {
                throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
            }
        }

        auto markdown_table(const Json & report) -> string
        {
            std::ostringstream md;
            md << "| invariant | value |\n|---|---|\n";
            for (auto & [key, value] : report.items())
                if (key != "witnesses")
                    md << "| " << key << " | " << (value.is_string() ? value.get<string>() : value.dump()) << " |\n";
            if (report.contains("witnesses") && ! report["witnesses"].empty()) {
                md << "\n| witness | labels |\n|---|---|\n";
                for (auto & [key, value] : report["witnesses"].items())
                    md << "| " << key << " | " << value.dump() << " |\n";
            }
            return md.str();
        }

        auto cmd_invariants(const Options & o, std::ostream & out) -> void
        {
            auto format = require_format(o, {"json", "md"}, "json");
            Json report;
            if (! o.in_path.empty()) {
                try {
                    report = invariant_report(graph_from_json(read_json_file(o.in_path)));
                }
                catch (const std::invalid_argument & e) {
                    throw ConfigError(e.what());
                }
            }
            else {
                auto model = build_gamma(model_config(o));
                if (o.line)
                    report = invariant_report(build_line_graph(model.graph()).graph());
                else
                    report = invariant_report(model.graph());
            }
            emit(o, format == "md" ? markdown_table(report) : report.dump(2) + "\n", out);
        }

        struct PairContext
        {
            GammaModel model;
            optional<LineGraph> line;

            auto graph() const -> const Graph &
            {
                return line ? line->graph() : model.graph();
            }

            auto find(const string & label) const -> VertexId
            {
                if (! line)
                    return model.id_of_label(label);
                auto id = line->graph().find_label(label);
                if (! id)
                    throw std::invalid_argument("no line-graph vertex '" + label + "'");
                return *id;
            }
        };

        auto pair_context(const Options & o) -> PairContext
        {
            if (o.u.empty() || o.v.empty())
                throw ConfigError("--u and --v are required");
            auto model = build_gamma(model_config(o));
            optional<LineGraph> line;
            if (o.line)
                line = build_line_graph(model.graph());
            return PairContext{std::move(model), std::move(line)};
        }

        auto cmd_dist(const Options & o, std::ostream & out) -> void
        {
            auto format = require_format(o, {"json", "md"}, "json");
            auto ctx = pair_context(o);
            auto & g = ctx.graph();
            VertexId u = ctx.find(o.u), v = ctx.find(o.v);
            auto d = distance(g, u, v);
            auto path = shortest_path(g, u, v);
            Json result{{"graph", o.line ? "line" : "gamma"}, {"u", g.label(u)}, {"v", g.label(v)},
                {"distance", to_json(d)}, {"path", path ? Json(labels_of(g, path->vertices)) : Json(nullptr)}};
            if (format == "md")
                emit(o, "d(" + g.label(u) + ", " + g.label(v) + ") = " + d.to_string() + "\n", out);
            else
                emit(o, result.dump(2) + "\n", out);
        }

        auto cmd_cycle_through(const Options & o, std::ostream & out) -> void
        {
            auto format = require_format(o, {"json", "md"}, "json");
            auto ctx = pair_context(o);
            auto & g = ctx.graph();
            VertexId u = ctx.find(o.u), v = ctx.find(o.v);
            if (u == v)
                throw ConfigError("--u and --v must name distinct vertices");
            auto r = smallest_cycle_through_pair(g, u, v);
            Json result{{"graph", o.line ? "line" : "gamma"}, {"u", g.label(u)}, {"v", g.label(v)},
                {"length", to_json(r.length)},
                {"cycle", r.witness ? Json(labels_of(g, r.witness->vertices)) : Json(nullptr)}};
            if (format == "md")
                emit(o, "c(" + g.label(u) + ", " + g.label(v) + ") = " + r.length.to_string() + "\n", out);
            else
                emit(o, result.dump(2) + "\n", out);
        }

        auto verify_sweep(const Options & o, bool n_given, bool m_given) -> Sweep
        {
            Sweep sweep;
            if (o.n_range.empty() && o.m_range.empty() && ! n_given && ! m_given)
                sweep = default_sweep(o.include_zero);
            else {
                Range ns = o.n_range.empty() ? (n_given ? Range{o.n, o.n} : Range{2, 5})
                    : parse_range(o.n_range, "--n-range", 1, 6);
                Range ms = o.m_range.empty() ? (m_given ? Range{o.m, o.m} : Range{4, 4})
                    : parse_range(o.m_range, "--m-range", 1, 6);
                for (int n = ns.low ; n <= ns.high ; ++n)
                    for (int m = ms.low ; m <= ms.high ; ++m) {
                        sweep.gamma.push_back(ModelConfig{n, m, o.include_zero});
                        if (n >= 3 && m >= 2)
                            sweep.line.push_back(ModelConfig{n, m, o.include_zero});
                    }
            }
            sweep.theorems = o.theorems;
            sweep.seed = o.seed;
            return sweep;
        }

        auto cmd_verify(const Options & o, bool n_given, bool m_given, std::ostream & out) -> int
        {
            auto format = require_format(o, {"json", "md"}, "json");
            VerificationReport report;
            try {
                report = run_all(verify_sweep(o, n_given, m_given));
            }
            catch (const std::invalid_argument & e) {
                throw ConfigError(e.what());
            }
            emit(o, format == "md" ? to_markdown(report) : to_json(report).dump(2) + "\n", out);
            if (! o.out_path.empty())
                out << report.checks.size() << " checks: " << report.count(Status::pass) << " pass, "
                    << report.count(Status::fail) << " fail, " << report.count(Status::anomaly) << " anomaly, "
                    << report.count(Status::hypothesis_violation) << " hypothesis violation, "
                    << report.count(Status::skipped) << " skipped\n";
            return report.exit_code();
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{"Finite models of the zero-set intersection graph of C(X) and its line graph", "zsig"};
        app.require_subcommand(1);
        app.set_version_flag("--version", toolkit_version);

        auto add_model = [&] (CLI::App * sub) {
            sub->add_option("--n", o.n, "number of points of X")->check(CLI::Range(1, 6));
            sub->add_option("--m", o.m, "functions per zero-set class")->check(CLI::Range(1, 6));
            sub->add_flag("--include-zero", o.include_zero, "add the zero function as a vertex");
            sub->add_option("--out", o.out_path, "output file (default: standard output)");
        };
        auto add_format = [&] (CLI::App * sub, std::vector<string> formats) {
            sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        };

        auto build = app.add_subcommand("build", "export the model graph (or its line graph)");
        add_model(build);
        build->add_flag("--line", o.line, "export the line graph instead");
        add_format(build, {"json", "dot"});

        auto linegraph = app.add_subcommand("linegraph", "export the line graph of the model");
        add_model(linegraph);
        add_format(linegraph, {"json", "dot"});

        auto invariants = app.add_subcommand("invariants", "diameter, radius, girth, chordality, domination, complementedness");
        add_model(invariants);
        invariants->add_flag("--line", o.line, "use the line graph");
        invariants->add_option("--in", o.in_path, "read a graph exported as JSON instead of building a model");
        add_format(invariants, {"json", "md"});

        auto dist = app.add_subcommand("dist", "distance and a shortest path between two vertices");
        auto cycle = app.add_subcommand("cycle-through", "smallest cycle through two vertices");
        for (auto sub : {dist, cycle}) {
            add_model(sub);
            sub->add_flag("--line", o.line, "labels name line-graph vertices");
            sub->add_option("--u", o.u, "first vertex label, e.g. 0:1 or [0:1|0,1:1]")->required();
            sub->add_option("--v", o.v, "second vertex label")->required();
            add_format(sub, {"json", "md"});
        }

        auto verify = app.add_subcommand("verify", "run the theorem checks and write a report");
        add_model(verify);
        add_format(verify, {"json", "md"});
        verify->add_option("--theorems", o.theorems, "theorem or check ids to run (default: all)")->delimiter(',');
        verify->add_option("--n-range", o.n_range, "range of n, e.g. 2..5");
        verify->add_option("--m-range", o.m_range, "range of m, e.g. 1..4");
        verify->add_option("--seed", o.seed, "seed of the random oracle corpus");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_config_error;
        }

        try {
            if (build->parsed())
                export_graph(o, o.line, out);
            else if (linegraph->parsed())
                export_graph(o, true, out);
            else if (invariants->parsed())
                cmd_invariants(o, out);
            else if (dist->parsed())
                cmd_dist(o, out);
            else if (cycle->parsed())
                cmd_cycle_through(o, out);
            else if (verify->parsed())
                return cmd_verify(o, verify->count("--n") > 0, verify->count("--m") > 0, out);
            return exit_ok;
        }
        catch (const ConfigError & e) {
            err << "error: " << e.what() << "\n";
            return exit_config_error;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << "\n";
            return exit_config_error;
        }
        catch (const std::length_error & e) {
            err << "error: " << e.what() << "\n";
            return exit_config_error;
        }
    }
}
