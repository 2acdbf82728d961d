#include "verifier_support.hh"

#include <zsig/chordal.hh>
#include <zsig/cycles.hh>
#include <zsig/invariants.hh>
#include <zsig/oracles.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

using std::invalid_argument;
using std::optional;
using std::string;
using std::vector;

namespace zsig
{
    using namespace detail;

    auto to_string(Status s) -> string
    {
        switch (s) {
            case Status::pass: return "PASS";
            case Status::fail: return "FAIL";
            case Status::anomaly: return "ANOMALY";
            case Status::hypothesis_violation: return "HYPOTHESIS_VIOLATION";
            case Status::skipped: return "SKIPPED";
        }
        throw invalid_argument("unknown status");
    }

    auto anomaly_description(const string & code) -> string
    {
        static const std::map<string, string> descriptions = {
            {"A1", "with the zero function as a vertex, |X| = 2 gives a connected graph: the zero function meets every zero set"},
            {"A2", "every nonzero f has a g with disjoint zero set and {f, g} dominating, yet the graph is not complemented; "
                "the stated equivalence fails"},
            {"A3", "with the zero function as a vertex, the radius is 1: the zero function is adjacent to every vertex"},
            {"A4", "with the zero function as a vertex, the domination number is 1"},
            {"A5", "the zero function has no partner with a disjoint zero set, so the vertex-wise condition fails at f = 0"}};
        auto it = descriptions.find(code);
        if (it == descriptions.end())
            throw invalid_argument("unknown anomaly code '" + code + "'");
        return it->second;
    }

    namespace
    {
        auto config_json(const ModelConfig & cfg) -> Json
        {
            return Json{{"n", cfg.n}, {"m", cfg.m}, {"include_zero", cfg.include_zero}};
        }

        const vector<string> gamma_check_ids = {"T2.1", "C2.2", "C2.3", "T2.4", "T3.1", "T3.3", "T3.4", "T3.5", "T4.1", "T4.3"};
        const vector<string> line_check_ids = {"T5.2", "T5.8"};
        const string oracle_check_id = "ORACLE";

        auto is_gamma_check(const string & id) -> bool
        {
            return std::find(gamma_check_ids.begin(), gamma_check_ids.end(), id) != gamma_check_ids.end();
        }

        auto is_line_check(const string & id) -> bool
        {
            return std::find(line_check_ids.begin(), line_check_ids.end(), id) != line_check_ids.end();
        }

        auto run_gamma_check(const string & id, const GammaModel & model) -> TheoremCheck
        {
            if (id == "T2.1") return check_connectivity_diameter(model);
            if (id == "C2.2") return check_common_neighbor(model);
            if (id == "C2.3") return check_distance_characterization(model);
            if (id == "T2.4") return check_radius(model);
            if (id == "T3.1") return check_triangulation(model);
            if (id == "T3.3") return check_cycle_pair_gamma(model);
            if (id == "T3.4") return check_chordality_gamma(model);
            if (id == "T3.5") return check_complemented(model);
            if (id == "T4.1") return check_domination(model);
            if (id == "T4.3") return check_vnr_condition(model);
            throw invalid_argument("unknown check '" + id + "'");
        }

        auto run_line_check(const string & id, const GammaModel & model, const LineGraph & line) -> TheoremCheck
        {
            if (id == "T5.2") return check_line_metrics(model, line);
            if (id == "T5.8") return check_line_cycles(model, line);
            throw invalid_argument("unknown check '" + id + "'");
        }

        auto gamma_skip_reason(const ModelConfig & cfg) -> optional<string>
        {
            if (cfg.n < 2)
                return "|X| = 1 leaves at most the zero function; no statement applies";
            if (cfg.vertex_count() > gamma_vertex_cap)
                return "model has " + std::to_string(cfg.vertex_count()) + " vertices, above the cap of "
                    + std::to_string(gamma_vertex_cap);
            return std::nullopt;
        }

        auto line_skip_reason(const ModelConfig & cfg, const GammaModel * model) -> optional<string>
        {
            if (auto reason = gamma_skip_reason(cfg))
                return reason;
            if (model && model->graph().edge_count() > line_edge_cap)
                return "base graph has " + std::to_string(model->graph().edge_count()) + " edges, above the line-graph cap of "
                    + std::to_string(line_edge_cap);
            return std::nullopt;
        }
    }

    auto detail::all_pairs_distances(const Graph & g) -> vector<vector<int>>
    {
        int count = g.vertex_count();
        vector<vector<int>> dist(count, vector<int>(count, -1));
        vector<VertexId> queue(count);
        for (VertexId s = 0 ; s < count ; ++s) {
            auto & row = dist[s];
            row[s] = 0;
            std::size_t head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail) {
                auto x = queue[head++];
                for (auto y : g.neighbours(x))
                    if (row[y] < 0) {
                        row[y] = row[x] + 1;
                        queue[tail++] = y;
                    }
            }
        }
        return dist;
    }

    auto detail::covers_of(const string & check_id) -> vector<string>
    {
        static const std::map<string, vector<string>> covers = {
            {"T2.1", {"T2.1"}}, {"C2.2", {"C2.2"}}, {"C2.3", {"C2.3"}}, {"T2.4", {"T2.4"}},
            {"T3.1", {"T3.1", "C3.2"}}, {"T3.3", {"T3.3"}}, {"T3.4", {"T3.4"}}, {"T3.5", {"T3.5", "T4.4"}},
            {"T4.1", {"T4.1", "T4.2"}}, {"T4.3", {"T4.3"}},
            {"T5.2", {"L5.1", "T5.2", "C5.3", "T5.4", "C5.5"}}, {"T5.8", {"T5.6", "T5.7", "T5.8", "T5.9"}},
            {"ORACLE", {}}};
        auto it = covers.find(check_id);
        if (it == covers.end())
            throw invalid_argument("unknown check '" + check_id + "'");
        return it->second;
    }

    auto to_json(const TheoremCheck & check) -> Json
    {
        return Json{
            {"id", check.id},
            {"covers", check.covers},
            {"config", check.config ? config_json(*check.config) : Json(nullptr)},
            {"claim", check.claim},
            {"hypothesis", check.hypothesis},
            {"hypothesis_met", check.hypothesis_met},
            {"status", to_string(check.status)},
            {"anomaly", check.anomaly ? Json(*check.anomaly) : Json(nullptr)},
            {"observed", check.observed},
            {"witness", check.witness},
            {"note", check.note}};
    }

    auto all_theorem_ids() -> const vector<string> &
    {
        static const vector<string> ids = {
            "T2.1", "C2.2", "C2.3", "T2.4", "T3.1", "C3.2", "T3.3", "T3.4", "T3.5", "T4.1", "T4.2", "T4.3", "T4.4",
            "L5.1", "T5.2", "C5.3", "T5.4", "C5.5", "T5.6", "T5.7", "T5.8", "T5.9"};
        return ids;
    }

    auto all_check_ids() -> const vector<string> &
    {
        static const vector<string> ids = [] {
            auto all = gamma_check_ids;
            all.insert(all.end(), line_check_ids.begin(), line_check_ids.end());
            all.push_back(oracle_check_id);
            return all;
        }();
        return ids;
    }

    auto run_check(const string & check_id, const ModelConfig & config) -> TheoremCheck
    {
        config.validate();
        if (is_gamma_check(check_id)) {
            if (auto reason = gamma_skip_reason(config))
                return skipped_check(check_id, config, *reason);
            return run_gamma_check(check_id, build_gamma(config));
        }
        if (is_line_check(check_id)) {
            if (auto reason = line_skip_reason(config, nullptr))
                return skipped_check(check_id, config, *reason);
            auto model = build_gamma(config);
            if (auto reason = line_skip_reason(config, &model))
                return skipped_check(check_id, config, *reason);
            return run_line_check(check_id, model, build_line_graph(model.graph()));
        }
        throw invalid_argument("unknown check '" + check_id + "'");
    }

    auto random_graph_corpus(std::uint64_t seed, int count, int max_vertices) -> vector<Graph>
    {
        if (count < 0 || max_vertices < 1)
            throw invalid_argument("random corpus needs count >= 0 and max_vertices >= 1");
        std::mt19937_64 rng(seed);
        vector<Graph> corpus;
        corpus.reserve(count);
        for (int i = 0 ; i < count ; ++i) {
            int vertices = 1 + int(rng() % std::uint64_t(max_vertices));
            // edge probability in tenths, 2..7
            auto tenths = 2 + rng() % 6;
            vector<string> labels;
            for (int v = 0 ; v < vertices ; ++v)
                labels.push_back("v" + std::to_string(v));
            vector<Edge> edges;
            for (int a = 0 ; a < vertices ; ++a)
                for (int b = a + 1 ; b < vertices ; ++b)
                    if (rng() % 10 < tenths)
                        edges.emplace_back(a, b);
            corpus.emplace_back(std::move(labels), edges);
        }
        return corpus;
    }

    auto small_model_graphs(int max_vertices) -> vector<GammaModel>
    {
        vector<GammaModel> models;
        for (int n = 1 ; n <= FiniteSpace::max_points && (1L << n) - 2 <= max_vertices ; ++n)
            for (bool zero : {false, true})
                for (int m = 1 ; ; ++m) {
                    ModelConfig cfg{n, m, zero};
                    if (cfg.vertex_count() > max_vertices)
                        break;
                    models.push_back(build_gamma(cfg));
                    // with |X| = 1 every m gives the same graph
                    if (n == 1)
                        break;
                }
        return models;
    }

    auto check_oracle_equivalence(std::uint64_t seed, int random_count) -> TheoremCheck
    {
        TheoremCheck c;
        c.id = oracle_check_id;
        c.claim = "girth, chordality and smallest cycle through each pair agree with exhaustive enumeration";
        c.hypothesis = "model graphs with at most " + std::to_string(default_oracle_cap)
            + " vertices and seeded random graphs with at most 12 vertices";

        long graphs = 0, pair_comparisons = 0, mismatches = 0;
        Json first_mismatch = nullptr;
        auto compare = [&] (const Graph & g, const string & name) {
            ++graphs;
            auto note = [&] (const string & what, Json fast, Json slow) {
                ++mismatches;
                if (first_mismatch.is_null())
                    first_mismatch = Json{{"graph", name}, {"quantity", what}, {"fast", fast}, {"oracle", slow}};
            };

            auto fast_girth = girth(g), slow_girth = naive_girth(g);
            if (fast_girth != slow_girth)
                note("girth", to_json(fast_girth), to_json(slow_girth));

            auto chordality = is_chordal(g);
            bool slow_chordal = naive_chordal(g);
            if (chordality.chordal != slow_chordal)
                note("chordal", chordality.chordal, slow_chordal);
            if (chordality.hole && ! is_chordless_cycle(g, *chordality.hole))
                note("hole witness", labels_of(g, chordality.hole->vertices), nullptr);

            DisjointPathSolver solver(g);
            for (VertexId u = 0 ; u < g.vertex_count() ; ++u) {
                auto slow = naive_cycles_through_vertex(g, u);
                for (VertexId v = u + 1 ; v < g.vertex_count() ; ++v) {
                    ++pair_comparisons;
                    auto fast = solver.solve(u, v);
                    if (fast.length != slow[v])
                        note("c(" + g.label(u) + ", " + g.label(v) + ")", to_json(fast.length), to_json(slow[v]));
                    else if (fast.witness && ! is_valid_cycle(g, *fast.witness))
                        note("cycle witness", labels_of(g, fast.witness->vertices), nullptr);
                }
            }
        };

        for (auto & model : small_model_graphs(default_oracle_cap))
            compare(model.graph(), "model " + model.config().to_string());
        int index = 0;
        for (auto & g : random_graph_corpus(seed, random_count, 12))
            compare(g, "random #" + std::to_string(index++));

        c.observed = Json{{"graphs", graphs}, {"random_graphs", random_count}, {"seed", seed},
            {"pair_comparisons", pair_comparisons}, {"mismatches", mismatches}, {"first_mismatch", first_mismatch}};
        resolve(c, mismatches == 0);
        return c;
    }

    auto default_sweep(bool include_zero) -> Sweep
    {
        Sweep sweep;
        for (int n = 2 ; n <= 5 ; ++n)
            for (int m = 1 ; m <= 4 ; ++m)
                sweep.gamma.push_back(ModelConfig{n, m, include_zero});
        for (int n = 3 ; n <= 4 ; ++n)
            for (int m = 2 ; m <= 4 ; ++m)
                sweep.line.push_back(ModelConfig{n, m, include_zero});
        return sweep;
    }

    auto VerificationReport::count(Status s) const -> int
    {
        return int(std::count_if(checks.begin(), checks.end(), [&] (const TheoremCheck & c) { return c.status == s; }));
    }

    auto VerificationReport::anomaly_codes() const -> vector<string>
    {
        std::set<string> codes;
        for (auto & c : checks)
            if (c.anomaly)
                codes.insert(*c.anomaly);
        return {codes.begin(), codes.end()};
    }

    auto VerificationReport::exit_code() const -> int
    {
        return count(Status::fail) > 0 ? 1 : 0;
    }

    namespace
    {
        auto selected(const Sweep & sweep, const string & check_id) -> bool
        {
            if (sweep.theorems.empty())
                return true;
            auto covers = covers_of(check_id);
            for (auto & t : sweep.theorems)
                if (t == check_id || std::find(covers.begin(), covers.end(), t) != covers.end())
                    return true;
            return false;
        }
    }

    auto run_all(const Sweep & sweep) -> VerificationReport
    {
        if (sweep.gamma.empty() && sweep.line.empty() && ! sweep.oracle_corpus)
            throw invalid_argument("empty sweep");
        auto & theorems = all_theorem_ids();
        auto & checks = all_check_ids();
        for (auto & t : sweep.theorems)
            if (std::find(theorems.begin(), theorems.end(), t) == theorems.end()
                    && std::find(checks.begin(), checks.end(), t) == checks.end())
                throw invalid_argument("unknown theorem id '" + t + "'");
        for (auto & cfg : sweep.gamma)
            cfg.validate();
        for (auto & cfg : sweep.line)
            cfg.validate();

        VerificationReport report;
        report.toolkit_version = toolkit_version;
        report.sweep = sweep;

        bool any_gamma = std::any_of(gamma_check_ids.begin(), gamma_check_ids.end(),
                [&] (const string & id) { return selected(sweep, id); });
        if (any_gamma) {
            std::deque<optional<GammaModel>> models;
            for (auto & cfg : sweep.gamma)
                models.push_back(gamma_skip_reason(cfg) ? std::nullopt : optional<GammaModel>(build_gamma(cfg)));
            for (auto & id : gamma_check_ids) {
                if (! selected(sweep, id))
                    continue;
                for (std::size_t i = 0 ; i < sweep.gamma.size() ; ++i)
                    report.checks.push_back(models[i] ? run_gamma_check(id, *models[i])
                            : skipped_check(id, sweep.gamma[i], *gamma_skip_reason(sweep.gamma[i])));
            }
        }

        bool any_line = std::any_of(line_check_ids.begin(), line_check_ids.end(),
                [&] (const string & id) { return selected(sweep, id); });
        if (any_line) {
            struct Built
            {
                GammaModel model;
                LineGraph line;
            };
            std::deque<optional<Built>> built;
            vector<optional<string>> reasons;
            for (auto & cfg : sweep.line) {
                auto reason = line_skip_reason(cfg, nullptr);
                if (! reason) {
                    auto model = build_gamma(cfg);
                    reason = line_skip_reason(cfg, &model);
                    if (! reason) {
                        auto line = build_line_graph(model.graph());
                        built.push_back(Built{std::move(model), std::move(line)});
                        reasons.push_back(std::nullopt);
                        continue;
                    }
                }
                built.push_back(std::nullopt);
                reasons.push_back(reason);
            }
            for (auto & id : line_check_ids) {
                if (! selected(sweep, id))
                    continue;
                for (std::size_t i = 0 ; i < sweep.line.size() ; ++i)
                    report.checks.push_back(built[i] ? run_line_check(id, built[i]->model, built[i]->line)
                            : skipped_check(id, sweep.line[i], *reasons[i]));
            }
        }

        if (sweep.oracle_corpus && selected(sweep, oracle_check_id))
            report.checks.push_back(check_oracle_equivalence(sweep.seed));

        return report;
    }

    namespace
    {
        const char * limitations =
            "Models are finite: X is a finite discrete space and each zero-set class holds m functions. "
            "Only existence-direction conclusions (a witness path, cycle, dominating set or chordless cycle found in the model) "
            "transfer to the infinite graph; failures to find a witness, chordality and complementedness are statements about "
            "the model only.";

        auto check_name(const TheoremCheck & c) -> string
        {
            return c.id + (c.config ? " [" + c.config->to_string() + "]" : "");
        }
    }

    auto to_json(const VerificationReport & report) -> Json
    {
        Json gamma = Json::array(), line = Json::array();
        for (auto & cfg : report.sweep.gamma)
            gamma.push_back(config_json(cfg));
        for (auto & cfg : report.sweep.line)
            line.push_back(config_json(cfg));

        Json anomalies = Json::array();
        for (auto & code : report.anomaly_codes()) {
            Json where = Json::array();
            for (auto & c : report.checks)
                if (c.anomaly == code)
                    where.push_back(check_name(c));
            anomalies.push_back(Json{{"code", code}, {"description", anomaly_description(code)}, {"checks", where}});
        }

        Json checks = Json::array();
        for (auto & c : report.checks)
            checks.push_back(to_json(c));

        return Json{
            {"schema_version", report_schema_version},
            {"toolkit", {{"name", "zsig"}, {"version", report.toolkit_version}}},
            {"limitations", limitations},
            {"sweep", {{"gamma", gamma}, {"line", line}, {"theorems", report.sweep.theorems},
                {"seed", report.sweep.seed}, {"oracle_corpus", report.sweep.oracle_corpus}}},
            {"summary", {{"checks", report.checks.size()},
                {"pass", report.count(Status::pass)},
                {"fail", report.count(Status::fail)},
                {"anomaly", report.count(Status::anomaly)},
                {"hypothesis_violation", report.count(Status::hypothesis_violation)},
                {"skipped", report.count(Status::skipped)}}},
            {"anomalies", anomalies},
            {"checks", checks}};
    }

    auto to_markdown(const VerificationReport & report) -> string
    {
        std::ostringstream out;
        out << "# zsig verification report\n\n";
        out << "Toolkit version " << report.toolkit_version << ", report schema " << report_schema_version << ".\n\n";
        out << "> " << limitations << "\n\n";

        out << "## Summary\n\n";
        out << "| status | count |\n|---|---|\n";
        for (auto s : {Status::pass, Status::fail, Status::anomaly, Status::hypothesis_violation, Status::skipped})
            out << "| " << to_string(s) << " | " << report.count(s) << " |\n";
        out << "\n";

        auto codes = report.anomaly_codes();
        if (! codes.empty()) {
            out << "## Anomalies\n\n";
            for (auto & code : codes)
                out << "- **" << code << "**: " << anomaly_description(code) << "\n";
            out << "\n";
        }

        out << "## Checks\n\n";
        out << "| check | covers | config | status | hypothesis met | note |\n|---|---|---|---|---|---|\n";
        for (auto & c : report.checks) {
            string covers;
            for (auto & t : c.covers)
                covers += (covers.empty() ? "" : ", ") + t;
            string status = to_string(c.status);
            if (c.anomaly)
                status += " (" + *c.anomaly + ")";
            out << "| " << c.id << " | " << covers << " | " << (c.config ? c.config->to_string() : "-") << " | "
                << status << " | " << (c.hypothesis_met ? "yes" : "no") << " | " << c.note << " |\n";
        }

        out << "\n## Observations\n\n";
        for (auto & c : report.checks) {
            out << "### " << check_name(c) << "\n\n";
            if (! c.claim.empty())
                out << "Claim: " << c.claim << "\n\n";
            out << "```json\n" << c.observed.dump() << "\n```\n\n";
            for (auto & w : c.witness)
                out << "- " << w["graph"].get<string>() << " " << w["kind"].get<string>() << ": "
                    << w["labels"].dump() << "\n";
            if (! c.witness.empty())
                out << "\n";
        }
        return out.str();
    }
}
