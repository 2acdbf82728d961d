#include "verifier_support.hh"

#include <zsig/chordal.hh>
#include <zsig/cycles.hh>
#include <zsig/invariants.hh>

#include <algorithm>
#include <map>

using std::optional;
using std::string;
using std::vector;

namespace zsig
{
    using namespace detail;

    namespace
    {
        auto meets(const GammaModel & model, VertexId u, VertexId v) -> bool
        {
            return (model.zero_set(u) & model.zero_set(v)) != 0;
        }

        auto covers_space(const GammaModel & model, VertexId u, VertexId v) -> bool
        {
            return (model.zero_set(u) | model.zero_set(v)) == model.space().full();
        }

        auto is_clique(const Graph & g, const vector<VertexId> & vs) -> bool
        {
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < vs.size() ; ++j)
                    if (! g.adjacent(vs[i], vs[j]))
                        return false;
            return true;
        }

        auto first_common_neighbour(const Graph & g, VertexId u, VertexId v) -> optional<VertexId>
        {
            auto common = g.row(u);
            common.intersect_with(g.row(v));
            auto w = common.first_set();
            if (w < 0)
                return std::nullopt;
            return w;
        }

        // For f, the first g with a disjoint zero set such that {f, g} dominates.
        auto disjoint_dominating_partner(const GammaModel & model, VertexId f) -> optional<VertexId>
        {
            auto & g = model.graph();
            for (VertexId h = 0 ; h < g.vertex_count() ; ++h) {
                if (h == f || meets(model, f, h))
                    continue;
                VertexId pair[] = {f, h};
                if (dominates(g, pair))
                    return h;
            }
            return std::nullopt;
        }
    }

    auto check_connectivity_diameter(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T2.1", covers_of("T2.1"), cfg,
                "connected with diameter 2 if and only if |X| > 2",
                "|X| >= 2; the |X| = 2 branch reads the vertex set without the zero function", true);

        auto components = connected_components(g);
        bool connected = components.size() <= 1;
        auto diam = g.vertex_count() > 0 ? diameter(g) : Distance::infinity();
        c.observed = Json{{"vertices", g.vertex_count()}, {"components", components.size()},
            {"connected", connected}, {"diameter", to_json(diam)}};

        if (cfg.n > 2) {
            bool witness_ok = true;
            // a pair with disjoint zero sets and its length-2 path
            for (VertexId u = 0 ; u < g.vertex_count() && c.witness.empty() ; ++u)
                for (VertexId v = u + 1 ; v < g.vertex_count() ; ++v)
                    if (! g.adjacent(u, v)) {
                        auto path = shortest_path(g, u, v);
                        witness_ok = path && is_valid_path(g, *path) && path->length() == 2;
                        if (path)
                            c.witness.push_back(witness("gamma", "path", g, path->vertices));
                        break;
                    }
            resolve(c, connected && diam == 2 && witness_ok);
            return c;
        }

        if (! cfg.include_zero) {
            bool cliques = components.size() == 2;
            for (auto & comp : components) {
                cliques = cliques && int(comp.size()) == cfg.m && is_clique(g, comp);
                c.witness.push_back(witness("gamma", "component", g, comp));
            }
            resolve(c, ! connected && ! diam.is_finite() && cliques);
            return c;
        }

        // |X| = 2 with the zero function: {0} and {1} classes both meet the zero function.
        auto zero = *model.zero_vertex();
        auto a = model.first_of_class(0b01), b = model.first_of_class(0b10);
        if (connected && a && b) {
            PathWitness path{{*a, zero, *b}};
            if (is_valid_path(g, path)) {
                c.witness.push_back(witness("gamma", "path", g, path.vertices));
                mark_anomaly(c, "A1");
                return c;
            }
        }
        c.status = Status::fail;
        return c;
    }

    auto check_common_neighbor(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("C2.2", covers_of("C2.2"), cfg,
                "for |X| > 2 every two distinct vertices have a common neighbour",
                "|X| > 2 and m >= 3 (the 2f, 3f witnesses)", cfg.n > 2 && cfg.m >= 3);

        long pairs = 0, failing = 0;
        optional<Edge> first_failure;
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u)
            for (VertexId v = u + 1 ; v < g.vertex_count() ; ++v) {
                ++pairs;
                auto w = first_common_neighbour(g, u, v);
                if (! w) {
                    ++failing;
                    if (! first_failure)
                        first_failure = Edge{u, v};
                }
                else if (c.witness.empty()) {
                    PathWitness path{{u, *w, v}};
                    if (is_valid_path(g, path))
                        c.witness.push_back(witness("gamma", "path", g, path.vertices));
                }
            }

        c.observed = Json{{"pairs", pairs}, {"pairs_without_common_neighbour", failing}};
        if (first_failure) {
            VertexId pair[] = {first_failure->first, first_failure->second};
            c.witness.push_back(witness("gamma", "pair", g, pair));
        }
        resolve(c, failing == 0);
        return c;
    }

    auto check_distance_characterization(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("C2.3", covers_of("C2.3"), cfg,
                "d(f, g) = 1 iff Z(f) and Z(g) meet; d(f, g) = 2 iff they are disjoint",
                "|X| > 2", cfg.n > 2);

        auto dist = all_pairs_distances(g);
        long pairs = 0, mismatches = 0, at_one = 0, at_two = 0;
        Json first_mismatch = nullptr;
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u)
            for (VertexId v = u + 1 ; v < g.vertex_count() ; ++v) {
                ++pairs;
                int expected = meets(model, u, v) ? 1 : 2;
                int d = dist[u][v];
                at_one += d == 1;
                at_two += d == 2;
                if (d != expected) {
                    ++mismatches;
                    if (first_mismatch.is_null())
                        first_mismatch = Json{{"pair", {g.label(u), g.label(v)}}, {"expected", expected},
                            {"observed", d < 0 ? Json("inf") : Json(d)}};
                }
                else if (d == 2 && c.witness.empty()) {
                    auto path = shortest_path(g, u, v);
                    if (path && is_valid_path(g, *path))
                        c.witness.push_back(witness("gamma", "path", g, path->vertices));
                }
            }

        c.observed = Json{{"pairs", pairs}, {"distance_1", at_one}, {"distance_2", at_two},
            {"mismatches", mismatches}, {"first_mismatch", first_mismatch}};
        resolve(c, mismatches == 0);
        return c;
    }

    auto check_radius(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T2.4", covers_of("T2.4"), cfg, "Rad = 2 for |X| > 2",
                "|X| > 2, zero function excluded", cfg.n > 2 && ! cfg.include_zero);

        auto ecc = eccentricities(g);
        auto rad = *std::min_element(ecc.begin(), ecc.end());
        auto rad_nonzero = Distance::infinity();
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
            if (v != model.zero_vertex())
                rad_nonzero = std::min(rad_nonzero, ecc[v]);
        c.observed = Json{{"radius", to_json(rad)}, {"radius_over_nonzero_vertices", to_json(rad_nonzero)}};

        if (cfg.include_zero) {
            auto zero = *model.zero_vertex();
            if (rad == 1 && ecc[zero] == 1) {
                VertexId centre[] = {zero};
                c.witness.push_back(witness("gamma", "vertex", g, centre));
                mark_anomaly(c, "A3");
            }
            else
                c.status = Status::fail;
            return c;
        }

        bool witness_ok = true;
        if (rad == 2) {
            // every vertex has a vertex at distance two: the complement class
            auto f = FunctionVertex{model.vertex(0)};
            auto partner = complement_class(f.zero_set, model.space());
            auto h = partner ? model.first_of_class(partner->members()) : std::nullopt;
            auto path = h ? shortest_path(g, 0, *h) : std::nullopt;
            witness_ok = path && is_valid_path(g, *path) && path->length() == 2;
            if (path)
                c.witness.push_back(witness("gamma", "path", g, path->vertices));
        }
        resolve(c, rad == 2 && witness_ok);
        return c;
    }

    auto check_triangulation(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T3.1", covers_of("T3.1"), cfg,
                "triangulated and hypertriangulated, with girth 3",
                "m >= 3 (the f, 2f, 3f triangle) or |X| >= 3", cfg.m >= 3 || cfg.n >= 3);

        auto tri = is_triangulated(g);
        auto hyper = is_hypertriangulated(g);
        auto gr = girth(g);
        c.observed = Json{{"triangulated", tri.holds}, {"hypertriangulated", hyper.holds}, {"girth", to_json(gr)}};
        if (tri.failing_vertex)
            c.observed["vertex_outside_triangles"] = g.label(*tri.failing_vertex);
        if (hyper.failing_edge)
            c.observed["edge_outside_triangles"] = Json{g.label(hyper.failing_edge->first), g.label(hyper.failing_edge->second)};

        bool witness_ok = true;
        if (auto cycle = shortest_cycle(g)) {
            witness_ok = is_valid_cycle(g, *cycle) && Distance{cycle->length()} == gr;
            c.witness.push_back(witness("gamma", "cycle", g, cycle->vertices));
        }
        resolve(c, tri.holds && hyper.holds && gr == 3 && witness_ok);
        return c;
    }

    auto check_cycle_pair_gamma(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T3.3", covers_of("T3.3"), cfg,
                "c(f, g) = 3 iff Z(f) and Z(g) meet; c(f, g) = 4 iff they are disjoint",
                "|X| >= 3 and m >= 2 (the h, 2h witnesses)", cfg.n >= 3 && cfg.m >= 2);

        DisjointPathSolver solver(g);
        long pairs = 0, mismatches = 0, bad_witnesses = 0;
        std::map<string, long> histogram;
        Json first_mismatch = nullptr;
        bool have_disjoint_witness = false;
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u)
            for (VertexId v = u + 1 ; v < g.vertex_count() ; ++v) {
                ++pairs;
                auto r = solver.solve(u, v);
                ++histogram[r.length.to_string()];
                if (r.witness) {
                    auto & vs = r.witness->vertices;
                    bool ok = is_valid_cycle(g, *r.witness) && Distance{r.witness->length()} == r.length
                        && std::find(vs.begin(), vs.end(), u) != vs.end() && std::find(vs.begin(), vs.end(), v) != vs.end();
                    bad_witnesses += ! ok;
                }
                int expected = g.adjacent(u, v) ? 3 : 4;
                if (! (r.length == expected)) {
                    ++mismatches;
                    if (first_mismatch.is_null()) {
                        first_mismatch = Json{{"pair", {g.label(u), g.label(v)}}, {"expected", expected},
                            {"observed", to_json(r.length)}};
                        if (r.witness)
                            c.witness.push_back(witness("gamma", "cycle", g, r.witness->vertices));
                    }
                }
                else if (expected == 4 && ! have_disjoint_witness && r.witness) {
                    have_disjoint_witness = true;
                    c.witness.push_back(witness("gamma", "cycle", g, r.witness->vertices));
                }
            }

        c.observed = Json{{"pairs", pairs}, {"cycle_length_histogram", histogram},
            {"mismatches", mismatches}, {"invalid_witnesses", bad_witnesses}, {"first_mismatch", first_mismatch}};
        resolve(c, mismatches == 0 && bad_witnesses == 0);
        return c;
    }

    auto check_chordality_gamma(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T3.4", covers_of("T3.4"), cfg, "chordal if and only if |X| <= 3", "|X| >= 2", true);

        auto ch = is_chordal(g);
        bool expected = cfg.n <= 3;
        c.observed = Json{{"chordal", ch.chordal}, {"expected_chordal", expected}};

        bool witness_ok = true;
        if (ch.chordal)
            witness_ok = ! first_elimination_failure(g, ch.elimination_order);
        else {
            witness_ok = ch.hole && is_chordless_cycle(g, *ch.hole);
            if (ch.hole) {
                c.observed["extracted_hole_length"] = ch.hole->length();
                c.witness.push_back(witness("gamma", "chordless_cycle", g, ch.hole->vertices));
            }
        }

        if (cfg.n >= 4) {
            // classes {0,3}, {0,1}, {1,2}, {2,3}: consecutive ones meet, opposite ones are disjoint
            CycleWitness square;
            for (PointMask s : {PointMask{0b1001}, PointMask{0b0011}, PointMask{0b0110}, PointMask{0b1100}})
                square.vertices.push_back(*model.first_of_class(s));
            bool square_ok = is_chordless_cycle(g, square);
            c.observed["four_class_square_chordless"] = square_ok;
            c.witness.push_back(witness("gamma", "chordless_cycle", g, square.vertices));
            witness_ok = witness_ok && square_ok;
        }

        resolve(c, ch.chordal == expected && witness_ok);
        return c;
    }

    auto check_complemented(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T3.5", covers_of("T3.5"), cfg,
                "not complemented; and complemented iff every f has a g with disjoint zero set and {f, g} dominating",
                "|X| >= 3 or m >= 3", cfg.n >= 3 || cfg.m >= 3);

        auto comp = is_complemented(g);
        long orthogonal_pairs = 0;
        for (auto [u, v] : g.edges())
            orthogonal_pairs += orthogonal(g, u, v);

        // right-hand condition, over the nonzero functions and over every vertex
        bool rhs_nonzero = true, rhs_all = true;
        for (VertexId f = 0 ; f < g.vertex_count() ; ++f) {
            bool has = disjoint_dominating_partner(model, f).has_value();
            rhs_all = rhs_all && has;
            if (f != model.zero_vertex())
                rhs_nonzero = rhs_nonzero && has;
        }

        c.observed = Json{{"complemented", comp.holds}, {"orthogonal_pairs", orthogonal_pairs},
            {"partner_condition_nonzero", rhs_nonzero}, {"partner_condition_all_vertices", rhs_all}};

        if (comp.failing_vertex) {
            VertexId lonely[] = {*comp.failing_vertex};
            c.witness.push_back(witness("gamma", "vertex", g, lonely));
            if (auto h = disjoint_dominating_partner(model, *comp.failing_vertex)) {
                VertexId pair[] = {*comp.failing_vertex, *h};
                c.witness.push_back(witness("gamma", "dominating_set", g, pair));
            }
        }

        if (comp.holds) {
            resolve(c, false);
            return c;
        }
        if (rhs_nonzero)
            mark_anomaly(c, "A2");
        else
            c.status = Status::pass;
        return c;
    }

    auto check_domination(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T4.1", covers_of("T4.1"), cfg,
                "domination number 2; {f, g} dominates iff Z(f) and Z(g) cover X",
                "|X| >= 2, zero function excluded", ! cfg.include_zero);

        long pairs = 0, mismatches = 0, dominating_pairs = 0;
        Json first_mismatch = nullptr;
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u)
            for (VertexId v = u + 1 ; v < g.vertex_count() ; ++v) {
                ++pairs;
                VertexId pair[] = {u, v};
                bool dom = dominates(g, pair);
                dominating_pairs += dom;
                if (dom != covers_space(model, u, v)) {
                    ++mismatches;
                    if (first_mismatch.is_null())
                        first_mismatch = Json{{"pair", {g.label(u), g.label(v)}}, {"dominates", dom}};
                }
            }

        auto dt = domination_number(g, 3);
        bool witness_dominates = dt.number && dominates(g, dt.witness);
        if (dt.number)
            c.witness.push_back(witness("gamma", "dominating_set", g, dt.witness));
        c.observed = Json{{"domination_number", dt.number ? Json(*dt.number) : Json("> 3")},
            {"pairs", pairs}, {"dominating_pairs", dominating_pairs}, {"pair_mismatches", mismatches},
            {"first_mismatch", first_mismatch}};

        if (mismatches != 0 || ! witness_dominates) {
            c.status = Status::fail;
            return c;
        }

        if (cfg.include_zero) {
            if (dt.number == 1 && dt.witness.front() == *model.zero_vertex())
                mark_anomaly(c, "A4");
            else
                c.status = Status::fail;
            return c;
        }

        bool complementary = dt.number == 2 && covers_space(model, dt.witness[0], dt.witness[1])
            && ! meets(model, dt.witness[0], dt.witness[1]);
        c.observed["complementary_witness"] = complementary;
        resolve(c, dt.number == 2 && complementary);
        return c;
    }

    auto check_vnr_condition(const GammaModel & model) -> TheoremCheck
    {
        auto & cfg = model.config();
        auto & g = model.graph();
        auto c = start_check("T4.3", covers_of("T4.3"), cfg,
                "every f has a g with Z(f) and Z(g) disjoint and {f, g} dominating (C(X) = R^n is von Neumann regular)",
                "finite discrete X, zero function excluded", ! cfg.include_zero);

        long without_partner = 0;
        optional<VertexId> first_without;
        for (VertexId f = 0 ; f < g.vertex_count() ; ++f) {
            auto h = disjoint_dominating_partner(model, f);
            if (! h) {
                ++without_partner;
                if (! first_without)
                    first_without = f;
                continue;
            }
            VertexId pair[] = {f, *h};
            c.witness.push_back(witness("gamma", "dominating_set", g, pair));
        }

        // Every zero set of a discrete space is open, and every non-unit f is a
        // zero divisor: the indicator of Z(f) is nonzero and annihilates f.
        c.observed = Json{{"vertices", g.vertex_count()}, {"vertices_without_partner", without_partner},
            {"zero_sets_open", true}, {"almost_regular", true}};
        if (first_without)
            c.observed["first_vertex_without_partner"] = g.label(*first_without);

        if (cfg.include_zero) {
            if (without_partner == 1 && first_without == model.zero_vertex())
                mark_anomaly(c, "A5");
            else
                c.status = Status::fail;
            return c;
        }
        resolve(c, without_partner == 0);
        return c;
    }
}
