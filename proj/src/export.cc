#include <zsig/export.hh>

#include <zsig/chordal.hh>
#include <zsig/invariants.hh>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using std::string;
using std::vector;

namespace zsig
{
    auto to_json(const Distance & d) -> Json
    {
        if (d.is_finite())
            return d.value();
        return "inf";
    }

    namespace
    {
        auto quoted(const string & s) -> string
        {
            string result = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }

        auto labels_json(const Graph & g, std::span<const VertexId> vs) -> Json
        {
            return Json(labels_of(g, vs));
        }
    }

    auto to_dot(const Graph & g, const string & name) -> string
    {
        std::ostringstream out;
        out << "graph " << quoted(name) << " {\n";
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
            out << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
        for (auto [a, b] : g.edges())
            out << "  " << a << " -- " << b << ";\n";
        out << "}\n";
        return out.str();
    }

    auto graph_to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [a, b] : g.edges())
            edges.push_back({a, b});
        return Json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
    }

    auto model_to_json(const GammaModel & model) -> Json
    {
        auto body = graph_to_json(model.graph());
        return Json{
            {"n", model.config().n},
            {"m", model.config().m},
            {"include_zero", model.config().include_zero},
            {"vertices", std::move(body["vertices"])},
            {"edges", std::move(body["edges"])}};
    }

    auto line_graph_to_json(const GammaModel & model, const LineGraph & line) -> Json
    {
        auto body = graph_to_json(line.graph());
        return Json{
            {"kind", "line"},
            {"n", model.config().n},
            {"m", model.config().m},
            {"include_zero", model.config().include_zero},
            {"vertices", std::move(body["vertices"])},
            {"edges", std::move(body["edges"])}};
    }

    auto graph_from_json(const Json & document) -> Graph
    {
        if (! document.is_object() || ! document.contains("vertices") || ! document.contains("edges"))
            throw std::invalid_argument("graph document needs \"vertices\" and \"edges\"");
        try {
            auto labels = document.at("vertices").get<vector<string>>();
            vector<Edge> edges;
            for (auto & e : document.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw std::invalid_argument("each edge must be a pair of vertex indices");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            return Graph{std::move(labels), edges};
        }
        catch (const nlohmann::json::exception & e) {
            throw std::invalid_argument(string("malformed graph document: ") + e.what());
        }
    }

    auto invariant_report(const Graph & g, int max_k) -> Json
    {
        Json report;
        report["vertices"] = g.vertex_count();
        report["edges"] = g.edge_count();
        Json witnesses = Json::object();

        auto components = connected_components(g);
        report["connected"] = components.size() <= 1;
        report["components"] = components.size();
        if (g.vertex_count() > 0) {
            auto ecc = eccentricities(g);
            report["diameter"] = to_json(*std::max_element(ecc.begin(), ecc.end()));
            report["radius"] = to_json(*std::min_element(ecc.begin(), ecc.end()));
            auto centre = VertexId(std::min_element(ecc.begin(), ecc.end()) - ecc.begin());
            witnesses["centre"] = g.label(centre);
        }
        else {
            report["diameter"] = nullptr;
            report["radius"] = nullptr;
        }

        report["girth"] = to_json(girth(g));
        if (auto cycle = shortest_cycle(g))
            witnesses["girth_cycle"] = labels_json(g, cycle->vertices);

        auto chordality = is_chordal(g);
        report["chordal"] = chordality.chordal;
        if (chordality.chordal)
            witnesses["elimination_order"] = labels_json(g, chordality.elimination_order);
        else if (chordality.hole)
            witnesses["chordless_cycle"] = labels_json(g, chordality.hole->vertices);

        auto tri = is_triangulated(g);
        report["triangulated"] = tri.holds;
        auto hyper = is_hypertriangulated(g);
        report["hypertriangulated"] = hyper.holds;
        if (hyper.failing_edge)
            witnesses["edge_outside_triangles"] = Json{g.label(hyper.failing_edge->first), g.label(hyper.failing_edge->second)};

        auto dom = domination_number(g, max_k);
        if (dom.number) {
            report["domination_number"] = *dom.number;
            witnesses["dominating_set"] = labels_json(g, dom.witness);
        }
        else
            report["domination_number"] = "> " + std::to_string(max_k);

        auto comp = is_complemented(g);
        report["complemented"] = comp.holds;
        if (comp.failing_vertex)
            witnesses["vertex_without_orthogonal_partner"] = g.label(*comp.failing_vertex);

        report["witnesses"] = std::move(witnesses);
        return report;
    }
}
