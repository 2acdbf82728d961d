#ifndef ZSIG_EXPORT_HH
#define ZSIG_EXPORT_HH

#include <zsig/graph.hh>
#include <zsig/line_graph.hh>
#include <zsig/zeroset_model.hh>

#include <json.hpp>

#include <string>

namespace zsig
{
    using Json = nlohmann::ordered_json;

    /// Integer, or the string "inf".
    auto to_json(const Distance & d) -> Json;

    /// Graphviz "graph" document; node ids are vertex ids, labels are quoted.
    auto to_dot(const Graph & g, const std::string & name) -> std::string;

    /// {"vertices": [labels], "edges": [[i, j], ...]} with i < j.
    auto graph_to_json(const Graph & g) -> Json;

    /// Model descriptor: {"n", "m", "include_zero", "vertices", "edges"}.
    auto model_to_json(const GammaModel & model) -> Json;

    /// Line-graph descriptor: {"kind": "line", "n", "m", "include_zero", "vertices", "edges"}.
    auto line_graph_to_json(const GammaModel & model, const LineGraph & line) -> Json;

    /// Reads "vertices" and "edges" from any of the descriptors above.
    auto graph_from_json(const Json & document) -> Graph;

    /**
     * Diameter, radius, girth, chordality, triangulation, domination number and
     * complementedness of g, with witnesses as label sequences.
     */
    auto invariant_report(const Graph & g, int max_k = 3) -> Json;
}

#endif
