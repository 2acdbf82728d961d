#include <zsig/line_graph.hh>

#include <algorithm>
#include <stdexcept>

using std::invalid_argument;
using std::optional;
using std::string;
using std::vector;

namespace zsig
{
    auto EdgeVertex::make(VertexId a, VertexId b) -> EdgeVertex
    {
        if (a == b)
            throw invalid_argument("an edge needs two distinct endpoints");
        return EdgeVertex{std::min(a, b), std::max(a, b)};
    }

    auto shares_endpoint(const EdgeVertex & e1, const EdgeVertex & e2) -> bool
    {
        if (e1 == e2)
            throw invalid_argument("shares_endpoint needs two distinct edges");
        return e1.first == e2.first || e1.first == e2.second
            || e1.second == e2.first || e1.second == e2.second;
    }

    LineGraph::LineGraph(vector<EdgeVertex> edge_vertices, Graph graph, int base_vertex_count) :
        _edge_vertices(std::move(edge_vertices)),
        _graph(std::move(graph)),
        _base_vertex_count(base_vertex_count)
    {
    }

    auto LineGraph::edge_vertex(VertexId v) const -> const EdgeVertex &
    {
        _graph.check_vertex(v);
        return _edge_vertices[v];
    }

    auto LineGraph::id_of(const EdgeVertex & e) const -> optional<VertexId>
    {
        auto it = std::lower_bound(_edge_vertices.begin(), _edge_vertices.end(), e);
        if (it == _edge_vertices.end() || *it != e)
            return std::nullopt;
        return VertexId(it - _edge_vertices.begin());
    }

    auto build_line_graph(const Graph & g) -> LineGraph
    {
        vector<EdgeVertex> edge_vertices;
        vector<string> labels;
        vector<vector<VertexId>> incident(g.vertex_count());
        edge_vertices.reserve(g.edge_count());
        labels.reserve(g.edge_count());

        for (auto [a, b] : g.edges()) {
            VertexId id = VertexId(edge_vertices.size());
            edge_vertices.push_back(EdgeVertex{a, b});
            labels.push_back("[" + g.label(a) + "|" + g.label(b) + "]");
            incident[a].push_back(id);
            incident[b].push_back(id);
        }

        // two distinct edges of a simple graph share at most one endpoint, so
        // each line-graph edge is produced exactly once
        vector<Edge> line_edges;
        for (auto & at : incident)
            for (std::size_t i = 0 ; i < at.size() ; ++i)
                for (std::size_t j = i + 1 ; j < at.size() ; ++j)
                    line_edges.emplace_back(at[i], at[j]);

        Graph line{std::move(labels), line_edges};
        return LineGraph{std::move(edge_vertices), std::move(line), g.vertex_count()};
    }

    auto cross_zero_pattern(const GammaModel & model, const EdgeVertex & e1, const EdgeVertex & e2) -> CrossPattern
    {
        int n = model.graph().vertex_count();
        for (auto v : {e1.first, e1.second, e2.first, e2.second})
            if (v < 0 || v >= n)
                throw invalid_argument("edge endpoint " + std::to_string(v) + " is not a vertex of model " + model.config().to_string());

        std::array<PointMask, 2> f{model.zero_set(e1.first), model.zero_set(e1.second)};
        std::array<PointMask, 2> g{model.zero_set(e2.first), model.zero_set(e2.second)};
        CrossPattern result{};
        for (int i = 0 ; i < 2 ; ++i)
            for (int j = 0 ; j < 2 ; ++j)
                result[i][j] = (f[i] & g[j]) != 0;
        return result;
    }

    auto true_entries(const CrossPattern & pattern) -> int
    {
        int count = 0;
        for (auto & row : pattern)
            for (auto entry : row)
                count += entry;
        return count;
    }
}
