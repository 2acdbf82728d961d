#ifndef ZSIG_LINE_GRAPH_HH
#define ZSIG_LINE_GRAPH_HH

#include <zsig/graph.hh>
#include <zsig/zeroset_model.hh>

#include <array>
#include <optional>
#include <vector>

namespace zsig
{
    /// An edge of the base graph used as a vertex of its line graph; first < second.
    struct EdgeVertex
    {
        VertexId first = 0;
        VertexId second = 0;

        /// Orders the endpoints; throws std::invalid_argument if a == b.
        static auto make(VertexId a, VertexId b) -> EdgeVertex;

        auto operator<=> (const EdgeVertex &) const = default;
    };

    /// Throws std::invalid_argument for identical edges.
    auto shares_endpoint(const EdgeVertex & e1, const EdgeVertex & e2) -> bool;

    /// The line graph together with the base edge behind every vertex.
    class LineGraph
    {
        private:
            std::vector<EdgeVertex> _edge_vertices;
            Graph _graph;
            int _base_vertex_count;

        public:
            LineGraph(std::vector<EdgeVertex> edge_vertices, Graph graph, int base_vertex_count);

            auto graph() const -> const Graph &
            {
                return _graph;
            }

            auto edge_vertex(VertexId v) const -> const EdgeVertex &;

            auto edge_vertices() const -> const std::vector<EdgeVertex> &
            {
                return _edge_vertices;
            }

            auto base_vertex_count() const -> int
            {
                return _base_vertex_count;
            }

            auto id_of(const EdgeVertex & e) const -> std::optional<VertexId>;
    };

    /// Vertices are the base edges in lexicographic order, labelled "[a|b]" from the base labels.
    auto build_line_graph(const Graph & g) -> LineGraph;

    /// entry[i][j] says whether Z(f_i) meets Z(g_j), for e1 = [f_1, f_2] and e2 = [g_1, g_2].
    using CrossPattern = std::array<std::array<bool, 2>, 2>;

    /// Throws std::invalid_argument if an endpoint is not a vertex of the model.
    auto cross_zero_pattern(const GammaModel & model, const EdgeVertex & e1, const EdgeVertex & e2) -> CrossPattern;

    auto true_entries(const CrossPattern & pattern) -> int;
}

#endif
