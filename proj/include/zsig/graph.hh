#ifndef ZSIG_GRAPH_HH
#define ZSIG_GRAPH_HH

#include <zsig/bitset.hh>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zsig
{
    using VertexId = int;
    using Edge = std::pair<VertexId, VertexId>;

    /**
     * A nonnegative path length, or infinity when no path exists. Infinity
     * compares greater than every finite value.
     */
    class Distance
    {
        private:
            int _value = 0;
            bool _finite = true;

            constexpr Distance(int value, bool finite) : _value(value), _finite(finite) { }

        public:
            constexpr Distance() = default;
            constexpr explicit Distance(int value) : _value(value), _finite(true) { }

            static constexpr auto infinity() -> Distance
            {
                return Distance{0, false};
            }

            constexpr auto is_finite() const -> bool
            {
                return _finite;
            }

            /// Only meaningful when finite.
            constexpr auto value() const -> int
            {
                return _value;
            }

            constexpr auto operator<=> (const Distance & other) const -> std::strong_ordering
            {
                if (_finite != other._finite)
                    return _finite ? std::strong_ordering::less : std::strong_ordering::greater;
                if (! _finite)
                    return std::strong_ordering::equal;
                return _value <=> other._value;
            }

            constexpr auto operator== (const Distance & other) const -> bool
            {
                return (*this <=> other) == std::strong_ordering::equal;
            }

            constexpr auto operator== (int other) const -> bool
            {
                return _finite && _value == other;
            }

            /// "inf" or the decimal value.
            auto to_string() const -> std::string;
    };

    /**
     * Immutable simple undirected graph with string vertex labels. Adjacency is
     * stored both as sorted neighbour lists and as bitset rows.
     */
    class Graph
    {
        private:
            std::vector<std::string> _labels;
            std::vector<std::vector<VertexId>> _neighbours;
            std::vector<Bitset> _rows;
            std::vector<Edge> _edges;

        public:
            Graph() = default;

            /// Throws std::invalid_argument on loops, duplicate edges or out-of-range ids.
            Graph(std::vector<std::string> labels, std::span<const Edge> edges);

            auto vertex_count() const -> int
            {
                return int(_labels.size());
            }

            auto edge_count() const -> int
            {
                return int(_edges.size());
            }

            auto label(VertexId v) const -> const std::string &;

            auto labels() const -> const std::vector<std::string> &
            {
                return _labels;
            }

            auto neighbours(VertexId v) const -> std::span<const VertexId>;

            auto degree(VertexId v) const -> int;

            auto adjacent(VertexId u, VertexId v) const -> bool;

            auto row(VertexId v) const -> const Bitset &;

            /// Edges as (u, v) with u < v, in lexicographic order.
            auto edges() const -> const std::vector<Edge> &
            {
                return _edges;
            }

            auto find_label(const std::string & label) const -> std::optional<VertexId>;

            /// Throws std::out_of_range for an unknown vertex.
            auto check_vertex(VertexId v) const -> void;
    };

    /// Ordered vertex sequence u = p0, ..., pk = v.
    struct PathWitness
    {
        std::vector<VertexId> vertices;

        auto length() const -> int
        {
            return vertices.empty() ? 0 : int(vertices.size()) - 1;
        }
    };

    /// Closed vertex sequence; the edge from the last vertex back to the first is implied.
    struct CycleWitness
    {
        std::vector<VertexId> vertices;

        auto length() const -> int
        {
            return int(vertices.size());
        }
    };

    /// Consecutive vertices adjacent, all vertices distinct.
    auto is_valid_path(const Graph & g, const PathWitness & path) -> bool;

    /// Length at least three, cyclically consecutive vertices adjacent, all vertices distinct.
    auto is_valid_cycle(const Graph & g, const CycleWitness & cycle) -> bool;

    /// A valid cycle of length at least four with no edge between non-consecutive vertices.
    auto is_chordless_cycle(const Graph & g, const CycleWitness & cycle) -> bool;

    auto labels_of(const Graph & g, std::span<const VertexId> vertices) -> std::vector<std::string>;
}

#endif
