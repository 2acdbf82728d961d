#ifndef ZSIG_ZEROSET_MODEL_HH
#define ZSIG_ZEROSET_MODEL_HH

#include <zsig/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zsig
{
    using PointMask = std::uint32_t;

    /// The discrete space {0, ..., n-1}.
    class FiniteSpace
    {
        private:
            int _n;

        public:
            static constexpr int max_points = 16;

            /// Throws std::invalid_argument unless 1 <= n <= max_points.
            explicit FiniteSpace(int n);

            auto size() const -> int
            {
                return _n;
            }

            auto full() const -> PointMask
            {
                return (PointMask{1} << _n) - 1;
            }

            auto operator== (const FiniteSpace &) const -> bool = default;
    };

    /// A nonempty set of points: the zero set of some non-unit.
    class ZeroSet
    {
        private:
            PointMask _members;

        public:
            /// Throws std::invalid_argument if empty or not inside the space.
            ZeroSet(PointMask members, const FiniteSpace & space);

            auto members() const -> PointMask
            {
                return _members;
            }

            auto meets(const ZeroSet & other) const -> bool
            {
                return (_members & other._members) != 0;
            }

            auto is_full(const FiniteSpace & space) const -> bool
            {
                return _members == space.full();
            }

            /// Ascending comma-joined point list, e.g. "0,2".
            auto to_string() const -> std::string;

            auto operator<=> (const ZeroSet &) const = default;
    };

    /**
     * One function of the model: a zero-set class together with a copy index
     * standing for distinct scalar multiples f, 2f, 3f, ... that share the same
     * zero set. Only the zero function has the full space as its zero set, so
     * that class has a single copy.
     */
    struct FunctionVertex
    {
        ZeroSet zero_set;
        int copy = 1;

        /// "S:k", e.g. "0,2:3".
        auto label() const -> std::string;

        auto operator<=> (const FunctionVertex &) const = default;
    };

    struct ModelConfig
    {
        int n = 3;
        int m = 4;
        bool include_zero = false;

        /// Throws std::invalid_argument for n outside [1, 16] or m < 1.
        auto validate() const -> void;

        /// (2^n - 2) * m, plus one for the zero function.
        auto vertex_count() const -> long;

        auto space() const -> FiniteSpace
        {
            return FiniteSpace{n};
        }

        /// "n=3,m=2" with ",zero" appended in include-zero mode.
        auto to_string() const -> std::string;

        auto operator== (const ModelConfig &) const -> bool = default;
    };

    /// Nonempty proper subsets by bitmask, each with copies 1..m; then the full set once if requested.
    auto enumerate_vertices(const ModelConfig & config) -> std::vector<FunctionVertex>;

    /// Distinct functions whose zero sets meet.
    auto adjacent(const FunctionVertex & u, const FunctionVertex & v) -> bool;

    /// X \ s, or none when s = X.
    auto complement_class(const ZeroSet & s, const FiniteSpace & space) -> std::optional<ZeroSet>;

    /// Parses "S:k"; throws std::invalid_argument on malformed input.
    auto parse_function_label(const std::string & label, const FiniteSpace & space) -> FunctionVertex;

    /// The graph of the model together with the function behind every vertex id.
    class GammaModel
    {
        private:
            ModelConfig _config;
            std::vector<FunctionVertex> _vertices;
            Graph _graph;

        public:
            GammaModel(ModelConfig config, std::vector<FunctionVertex> vertices, Graph graph);

            auto config() const -> const ModelConfig &
            {
                return _config;
            }

            auto space() const -> FiniteSpace
            {
                return _config.space();
            }

            auto graph() const -> const Graph &
            {
                return _graph;
            }

            auto vertices() const -> const std::vector<FunctionVertex> &
            {
                return _vertices;
            }

            auto vertex(VertexId v) const -> const FunctionVertex &;

            auto zero_set(VertexId v) const -> PointMask
            {
                return vertex(v).zero_set.members();
            }

            auto id_of(const FunctionVertex & f) const -> std::optional<VertexId>;

            /// Throws std::invalid_argument for an unparseable or absent label.
            auto id_of_label(const std::string & label) const -> VertexId;

            auto zero_vertex() const -> std::optional<VertexId>;

            /// Copy 1 of the class, if that class exists in the model.
            auto first_of_class(PointMask members) const -> std::optional<VertexId>;
    };

    auto build_gamma(const ModelConfig & config) -> GammaModel;
}

#endif
