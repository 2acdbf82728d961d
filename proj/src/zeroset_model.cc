#include <zsig/zeroset_model.hh>

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

using std::invalid_argument;
using std::optional;
using std::string;
using std::vector;

namespace zsig
{
    namespace
    {
        constexpr long max_model_vertices = 20000;
    }

    FiniteSpace::FiniteSpace(int n) :
        _n(n)
    {
        if (n < 1 || n > max_points)
            throw invalid_argument("space size must lie in [1, " + std::to_string(max_points) + "], got " + std::to_string(n));
    }

    ZeroSet::ZeroSet(PointMask members, const FiniteSpace & space) :
        _members(members)
    {
        if (members == 0)
            throw invalid_argument("a zero set of a non-unit is nonempty");
        if (members & ~space.full())
            throw invalid_argument("zero set has points outside the space");
    }

    auto ZeroSet::to_string() const -> string
    {
        string result;
        for (PointMask m = _members ; m ; m &= m - 1) {
            if (! result.empty())
                result += ',';
            result += std::to_string(std::countr_zero(m));
        }
        return result;
    }

    auto FunctionVertex::label() const -> string
    {
        return zero_set.to_string() + ":" + std::to_string(copy);
    }

    auto ModelConfig::validate() const -> void
    {
        FiniteSpace check{n};
        if (m < 1)
            throw invalid_argument("class multiplicity must be at least 1, got " + std::to_string(m));
    }

    auto ModelConfig::vertex_count() const -> long
    {
        return ((long{1} << n) - 2) * m + (include_zero ? 1 : 0);
    }

    auto ModelConfig::to_string() const -> string
    {
        return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + (include_zero ? ",zero" : "");
    }

    auto enumerate_vertices(const ModelConfig & config) -> vector<FunctionVertex>
    {
        config.validate();
        if (config.vertex_count() > max_model_vertices)
            throw std::length_error("model " + config.to_string() + " has more than "
                    + std::to_string(max_model_vertices) + " vertices");

        auto space = config.space();
        vector<FunctionVertex> result;
        result.reserve(config.vertex_count());
        for (PointMask s = 1 ; s < space.full() ; ++s)
            for (int k = 1 ; k <= config.m ; ++k)
                result.push_back(FunctionVertex{ZeroSet{s, space}, k});
        if (config.include_zero)
            result.push_back(FunctionVertex{ZeroSet{space.full(), space}, 1});
        return result;
    }

    auto adjacent(const FunctionVertex & u, const FunctionVertex & v) -> bool
    {
        return u != v && u.zero_set.meets(v.zero_set);
    }

    auto complement_class(const ZeroSet & s, const FiniteSpace & space) -> optional<ZeroSet>
    {
        PointMask rest = space.full() & ~s.members();
        if (rest == 0)
            return std::nullopt;
        return ZeroSet{rest, space};
    }

    auto parse_function_label(const string & label, const FiniteSpace & space) -> FunctionVertex
    {
        auto fail = [&] () -> FunctionVertex {
            throw invalid_argument("malformed function label '" + label + "', expected e.g. \"0,2:1\"");
        };

        auto colon = label.find(':');
        if (colon == string::npos || colon == 0)
            return fail();

        auto parse_int = [&] (std::string_view text) -> optional<int> {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                return std::nullopt;
            return value;
        };

        PointMask members = 0;
        int last = -1;
        std::string_view points{label.data(), colon};
        while (! points.empty()) {
            auto comma = points.find(',');
            auto point = parse_int(points.substr(0, comma));
            // points must be strictly ascending
            if (! point || *point <= last || *point >= space.size())
                return fail();
            last = *point;
            members |= PointMask{1} << *point;
            if (comma == std::string_view::npos)
                break;
            points.remove_prefix(comma + 1);
            if (points.empty())
                return fail();
        }

        auto copy = parse_int(std::string_view{label}.substr(colon + 1));
        if (! copy || *copy < 1 || members == 0)
            return fail();
        return FunctionVertex{ZeroSet{members, space}, *copy};
    }

    GammaModel::GammaModel(ModelConfig config, vector<FunctionVertex> vertices, Graph graph) :
        _config(config),
        _vertices(std::move(vertices)),
        _graph(std::move(graph))
    {
    }

    auto GammaModel::vertex(VertexId v) const -> const FunctionVertex &
    {
        _graph.check_vertex(v);
        return _vertices[v];
    }

    auto GammaModel::id_of(const FunctionVertex & f) const -> optional<VertexId>
    {
        auto it = std::lower_bound(_vertices.begin(), _vertices.end(), f);
        if (it == _vertices.end() || *it != f)
            return std::nullopt;
        return VertexId(it - _vertices.begin());
    }

    auto GammaModel::id_of_label(const string & label) const -> VertexId
    {
        auto id = id_of(parse_function_label(label, space()));
        if (! id)
            throw invalid_argument("no vertex '" + label + "' in model " + _config.to_string());
        return *id;
    }

    auto GammaModel::zero_vertex() const -> optional<VertexId>
    {
        if (! _config.include_zero)
            return std::nullopt;
        return VertexId(_vertices.size() - 1);
    }

    auto GammaModel::first_of_class(PointMask members) const -> optional<VertexId>
    {
        if (members == 0 || (members & ~space().full()))
            return std::nullopt;
        return id_of(FunctionVertex{ZeroSet{members, space()}, 1});
    }

    auto build_gamma(const ModelConfig & config) -> GammaModel
    {
        auto vertices = enumerate_vertices(config);
        vector<string> labels;
        labels.reserve(vertices.size());
        for (auto & f : vertices)
            labels.push_back(f.label());

        vector<Edge> edges;
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            for (std::size_t j = i + 1 ; j < vertices.size() ; ++j)
                if (adjacent(vertices[i], vertices[j]))
                    edges.emplace_back(int(i), int(j));

        Graph graph{std::move(labels), edges};
        return GammaModel{config, std::move(vertices), std::move(graph)};
    }
}
