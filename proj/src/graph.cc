#include <zsig/graph.hh>

#include <algorithm>

using std::invalid_argument;
using std::out_of_range;
using std::string;
using std::vector;

namespace zsig
{
    auto Distance::to_string() const -> string
    {
        return _finite ? std::to_string(_value) : "inf";
    }

    Graph::Graph(vector<string> labels, std::span<const Edge> edges) :
        _labels(std::move(labels)),
        _neighbours(_labels.size()),
        _rows(_labels.size(), Bitset(int(_labels.size())))
    {
        int n = vertex_count();
        _edges.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
            if (a == b)
                throw invalid_argument("loop at vertex " + std::to_string(a));
            if (_rows[a].test(b))
                throw invalid_argument("duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            _rows[a].set(b);
            _rows[b].set(a);
            _edges.emplace_back(std::min(a, b), std::max(a, b));
        }

        std::sort(_edges.begin(), _edges.end());
        for (auto [a, b] : _edges) {
            _neighbours[a].push_back(b);
            _neighbours[b].push_back(a);
        }
        for (auto & n : _neighbours)
            std::sort(n.begin(), n.end());
    }

    auto Graph::check_vertex(VertexId v) const -> void
    {
        if (v < 0 || v >= vertex_count())
            throw out_of_range("unknown vertex " + std::to_string(v));
    }

    auto Graph::label(VertexId v) const -> const string &
    {
        check_vertex(v);
        return _labels[v];
    }

    auto Graph::neighbours(VertexId v) const -> std::span<const VertexId>
    {
        check_vertex(v);
        return _neighbours[v];
    }

    auto Graph::degree(VertexId v) const -> int
    {
        check_vertex(v);
        return int(_neighbours[v].size());
    }

    auto Graph::adjacent(VertexId u, VertexId v) const -> bool
    {
        check_vertex(u);
        check_vertex(v);
        return _rows[u].test(v);
    }

    auto Graph::row(VertexId v) const -> const Bitset &
    {
        check_vertex(v);
        return _rows[v];
    }

    auto Graph::find_label(const string & label) const -> std::optional<VertexId>
    {
        auto it = std::find(_labels.begin(), _labels.end(), label);
        if (it == _labels.end())
            return std::nullopt;
        return VertexId(it - _labels.begin());
    }

    namespace
    {
        auto all_distinct_and_known(const Graph & g, const vector<VertexId> & vs) -> bool
        {
            Bitset seen(g.vertex_count());
            for (auto v : vs) {
                if (v < 0 || v >= g.vertex_count() || seen.test(v))
                    return false;
                seen.set(v);
            }
            return true;
        }
    }

    auto is_valid_path(const Graph & g, const PathWitness & path) -> bool
    {
        if (path.vertices.empty() || ! all_distinct_and_known(g, path.vertices))
            return false;
        for (std::size_t i = 0 ; i + 1 < path.vertices.size() ; ++i)
            if (! g.adjacent(path.vertices[i], path.vertices[i + 1]))
                return false;
        return true;
    }

    auto is_valid_cycle(const Graph & g, const CycleWitness & cycle) -> bool
    {
        auto & vs = cycle.vertices;
        if (vs.size() < 3 || ! all_distinct_and_known(g, vs))
            return false;
        for (std::size_t i = 0 ; i < vs.size() ; ++i)
            if (! g.adjacent(vs[i], vs[(i + 1) % vs.size()]))
                return false;
        return true;
    }

    auto is_chordless_cycle(const Graph & g, const CycleWitness & cycle) -> bool
    {
        auto & vs = cycle.vertices;
        if (vs.size() < 4 || ! is_valid_cycle(g, cycle))
            return false;
        auto k = vs.size();
        for (std::size_t i = 0 ; i < k ; ++i)
            for (std::size_t j = i + 2 ; j < k ; ++j) {
                if (i == 0 && j == k - 1)
                    continue;
                if (g.adjacent(vs[i], vs[j]))
                    return false;
            }
        return true;
    }

    auto labels_of(const Graph & g, std::span<const VertexId> vertices) -> vector<string>
    {
        vector<string> result;
        result.reserve(vertices.size());
        for (auto v : vertices)
            result.push_back(g.label(v));
        return result;
    }
}
