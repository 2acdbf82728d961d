#include <zsig/invariants.hh>

#include <algorithm>
#include <functional>
#include <stdexcept>

using std::invalid_argument;
using std::optional;
using std::vector;

namespace zsig
{
    namespace
    {
        struct BfsTree
        {
            vector<int> depth;
            vector<VertexId> parent;
        };

        auto bfs_tree(const Graph & g, VertexId source) -> BfsTree
        {
            g.check_vertex(source);
            BfsTree tree{vector<int>(g.vertex_count(), -1), vector<VertexId>(g.vertex_count(), -1)};
            vector<VertexId> queue;
            queue.reserve(g.vertex_count());
            queue.push_back(source);
            tree.depth[source] = 0;
            for (std::size_t head = 0 ; head < queue.size() ; ++head) {
                auto x = queue[head];
                for (auto y : g.neighbours(x))
                    if (tree.depth[y] < 0) {
                        tree.depth[y] = tree.depth[x] + 1;
                        tree.parent[y] = x;
                        queue.push_back(y);
                    }
            }
            return tree;
        }

        auto require_nonempty(const Graph & g, const char * what) -> void
        {
            if (g.vertex_count() == 0)
                throw invalid_argument(std::string(what) + " of the empty graph is undefined");
        }
    }

    auto bfs_distances(const Graph & g, VertexId source) -> vector<Distance>
    {
        auto tree = bfs_tree(g, source);
        vector<Distance> result;
        result.reserve(tree.depth.size());
        for (auto d : tree.depth)
            result.push_back(d < 0 ? Distance::infinity() : Distance{d});
        return result;
    }

    auto distance(const Graph & g, VertexId u, VertexId v) -> Distance
    {
        g.check_vertex(v);
        return bfs_distances(g, u)[v];
    }

    auto shortest_path(const Graph & g, VertexId u, VertexId v) -> optional<PathWitness>
    {
        g.check_vertex(v);
        auto tree = bfs_tree(g, u);
        if (tree.depth[v] < 0)
            return std::nullopt;
        PathWitness path;
        for (auto x = v ; x != -1 ; x = tree.parent[x])
            path.vertices.push_back(x);
        std::reverse(path.vertices.begin(), path.vertices.end());
        return path;
    }

    auto eccentricity(const Graph & g, VertexId u) -> Distance
    {
        auto d = bfs_distances(g, u);
        return *std::max_element(d.begin(), d.end());
    }

    auto eccentricities(const Graph & g) -> vector<Distance>
    {
        vector<Distance> result;
        result.reserve(g.vertex_count());
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
            result.push_back(eccentricity(g, v));
        return result;
    }

    auto diameter(const Graph & g) -> Distance
    {
        require_nonempty(g, "diameter");
        auto e = eccentricities(g);
        return *std::max_element(e.begin(), e.end());
    }

    auto radius(const Graph & g) -> Distance
    {
        require_nonempty(g, "radius");
        auto e = eccentricities(g);
        return *std::min_element(e.begin(), e.end());
    }

    auto connected_components(const Graph & g) -> vector<vector<VertexId>>
    {
        vector<vector<VertexId>> result;
        vector<bool> seen(g.vertex_count(), false);
        for (VertexId s = 0 ; s < g.vertex_count() ; ++s) {
            if (seen[s])
                continue;
            vector<VertexId> component{s};
            seen[s] = true;
            for (std::size_t head = 0 ; head < component.size() ; ++head)
                for (auto y : g.neighbours(component[head]))
                    if (! seen[y]) {
                        seen[y] = true;
                        component.push_back(y);
                    }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    namespace
    {
        struct GirthSearch
        {
            int best = -1;
            VertexId root = -1, x = -1, y = -1;
        };

        // One BFS per root; each non-tree edge closes a cycle of length at most
        // depth(x) + depth(y) + 1, and the minimum over all roots is exact.
        auto search_girth(const Graph & g) -> GirthSearch
        {
            GirthSearch result;
            for (VertexId r = 0 ; r < g.vertex_count() ; ++r) {
                auto tree = bfs_tree(g, r);
                for (auto [a, b] : g.edges()) {
                    if (tree.depth[a] < 0 || tree.parent[a] == b || tree.parent[b] == a)
                        continue;
                    int len = tree.depth[a] + tree.depth[b] + 1;
                    if (result.best < 0 || len < result.best)
                        result = GirthSearch{len, r, a, b};
                }
                if (result.best == 3)
                    break;
            }
            return result;
        }
    }

    auto girth(const Graph & g) -> Distance
    {
        auto s = search_girth(g);
        return s.best < 0 ? Distance::infinity() : Distance{s.best};
    }

    auto shortest_cycle(const Graph & g) -> optional<CycleWitness>
    {
        auto s = search_girth(g);
        if (s.best < 0)
            return std::nullopt;

        auto tree = bfs_tree(g, s.root);
        vector<VertexId> up_x, up_y;
        for (auto v = s.x ; v != -1 ; v = tree.parent[v])
            up_x.push_back(v);
        for (auto v = s.y ; v != -1 ; v = tree.parent[v])
            up_y.push_back(v);

        // trim the common tail so the two branches meet at their lowest common ancestor
        while (up_x.size() >= 2 && up_y.size() >= 2
                && up_x[up_x.size() - 2] == up_y[up_y.size() - 2]) {
            up_x.pop_back();
            up_y.pop_back();
        }

        CycleWitness cycle;
        cycle.vertices.assign(up_x.rbegin(), up_x.rend());
        for (std::size_t i = 0 ; i + 1 < up_y.size() ; ++i)
            cycle.vertices.push_back(up_y[i]);
        return cycle;
    }

    auto has_common_neighbour(const Graph & g, VertexId u, VertexId v) -> bool
    {
        return g.row(u).intersects(g.row(v));
    }

    auto is_triangulated(const Graph & g) -> VertexProperty
    {
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v) {
            bool in_triangle = false;
            for (auto u : g.neighbours(v))
                if (has_common_neighbour(g, u, v)) {
                    in_triangle = true;
                    break;
                }
            if (! in_triangle)
                return VertexProperty{false, v};
        }
        return VertexProperty{};
    }

    auto is_hypertriangulated(const Graph & g) -> EdgeProperty
    {
        for (auto e : g.edges())
            if (! has_common_neighbour(g, e.first, e.second))
                return EdgeProperty{false, e};
        return EdgeProperty{};
    }

    auto orthogonal(const Graph & g, VertexId u, VertexId v) -> bool
    {
        if (u == v)
            throw invalid_argument("orthogonality needs two distinct vertices");
        return g.adjacent(u, v) && ! has_common_neighbour(g, u, v);
    }

    auto orthogonal_partner(const Graph & g, VertexId u) -> optional<VertexId>
    {
        for (auto v : g.neighbours(u))
            if (! has_common_neighbour(g, u, v))
                return v;
        return std::nullopt;
    }

    auto is_complemented(const Graph & g) -> VertexProperty
    {
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
            if (! orthogonal_partner(g, v))
                return VertexProperty{false, v};
        return VertexProperty{};
    }

    namespace
    {
        auto closed_neighbourhood(const Graph & g, VertexId v) -> Bitset
        {
            auto result = g.row(v);
            result.set(v);
            return result;
        }
    }

    auto dominates(const Graph & g, std::span<const VertexId> set) -> bool
    {
        Bitset covered(g.vertex_count());
        for (auto v : set)
            covered.union_with(closed_neighbourhood(g, v));
        return covered.count() == g.vertex_count();
    }

    auto domination_number(const Graph & g, int max_k) -> Domination
    {
        if (max_k < 1)
            throw invalid_argument("max_k must be at least 1");

        int n = g.vertex_count();
        if (n == 0)
            return Domination{0, {}, max_k};

        vector<Bitset> closed;
        closed.reserve(n);
        for (VertexId v = 0 ; v < n ; ++v)
            closed.push_back(closed_neighbourhood(g, v));

        vector<VertexId> chosen;
        std::function<bool (int, int, const Bitset &)> extend = [&] (int start, int remaining, const Bitset & covered) -> bool {
            if (remaining == 0)
                return covered.count() == n;
            for (VertexId v = start ; v <= n - remaining ; ++v) {
                auto next = covered;
                next.union_with(closed[v]);
                chosen.push_back(v);
                if (extend(v + 1, remaining - 1, next))
                    return true;
                chosen.pop_back();
            }
            return false;
        };

        for (int k = 1 ; k <= std::min(max_k, n) ; ++k)
            if (extend(0, k, Bitset(n)))
                return Domination{k, chosen, max_k};
        return Domination{std::nullopt, {}, max_k};
    }
}
