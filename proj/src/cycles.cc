#include <zsig/cycles.hh>

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

using std::optional;
using std::vector;

namespace zsig
{
    namespace
    {
        constexpr long unreached = std::numeric_limits<long>::max();

        auto in_node(VertexId x) -> int
        {
            return 2 * x;
        }

        auto out_node(VertexId x) -> int
        {
            return 2 * x + 1;
        }

        auto vertex_of(int node) -> VertexId
        {
            return node / 2;
        }
    }

    DisjointPathSolver::DisjointPathSolver(const Graph & g) :
        _graph(&g),
        _out(2 * g.vertex_count()),
        _potential(2 * g.vertex_count(), 0),
        _dist(2 * g.vertex_count(), unreached),
        _via(2 * g.vertex_count(), -1)
    {
        auto add_arc = [&] (int a, int b, int cost) {
            _out[a].push_back(int(_arcs.size()));
            _arcs.push_back(Arc{b, 1, cost});
            _out[b].push_back(int(_arcs.size()));
            _arcs.push_back(Arc{a, 0, -cost});
        };

        for (VertexId x = 0 ; x < g.vertex_count() ; ++x)
            add_arc(in_node(x), out_node(x), 0);
        for (VertexId x = 0 ; x < g.vertex_count() ; ++x)
            for (auto y : g.neighbours(x))
                add_arc(out_node(x), in_node(y), 1);
    }

    // One successive-shortest-path step: Dijkstra on reduced costs, stopping
    // as soon as the sink is settled, then push one unit along the path.
    auto DisjointPathSolver::augment(int source, int sink) -> optional<int>
    {
        std::fill(_dist.begin(), _dist.end(), unreached);
        std::fill(_via.begin(), _via.end(), -1);
        vector<char> settled(_dist.size(), 0);

        using Entry = std::pair<long, int>;
        std::priority_queue<Entry, vector<Entry>, std::greater<>> queue;
        _dist[source] = 0;
        queue.emplace(0, source);
        while (! queue.empty()) {
            auto [d, a] = queue.top();
            queue.pop();
            if (settled[a])
                continue;
            settled[a] = 1;
            if (a == sink)
                break;
            for (auto i : _out[a]) {
                auto & arc = _arcs[i];
                if (arc.capacity <= 0 || settled[arc.to])
                    continue;
                long nd = d + arc.cost + _potential[a] - _potential[arc.to];
                if (nd < _dist[arc.to]) {
                    _dist[arc.to] = nd;
                    _via[arc.to] = i;
                    queue.emplace(nd, arc.to);
                }
            }
        }

        if (! settled[sink])
            return std::nullopt;

        long sink_dist = _dist[sink];
        for (std::size_t a = 0 ; a < _dist.size() ; ++a)
            _potential[a] += settled[a] ? _dist[a] : sink_dist;

        int cost = 0;
        for (int node = sink ; node != source ; ) {
            int i = _via[node];
            _arcs[i].capacity -= 1;
            _arcs[i ^ 1].capacity += 1;
            _touched.push_back(i & ~1);
            cost += _arcs[i].cost;
            node = _arcs[i ^ 1].to;
        }
        return cost;
    }

    auto DisjointPathSolver::restore() -> void
    {
        for (auto i : _touched) {
            _arcs[i].capacity = 1;
            _arcs[i + 1].capacity = 0;
        }
        _touched.clear();
        std::fill(_potential.begin(), _potential.end(), 0);
    }

    auto DisjointPathSolver::solve(VertexId u, VertexId v) -> CycleThroughPair
    {
        _graph->check_vertex(u);
        _graph->check_vertex(v);
        if (u == v)
            throw std::invalid_argument("a cycle through a pair needs two distinct vertices");

        int source = out_node(u), sink = in_node(v);
        auto first = augment(source, sink);
        optional<int> second;
        if (first)
            second = augment(source, sink);

        if (! second) {
            restore();
            return CycleThroughPair{};
        }

        // Decompose the two units of flow into vertex sequences u ... v.
        auto flow_on = [&] (int i) { return (i % 2 == 0) && _arcs[i].capacity == 0; };
        vector<vector<VertexId>> paths;
        for (auto i : _out[source]) {
            if (! flow_on(i) || _arcs[i].to == in_node(u))
                continue;
            vector<VertexId> path{u};
            int node = _arcs[i].to;
            while (true) {
                VertexId x = vertex_of(node);
                path.push_back(x);
                if (x == v)
                    break;
                int next = -1;
                for (auto j : _out[out_node(x)])
                    if (flow_on(j) && _arcs[j].to != in_node(x)) {
                        next = _arcs[j].to;
                        break;
                    }
                node = next;
            }
            paths.push_back(std::move(path));
        }
        restore();

        std::sort(paths.begin(), paths.end());
        CycleWitness cycle;
        cycle.vertices = paths[0];
        for (auto it = paths[1].rbegin() + 1 ; it + 1 != paths[1].rend() ; ++it)
            cycle.vertices.push_back(*it);

        return CycleThroughPair{Distance{*first + *second}, std::move(cycle)};
    }

    auto smallest_cycle_through_pair(const Graph & g, VertexId u, VertexId v) -> CycleThroughPair
    {
        DisjointPathSolver solver(g);
        return solver.solve(u, v);
    }
}
