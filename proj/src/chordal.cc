#include <zsig/chordal.hh>

#include <algorithm>

using std::optional;
using std::vector;

namespace zsig
{
    auto lex_bfs_order(const Graph & g) -> vector<VertexId>
    {
        // Partition refinement: an ordered list of slices, each slice holding
        // vertices with equal labels. Picking from the front slice and moving
        // neighbours ahead of non-neighbours within every slice keeps the
        // slices sorted by decreasing lexicographic label.
        vector<vector<VertexId>> slices;
        if (g.vertex_count() > 0) {
            slices.emplace_back();
            for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
                slices.back().push_back(v);
        }

        vector<VertexId> order;
        order.reserve(g.vertex_count());
        while (! slices.empty()) {
            auto & front = slices.front();
            VertexId pick = front.front();
            front.erase(front.begin());
            order.push_back(pick);

            vector<vector<VertexId>> refined;
            refined.reserve(slices.size() * 2);
            auto & row = g.row(pick);
            for (auto & slice : slices) {
                vector<VertexId> in, out;
                for (auto v : slice)
                    (row.test(v) ? in : out).push_back(v);
                if (! in.empty())
                    refined.push_back(std::move(in));
                if (! out.empty())
                    refined.push_back(std::move(out));
            }
            slices = std::move(refined);
        }
        return order;
    }

    auto first_elimination_failure(const Graph & g, const vector<VertexId> & elimination_order) -> optional<VertexId>
    {
        vector<int> position(g.vertex_count());
        for (std::size_t i = 0 ; i < elimination_order.size() ; ++i)
            position[elimination_order[i]] = int(i);

        for (auto v : elimination_order) {
            VertexId parent = -1;
            Bitset later(g.vertex_count());
            for (auto u : g.neighbours(v))
                if (position[u] > position[v]) {
                    later.set(u);
                    if (parent == -1 || position[u] < position[parent])
                        parent = u;
                }
            if (parent == -1)
                continue;
            later.reset(parent);
            if (! later.is_subset_of(g.row(parent)))
                return v;
        }
        return std::nullopt;
    }

    namespace
    {
        auto four_hole(const Graph & g) -> optional<CycleWitness>
        {
            for (VertexId v = 0 ; v < g.vertex_count() ; ++v) {
                auto nb = g.neighbours(v);
                for (std::size_t i = 0 ; i < nb.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < nb.size() ; ++j) {
                        auto p = nb[i], w = nb[j];
                        if (g.adjacent(p, w))
                            continue;
                        auto common = g.row(p);
                        common.intersect_with(g.row(w));
                        common.reset(v);
                        VertexId found = -1;
                        common.for_each_set([&] (int x) {
                            if (found == -1 && ! g.adjacent(v, x))
                                found = x;
                        });
                        if (found != -1)
                            return CycleWitness{{v, p, found, w}};
                    }
            }
            return std::nullopt;
        }

        // Shortest p-w path avoiding the blocked set, as a vertex sequence.
        auto restricted_path(const Graph & g, VertexId p, VertexId w, const Bitset & blocked) -> optional<vector<VertexId>>
        {
            vector<VertexId> parent(g.vertex_count(), -1), queue{p};
            vector<char> seen(g.vertex_count(), 0);
            seen[p] = 1;
            for (std::size_t head = 0 ; head < queue.size() ; ++head) {
                auto x = queue[head];
                if (x == w)
                    break;
                for (auto y : g.neighbours(x))
                    if (! seen[y] && ! blocked.test(y)) {
                        seen[y] = 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
            }
            if (! seen[w])
                return std::nullopt;
            vector<VertexId> path;
            for (auto x = w ; x != -1 ; x = parent[x])
                path.push_back(x);
            std::reverse(path.begin(), path.end());
            return path;
        }
    }

    auto shortest_hole(const Graph & g) -> optional<CycleWitness>
    {
        if (auto hole = four_hole(g))
            return hole;

        // Every hole through v enters and leaves v via two non-adjacent
        // neighbours p, w and otherwise avoids N[v].
        optional<CycleWitness> best;
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v) {
            auto nb = g.neighbours(v);
            for (std::size_t i = 0 ; i < nb.size() ; ++i)
                for (std::size_t j = i + 1 ; j < nb.size() ; ++j) {
                    auto p = nb[i], w = nb[j];
                    if (g.adjacent(p, w))
                        continue;
                    auto blocked = g.row(v);
                    blocked.set(v);
                    blocked.reset(p);
                    blocked.reset(w);
                    auto path = restricted_path(g, p, w, blocked);
                    if (! path)
                        continue;
                    int length = int(path->size()) + 1;
                    if (! best || length < best->length()) {
                        CycleWitness cycle{{v}};
                        cycle.vertices.insert(cycle.vertices.end(), path->begin(), path->end());
                        best = std::move(cycle);
                    }
                }
        }
        return best;
    }

    auto is_chordal(const Graph & g) -> Chordality
    {
        auto order = lex_bfs_order(g);
        std::reverse(order.begin(), order.end());
        if (! first_elimination_failure(g, order))
            return Chordality{true, std::move(order), std::nullopt};

        return Chordality{false, {}, shortest_hole(g)};
    }
}
