#include <zsig/oracles.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

using std::uint32_t;
using std::vector;

namespace zsig
{
    namespace
    {
        auto adjacency_masks(const Graph & g, int cap) -> vector<uint32_t>
        {
            if (cap > hard_oracle_cap)
                throw std::length_error("oracle cap " + std::to_string(cap) + " exceeds " + std::to_string(hard_oracle_cap));
            if (g.vertex_count() > cap)
                throw std::length_error("graph with " + std::to_string(g.vertex_count())
                        + " vertices exceeds the oracle cap of " + std::to_string(cap));
            vector<uint32_t> adj(g.vertex_count(), 0);
            for (auto [a, b] : g.edges()) {
                adj[a] |= uint32_t{1} << b;
                adj[b] |= uint32_t{1} << a;
            }
            return adj;
        }

        // For every vertex set S containing u, ends[S] is the set of x such
        // that some simple path from u visits exactly S and ends at x. When
        // only_higher is set, paths may only use vertices with ids above u.
        auto path_endpoints(const vector<uint32_t> & adj, VertexId u, bool only_higher) -> vector<uint32_t>
        {
            int n = int(adj.size());
            uint32_t allowed = (n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
            if (only_higher)
                allowed &= ~((uint32_t{1} << (u + 1)) - 1);

            vector<uint32_t> ends(std::size_t{1} << n, 0);
            uint32_t start = uint32_t{1} << u;
            ends[start] = start;
            for (uint32_t mask = start ; mask < ends.size() ; ++mask) {
                uint32_t e = ends[mask];
                while (e) {
                    int x = std::countr_zero(e);
                    e &= e - 1;
                    uint32_t next = adj[x] & allowed & ~mask;
                    while (next) {
                        int y = std::countr_zero(next);
                        next &= next - 1;
                        ends[mask | (uint32_t{1} << y)] |= uint32_t{1} << y;
                    }
                }
            }
            return ends;
        }
    }

    auto naive_cycles_through_vertex(const Graph & g, VertexId u, int cap) -> vector<Distance>
    {
        auto adj = adjacency_masks(g, cap);
        g.check_vertex(u);
        auto ends = path_endpoints(adj, u, false);

        vector<Distance> best(g.vertex_count(), Distance::infinity());
        for (uint32_t mask = 0 ; mask < ends.size() ; ++mask) {
            int size = std::popcount(mask);
            if (size < 3 || ! (ends[mask] & adj[u]))
                continue;
            uint32_t members = mask;
            while (members) {
                int v = std::countr_zero(members);
                members &= members - 1;
                if (Distance{size} < best[v])
                    best[v] = Distance{size};
            }
        }
        best[u] = Distance::infinity();
        return best;
    }

    auto naive_cycle_through_pair(const Graph & g, VertexId u, VertexId v, int cap) -> Distance
    {
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("a cycle through a pair needs two distinct vertices");
        return naive_cycles_through_vertex(g, u, cap)[v];
    }

    auto naive_girth(const Graph & g, int cap) -> Distance
    {
        auto adj = adjacency_masks(g, cap);
        auto best = Distance::infinity();
        for (VertexId u = 0 ; u < g.vertex_count() ; ++u) {
            auto ends = path_endpoints(adj, u, true);
            for (uint32_t mask = 0 ; mask < ends.size() ; ++mask) {
                int size = std::popcount(mask);
                if (size >= 3 && (ends[mask] & adj[u]) && Distance{size} < best)
                    best = Distance{size};
            }
        }
        return best;
    }

    auto naive_chordal(const Graph & g, int cap) -> bool
    {
        auto adj = adjacency_masks(g, cap);
        uint32_t limit = uint32_t{1} << g.vertex_count();
        for (uint32_t mask = 0 ; mask < limit ; ++mask) {
            if (std::popcount(mask) < 4)
                continue;

            bool two_regular = true;
            for (uint32_t m = mask ; m && two_regular ; m &= m - 1)
                two_regular = std::popcount(adj[std::countr_zero(m)] & mask) == 2;
            if (! two_regular)
                continue;

            uint32_t reached = mask & -mask, frontier = reached;
            while (frontier) {
                uint32_t next = 0;
                for (uint32_t m = frontier ; m ; m &= m - 1)
                    next |= adj[std::countr_zero(m)] & mask;
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached == mask)
                return false;
        }
        return true;
    }
}
