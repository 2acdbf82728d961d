#ifndef ZSIG_ORACLES_HH
#define ZSIG_ORACLES_HH

#include <zsig/graph.hh>

#include <vector>

namespace zsig
{
    /**
     * Exhaustive reference implementations over vertex subsets, independent of
     * the BFS, flow and Lex-BFS routes. Every simple path starting from a
     * vertex is represented by its vertex set and endpoint, so the work grows
     * as 2^n; graphs above the cap are rejected with std::length_error.
     */
    inline constexpr int default_oracle_cap = 14;
    inline constexpr int hard_oracle_cap = 20;

    auto naive_girth(const Graph & g, int cap = default_oracle_cap) -> Distance;

    auto naive_cycle_through_pair(const Graph & g, VertexId u, VertexId v, int cap = default_oracle_cap) -> Distance;

    /// Shortest cycle through u and each other vertex, from one subset sweep.
    auto naive_cycles_through_vertex(const Graph & g, VertexId u, int cap = default_oracle_cap) -> std::vector<Distance>;

    /// True iff no induced subgraph on four or more vertices is a cycle.
    auto naive_chordal(const Graph & g, int cap = default_oracle_cap) -> bool;
}

#endif
