#ifndef ZSIG_CYCLES_HH
#define ZSIG_CYCLES_HH

#include <zsig/graph.hh>

#include <optional>
#include <vector>

namespace zsig
{
    struct CycleThroughPair
    {
        Distance length = Distance::infinity();
        std::optional<CycleWitness> witness;
    };

    /**
     * Smallest cycle containing two given vertices, computed as a minimum-cost
     * flow of value two on the vertex-split digraph: every vertex x becomes
     * x_in -> x_out with capacity one, every edge {x, y} becomes x_out -> y_in
     * and y_out -> x_in with unit capacity and unit cost. The flow from u_out
     * to v_in decomposes into two internally vertex-disjoint u-v paths of
     * minimum total length.
     *
     * The split digraph is built once, so one solver can answer many pairs on
     * the same graph. Not thread-safe; use one solver per thread.
     */
    class DisjointPathSolver
    {
        private:
            struct Arc
            {
                int to;
                int capacity;
                int cost;
            };

            const Graph * _graph;
            std::vector<Arc> _arcs;
            std::vector<std::vector<int>> _out;
            std::vector<int> _touched;
            std::vector<long> _potential, _dist;
            std::vector<int> _via;

            auto augment(int source, int sink) -> std::optional<int>;
            auto restore() -> void;

        public:
            explicit DisjointPathSolver(const Graph & g);

            /// Throws std::invalid_argument if u == v.
            auto solve(VertexId u, VertexId v) -> CycleThroughPair;
    };

    auto smallest_cycle_through_pair(const Graph & g, VertexId u, VertexId v) -> CycleThroughPair;
}

#endif
