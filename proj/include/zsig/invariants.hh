#ifndef ZSIG_INVARIANTS_HH
#define ZSIG_INVARIANTS_HH

#include <zsig/graph.hh>

#include <optional>
#include <span>
#include <vector>

namespace zsig
{
    /// Breadth-first distances from source to every vertex.
    auto bfs_distances(const Graph & g, VertexId source) -> std::vector<Distance>;

    auto distance(const Graph & g, VertexId u, VertexId v) -> Distance;

    /// A shortest u-v path, smallest-id predecessors preferred; none if disconnected.
    auto shortest_path(const Graph & g, VertexId u, VertexId v) -> std::optional<PathWitness>;

    auto eccentricity(const Graph & g, VertexId u) -> Distance;

    /// Throw std::invalid_argument on the empty graph.
    auto diameter(const Graph & g) -> Distance;
    auto radius(const Graph & g) -> Distance;

    /// Per-vertex eccentricities, one BFS per vertex.
    auto eccentricities(const Graph & g) -> std::vector<Distance>;

    auto connected_components(const Graph & g) -> std::vector<std::vector<VertexId>>;

    auto is_connected(const Graph & g) -> bool;

    /// Shortest cycle length, or infinity for a forest.
    auto girth(const Graph & g) -> Distance;

    /// A cycle realising the girth.
    auto shortest_cycle(const Graph & g) -> std::optional<CycleWitness>;

    struct VertexProperty
    {
        bool holds = true;
        std::optional<VertexId> failing_vertex;
    };

    struct EdgeProperty
    {
        bool holds = true;
        std::optional<Edge> failing_edge;
    };

    auto is_triangulated(const Graph & g) -> VertexProperty;
    auto is_hypertriangulated(const Graph & g) -> EdgeProperty;

    auto has_common_neighbour(const Graph & g, VertexId u, VertexId v) -> bool;

    /// Adjacent with no common neighbour. Throws std::invalid_argument if u == v.
    auto orthogonal(const Graph & g, VertexId u, VertexId v) -> bool;

    /// First orthogonal partner of u, if any.
    auto orthogonal_partner(const Graph & g, VertexId u) -> std::optional<VertexId>;

    /// Every vertex has an orthogonal partner; reports the first vertex without one.
    auto is_complemented(const Graph & g) -> VertexProperty;

    auto dominates(const Graph & g, std::span<const VertexId> set) -> bool;

    struct Domination
    {
        /// None means the domination number exceeds max_k.
        std::optional<int> number;
        std::vector<VertexId> witness;
        int max_k = 0;
    };

    /// Searches sizes 0..max_k in lexicographic subset order; returns the first dominating set.
    auto domination_number(const Graph & g, int max_k = 3) -> Domination;
}

#endif
