#ifndef ZSIG_CHORDAL_HH
#define ZSIG_CHORDAL_HH

#include <zsig/graph.hh>

#include <optional>
#include <vector>

namespace zsig
{
    /// Lexicographic breadth-first search visit order, ties broken by smallest id.
    auto lex_bfs_order(const Graph & g) -> std::vector<VertexId>;

    /**
     * Checks that every vertex's later neighbours in the elimination order
     * form a clique. Returns the first vertex where this fails.
     */
    auto first_elimination_failure(const Graph & g, const std::vector<VertexId> & elimination_order)
        -> std::optional<VertexId>;

    struct Chordality
    {
        bool chordal = true;
        /// Set when chordal: a verified perfect elimination ordering.
        std::vector<VertexId> elimination_order;
        /// Set when not chordal: a shortest chordless cycle of length at least four.
        std::optional<CycleWitness> hole;
    };

    auto is_chordal(const Graph & g) -> Chordality;

    /// A shortest chordless cycle of length at least four, or none for a chordal graph.
    auto shortest_hole(const Graph & g) -> std::optional<CycleWitness>;
}

#endif
