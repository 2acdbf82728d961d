#ifndef ZSIG_VERIFIER_HH
#define ZSIG_VERIFIER_HH

#include <zsig/export.hh>
#include <zsig/line_graph.hh>
#include <zsig/zeroset_model.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zsig
{
    inline constexpr const char * toolkit_version = "1.0.0";
    inline constexpr int report_schema_version = 1;

    /// Line-graph checks are skipped when the base graph has more edges than this.
    inline constexpr int line_edge_cap = 2000;
    /// Gamma checks are skipped above this many vertices.
    inline constexpr int gamma_vertex_cap = 2000;

    enum class Status
    {
        pass,
        fail,
        /// The model contradicts the literal statement; a documented deviation.
        anomaly,
        /// The claim fails, but only in a configuration below the check's hypotheses.
        hypothesis_violation,
        skipped
    };

    auto to_string(Status s) -> std::string;

    /**
     * Documented deviations between the model and the statements it checks.
     * A1: with the zero function present, |X| = 2 gives a connected graph.
     * A2: the complemented-iff-disjoint-dominating-partner equivalence fails.
     * A3: with the zero function present, the radius is 1.
     * A4: with the zero function present, the domination number is 1.
     * A5: the zero function has no disjoint dominating partner.
     */
    auto anomaly_description(const std::string & code) -> std::string;

    struct TheoremCheck
    {
        std::string id;
        std::vector<std::string> covers;
        std::optional<ModelConfig> config;
        std::string claim;
        std::string hypothesis;
        bool hypothesis_met = true;
        Json observed = Json::object();
        /// Array of {"graph", "kind", "labels"} objects.
        Json witness = Json::array();
        Status status = Status::pass;
        std::optional<std::string> anomaly;
        std::string note;
    };

    auto to_json(const TheoremCheck & check) -> Json;

    /// Every theorem identifier a full sweep must cover, in report order.
    auto all_theorem_ids() -> const std::vector<std::string> &;

    /// Check identifiers in report order; each check covers one or more theorem ids.
    auto all_check_ids() -> const std::vector<std::string> &;

    // Checks on the zero-set intersection graph.
    auto check_connectivity_diameter(const GammaModel & model) -> TheoremCheck;
    auto check_common_neighbor(const GammaModel & model) -> TheoremCheck;
    auto check_distance_characterization(const GammaModel & model) -> TheoremCheck;
    auto check_radius(const GammaModel & model) -> TheoremCheck;
    auto check_triangulation(const GammaModel & model) -> TheoremCheck;
    auto check_cycle_pair_gamma(const GammaModel & model) -> TheoremCheck;
    auto check_chordality_gamma(const GammaModel & model) -> TheoremCheck;
    auto check_complemented(const GammaModel & model) -> TheoremCheck;
    auto check_domination(const GammaModel & model) -> TheoremCheck;
    auto check_vnr_condition(const GammaModel & model) -> TheoremCheck;

    // Checks on its line graph.
    auto check_line_metrics(const GammaModel & model, const LineGraph & line) -> TheoremCheck;
    auto check_line_cycles(const GammaModel & model, const LineGraph & line) -> TheoremCheck;

    /// Builds the model (and line graph) and runs the named check.
    auto run_check(const std::string & check_id, const ModelConfig & config) -> TheoremCheck;

    /// Case of the distance table for two distinct line-graph vertices: 1, 2 or 3.
    auto predicted_line_distance(const GammaModel & model, const EdgeVertex & e1, const EdgeVertex & e2) -> int;

    /// Case of the smallest-cycle table for two distinct line-graph vertices: 3, 4, 5 or 6.
    auto predicted_line_cycle(const GammaModel & model, const EdgeVertex & e1, const EdgeVertex & e2) -> int;

    /**
     * Smallest cycle through every pair of distinct line-graph vertices, keyed
     * by (a, b) with a < b. Pairs related by a model automorphism (a point
     * permutation combined with copy relabelling inside each class) share one
     * flow computation; with use_orbits false every pair is solved directly.
     */
    struct LineCycleTable
    {
        /// length[a][b] for a < b; -1 when no cycle passes through both.
        std::vector<std::vector<std::int8_t>> length;
        int flow_solves = 0;
    };

    auto line_cycle_table(const GammaModel & model, const LineGraph & line, bool use_orbits) -> LineCycleTable;

    /// Seeded Erdos-Renyi style graphs with 1..max_vertices vertices.
    auto random_graph_corpus(std::uint64_t seed, int count, int max_vertices) -> std::vector<Graph>;

    /// Every model graph with at most max_vertices vertices (both zero modes).
    auto small_model_graphs(int max_vertices) -> std::vector<GammaModel>;

    /// Girth, chordality and cycle-through-pair against the exhaustive oracles.
    auto check_oracle_equivalence(std::uint64_t seed, int random_count = 200) -> TheoremCheck;

    struct Sweep
    {
        std::vector<ModelConfig> gamma;
        std::vector<ModelConfig> line;
        /// Theorem or check ids to keep; empty keeps everything.
        std::vector<std::string> theorems;
        std::uint64_t seed = 20240601;
        bool oracle_corpus = true;
    };

    /// Gamma checks for n in 2..5, m in 1..4; line checks for n in 3..4, m in 2..4.
    auto default_sweep(bool include_zero = false) -> Sweep;

    struct VerificationReport
    {
        std::string toolkit_version;
        Sweep sweep;
        std::vector<TheoremCheck> checks;

        auto count(Status s) const -> int;
        auto anomaly_codes() const -> std::vector<std::string>;
        /// 0 unless some check failed outright.
        auto exit_code() const -> int;
    };

    /// Throws std::invalid_argument for an empty sweep or an unknown theorem id.
    auto run_all(const Sweep & sweep) -> VerificationReport;

    auto to_json(const VerificationReport & report) -> Json;
    auto to_markdown(const VerificationReport & report) -> std::string;
}

#endif
