#ifndef ZSIG_SRC_VERIFIER_SUPPORT_HH
#define ZSIG_SRC_VERIFIER_SUPPORT_HH

#include <zsig/verifier.hh>

#include <span>
#include <string>
#include <vector>

namespace zsig::detail
{
    auto covers_of(const std::string & check_id) -> std::vector<std::string>;

    inline auto start_check(std::string id, std::vector<std::string> covers, const ModelConfig & config,
            std::string claim, std::string hypothesis, bool hypothesis_met) -> TheoremCheck
    {
        TheoremCheck c;
        c.id = std::move(id);
        c.covers = std::move(covers);
        c.config = config;
        c.claim = std::move(claim);
        c.hypothesis = std::move(hypothesis);
        c.hypothesis_met = hypothesis_met;
        return c;
    }

    /// PASS when the claim holds, otherwise a hypothesis violation or a failure.
    inline auto resolve(TheoremCheck & c, bool holds) -> void
    {
        if (holds)
            c.status = Status::pass;
        else
            c.status = c.hypothesis_met ? Status::fail : Status::hypothesis_violation;
    }

    inline auto mark_anomaly(TheoremCheck & c, const std::string & code) -> void
    {
        c.status = Status::anomaly;
        c.anomaly = code;
        c.note = anomaly_description(code);
    }

    inline auto witness(const char * graph, const char * kind, const Graph & g, std::span<const VertexId> vs) -> Json
    {
        return Json{{"graph", graph}, {"kind", kind}, {"labels", labels_of(g, vs)}};
    }

    inline auto skipped_check(const std::string & id, const ModelConfig & config, const std::string & reason) -> TheoremCheck
    {
        TheoremCheck c;
        c.id = id;
        c.covers = covers_of(id);
        c.config = config;
        c.status = Status::skipped;
        c.note = reason;
        return c;
    }

    /// Distances between all ordered pairs; -1 stands for infinity.
    auto all_pairs_distances(const Graph & g) -> std::vector<std::vector<int>>;
}

#endif
