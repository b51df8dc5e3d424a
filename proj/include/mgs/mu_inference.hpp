#ifndef MGS_MU_INFERENCE_HPP
#define MGS_MU_INFERENCE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "mgs/scorer.hpp"
#include "mgs/search_graph.hpp"

namespace mgs {

// Observed goal density under a node: G_d / N_d. Only defined once the node
// has visited descendants at that horizon.
double partial_mu(const SearchGraph& g, NodeIdx n, int d);

/**
 * Estimates marginal utility and subtree size for any node from the counters
 * of the node itself, its supported siblings, or (recursively, diffused) its
 * ancestors. Values are cached per round; call begin_round whenever counters
 * may have changed since the last queries.
 */
class MuEvaluator {
public:
    explicit MuEvaluator(SearchGraph& g) : g_(g) {}

    void begin_round();

    double mu(NodeIdx n, int d);
    double tree_size(NodeIdx n, int d);

    // Picks the largest horizon whose estimated subtree still fits the budget
    // (falling back to 1) and returns the utility estimate at that horizon.
    // Uses the current round's cache: call begin_round after graph changes.
    double marginal_utility(NodeIdx n, std::uint64_t budget);
    int pick_depth(NodeIdx n, std::uint64_t budget);

private:
    double mu_rec(NodeIdx n, int d);
    double ts_rec(NodeIdx n, int d);
    void ensure_scratch();

    SearchGraph& g_;
    std::uint32_t round_ = 1;
    struct CacheLine {
        std::array<double, kMaxCounterDepth> val{};
        std::array<std::uint32_t, kMaxCounterDepth> stamp{};
    };
    std::vector<CacheLine> mu_cache_, ts_cache_;
    std::vector<std::uint32_t> on_path_;
};

/**
 * Search heuristic: 1 - estimated marginal utility (lower = more promising).
 * Binds to the search graph on the first round, so it can be constructed
 * before the engine that owns the graph.
 */
class MuSiblingScorer : public NodeScorer {
public:
    MuSiblingScorer() = default;
    explicit MuSiblingScorer(SearchGraph& g) : eval_(std::make_unique<MuEvaluator>(g)) {}

    void begin_round(std::span<const NodeIdx>, ScoreContext& ctx) override {
        if (!eval_) eval_ = std::make_unique<MuEvaluator>(ctx.graph);
        eval_->begin_round();
    }
    Score score(NodeIdx n, ScoreContext& ctx) override {
        return 1.0 - eval_->marginal_utility(n, ctx.planning_budget);
    }
    MuEvaluator& evaluator() { return *eval_; }

private:
    std::unique_ptr<MuEvaluator> eval_;
};

} // namespace mgs

#endif
