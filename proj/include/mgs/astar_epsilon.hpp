#ifndef MGS_ASTAR_EPSILON_HPP
#define MGS_ASTAR_EPSILON_HPP

#include <functional>
#include <memory>

#include "mgs/engine_common.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

/**
 * Bounded-suboptimal multiple-goal search. Keeps the classic focal list
 * {n in open : f(n) <= (1+eps) * f_min} ordered by a secondary scorer, collects
 * a goal whenever one is selected from the focal list (which is what bounds the
 * path cost), and stops once every open node has f above (1+eps) times the
 * cheapest collected goal. Cheaper re-discoveries re-open closed nodes so the
 * bound also holds on graphs with transpositions.
 */
class AstarEpsilonEngine {
public:
    AstarEpsilonEngine(SearchProblem problem, std::function<double(StateId)> admissible_h,
                       NodeScorer& focal_scorer, double epsilon, EngineParams params = {},
                       EngineHooks hooks = {});

    bool step();
    SearchOutcome run();
    SearchOutcome finish() const;

    SearchGraph& graph() { return *graph_; }
    Termination termination() const { return termination_; }

private:
    double f_of(NodeIdx n);

    SearchProblem problem_;
    std::function<double(StateId)> h_;
    NodeScorer& focal_;
    double eps_;
    EngineParams params_;
    EngineHooks hooks_;
    std::unique_ptr<SearchGraph> graph_;
    std::vector<NodeIdx> open_;
    std::vector<double> h_cache_;
    std::vector<bool> collected_flag_;
    bool has_goal_ = false;
    double g_min_ = 0.0;
    bool done_ = false;
    Termination termination_ = Termination::kResourcesExhausted;
    double wall_seconds_ = 0.0;
};

} // namespace mgs

#endif
