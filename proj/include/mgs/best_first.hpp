#ifndef MGS_BEST_FIRST_HPP
#define MGS_BEST_FIRST_HPP

#include <memory>

#include "mgs/diversity.hpp"
#include "mgs/engine_common.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

/**
 * Greedy multiple-goal best-first search: repeatedly expand the best-scored
 * open node, collect every goal at generation time and keep going until the
 * budget or the open list runs out. Constant scores degrade to breadth-first.
 */
class BestFirstEngine {
public:
    BestFirstEngine(SearchProblem problem, NodeScorer& scorer, EngineParams params = {},
                    EngineHooks hooks = {});

    // One selection + expansion. Returns false when the search is over.
    bool step();
    SearchOutcome run();
    SearchOutcome finish() const;

    SearchGraph& graph() { return *graph_; }
    const std::vector<NodeIdx>& open_list() const { return open_; }
    Termination termination() const { return termination_; }

private:
    NodeIdx select();

    SearchProblem problem_;
    NodeScorer& scorer_;
    EngineParams params_;
    EngineHooks hooks_;
    std::unique_ptr<SearchGraph> graph_;
    std::vector<NodeIdx> open_;
    DiversityBuffer diversity_;
    bool done_ = false;
    Termination termination_ = Termination::kResourcesExhausted;
    double wall_seconds_ = 0.0;
};

} // namespace mgs

#endif
