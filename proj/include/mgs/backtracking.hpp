#ifndef MGS_BACKTRACKING_HPP
#define MGS_BACKTRACKING_HPP

#include <memory>

#include "mgs/engine_common.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

/**
 * Depth-first multiple-goal search over tree-structured spaces (CSP style).
 * Goals are recorded when generated and then treated as failures so the
 * search keeps enumerating. The value orderer picks which pending child to
 * descend into next and is re-consulted after every return, so utility-based
 * orderers see fresh counter statistics (dynamic value ordering).
 *
 * With `reclaim` (default) the engine keeps only the current spine and its
 * child fringe in memory, so exhaustive enumerations stay bounded.
 */
class BacktrackingEngine {
public:
    BacktrackingEngine(SearchProblem problem, NodeScorer& value_orderer, EngineParams params = {},
                       EngineHooks hooks = {}, bool reclaim = true);

    SearchOutcome run();
    SearchGraph& graph() { return *graph_; }
    Termination termination() const { return termination_; }

private:
    struct Frame {
        NodeIdx node;
        std::vector<NodeIdx> pending;
    };

    bool descend(NodeIdx child);      // push frame + expand; false on truncation
    void reap_children(NodeIdx node); // reclaim the finished fringe under node

    SearchProblem problem_;
    NodeScorer& orderer_;
    EngineParams params_;
    EngineHooks hooks_;
    bool reclaim_;
    std::unique_ptr<SearchGraph> graph_;
    std::vector<Frame> stack_;
    Termination termination_ = Termination::kOpenExhausted;
};

} // namespace mgs

#endif
