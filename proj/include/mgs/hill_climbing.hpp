#ifndef MGS_HILL_CLIMBING_HPP
#define MGS_HILL_CLIMBING_HPP

#include <memory>
#include <random>

#include "mgs/engine_common.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

/**
 * Multiple-goal hill climbing: always move to the best-scored successor of the
 * current state. Collecting a goal triggers an L-step uniform random walk from
 * that goal to leave its attraction basin; dead ends restart from a random
 * initial state. Walk moves expand and generate like any other move. Stops on
 * budget exhaustion or once the whole reachable space has been generated.
 */
class HillClimbingEngine {
public:
    HillClimbingEngine(SearchProblem problem, NodeScorer& scorer, std::size_t walk_length,
                       std::uint64_t seed, EngineParams params = {}, EngineHooks hooks = {});

    SearchOutcome run();
    SearchGraph& graph() { return *graph_; }
    Termination termination() const { return termination_; }

private:
    // Expand cur (if new), collect goals; returns false when budget ran out.
    bool expand_current();
    NodeIdx random_root();

    SearchProblem problem_;
    NodeScorer& scorer_;
    std::size_t walk_len_;
    EngineParams params_;
    EngineHooks hooks_;
    std::unique_ptr<SearchGraph> graph_;
    std::mt19937_64 rng_;
    std::vector<NodeIdx> roots_;
    NodeIdx cur_ = kNoNode;
    std::size_t pending_walk_ = 0;
    std::size_t stagnant_moves_ = 0;
    std::uint64_t unexpanded_known_ = 0;
    Termination termination_ = Termination::kResourcesExhausted;
};

} // namespace mgs

#endif
