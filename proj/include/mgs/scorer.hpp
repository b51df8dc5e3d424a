#ifndef MGS_SCORER_HPP
#define MGS_SCORER_HPP

#include <functional>
#include <span>

#include "mgs/search_graph.hpp"
#include "mgs/state_space.hpp"
#include "mgs/types.hpp"

namespace mgs {

/** Everything a scorer may look at while ranking open nodes. */
struct ScoreContext {
    SearchGraph& graph;
    StateSpace& space;
    // Budget the marginal-utility machinery should plan for: remaining budget
    // in contract-resources mode, the assumed budget in anytime mode.
    std::uint64_t planning_budget = 1;
};

/**
 * Ranks open nodes; lower scores are preferred, ties go to insertion order.
 * begin_round runs once per selection with the full open list, so scorers that
 * depend on the whole frontier (goal-progress, normalized combinations) can
 * precompute. score() must stay pure within a round.
 */
class NodeScorer {
public:
    virtual ~NodeScorer() = default;
    virtual void begin_round(std::span<const NodeIdx> /*open*/, ScoreContext& /*ctx*/) {}
    virtual Score score(NodeIdx n, ScoreContext& ctx) = 0;
};

/** Constant score: selection degenerates to FIFO, i.e. breadth-first order. */
class ConstantScorer : public NodeScorer {
public:
    Score score(NodeIdx, ScoreContext&) override { return 0.0; }
};

/** Adapts a plain state-scoring function. */
class FunctionScorer : public NodeScorer {
public:
    explicit FunctionScorer(std::function<double(StateId)> fn) : fn_(std::move(fn)) {}
    Score score(NodeIdx n, ScoreContext& ctx) override {
        return fn_(ctx.graph.node(n).state);
    }

private:
    std::function<double(StateId)> fn_;
};

} // namespace mgs

#endif
