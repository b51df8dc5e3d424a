#ifndef MGS_STATE_SPACE_HPP
#define MGS_STATE_SPACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgs/types.hpp"

namespace mgs {

/**
 * A search domain: states, successor generation and goal predicate.
 *
 * successors() may intern new states (hence non-const); it must be
 * deterministic and return successors in a stable order, because tie-breaking
 * is FIFO on generation order. edge_cost defaults to unit cost. Features are
 * optional and only consulted by feature-based machinery (clustering,
 * diversification, penalties, induction).
 */
class StateSpace {
public:
    virtual ~StateSpace() = default;

    virtual std::vector<StateId> successors(StateId s) = 0;
    virtual bool is_goal(StateId s) = 0;

    virtual double edge_cost(StateId /*from*/, StateId /*to*/) { return 1.0; }

    virtual bool has_features() const { return false; }
    virtual std::vector<double> features(StateId /*s*/) { return {}; }

    // True for spaces where every state has exactly one generating path
    // (CSP-style trees). Lets exhaustive traversals skip the visited set.
    virtual bool is_tree() const { return false; }

    // Human/machine readable canonical form, used for replay checks and for
    // recording collected goals from engines that reclaim node storage.
    virtual std::string encode(StateId s) { return std::to_string(s); }

    // Storage reclamation hook for slab-interning spaces; default no-op.
    virtual void release(StateId /*s*/) {}
};

/** One search instance: a space, where to start, and the generation budget. */
struct SearchProblem {
    StateSpace* space = nullptr;
    std::vector<StateId> initial_states;
    std::uint64_t resource_limit = 0; // R, in generated nodes

    void validate() const {
        if (space == nullptr)
            throw std::invalid_argument("search problem: null state space");
        if (initial_states.empty())
            throw std::invalid_argument("search problem: empty initial state set");
        if (resource_limit < 1)
            throw std::invalid_argument("search problem: resource limit must be >= 1");
    }
};

} // namespace mgs

#endif
