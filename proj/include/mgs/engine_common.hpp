#ifndef MGS_ENGINE_COMMON_HPP
#define MGS_ENGINE_COMMON_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mgs/search_graph.hpp"
#include "mgs/state_space.hpp"

namespace mgs {

// What budget figure the utility machinery should plan against.
enum class BudgetMode {
    kContractResources, // remaining budget: R - generated so far
    kAnytime,           // a configured assumed budget (graph-size estimate)
};

struct EngineParams {
    int counter_depth = 4;          // D
    std::uint32_t sigma = 8;        // support threshold
    BudgetMode budget_mode = BudgetMode::kContractResources;
    std::uint64_t assumed_budget = 0; // 0: fall back to the resource limit
    bool record_paths = false;

    // sibling clustering (virtual nodes)
    bool cluster_siblings = false;
    double cluster_tau = 0.5;

    // diversification of the expansion choice
    bool diversify = false;
    std::size_t diversity_window = 50;
    std::size_t diversity_k = 5;
};

struct EngineHooks {
    std::function<void(StateId, NodeIdx)> on_goal_collected;
    std::function<void(NodeIdx)> on_expanded;
};

namespace detail {

struct ExpandResult {
    std::vector<NodeIdx> fresh;          // novel children, generation order
    std::vector<NodeIdx> goals_collected;
    bool truncated = false;              // budget ran out mid-expansion
};

// Materialize all successors of n (duplicates free, novel ones metered and
// goal-tested when collect_on_generation), then optionally cluster the fresh
// siblings into virtual nodes.
ExpandResult expand_node(SearchGraph& g, StateSpace& space, NodeIdx n,
                         const EngineParams& params, const EngineHooks& hooks,
                         bool collect_on_generation);

std::uint64_t planning_budget(const SearchGraph& g, const EngineParams& params);

void collect_goal(SearchGraph& g, StateSpace& space, NodeIdx n, const EngineParams& params,
                  const EngineHooks& hooks);

} // namespace detail

} // namespace mgs

#endif
