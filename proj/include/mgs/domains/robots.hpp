#ifndef MGS_DOMAINS_ROBOTS_HPP
#define MGS_DOMAINS_ROBOTS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "mgs/domains/grid.hpp"
#include "mgs/engine_common.hpp"
#include "mgs/goal_list.hpp"
#include "mgs/outcome.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

/**
 * N robots sweep one grid for objects. Each robot runs its own greedy
 * best-first search, but all of them draw generations from one shared budget
 * (steps interleave round-robin) and cross objects off one shared list, so an
 * object bagged by robot 1 stops attracting everyone else. Robots start at
 * uniformly random cells; sharing a cell is fine.
 */
struct MultiRobotParams {
    int robots = 2;
    std::size_t objects = 10;
    std::uint64_t resource_limit = 0; // total generations across all robots
    EngineParams engine;
};

struct MultiRobotResult {
    AnytimeTrace trace;              // global generations vs. objects swept
    std::uint64_t generated = 0;     // summed across robots
    std::size_t objects_swept = 0;
    std::vector<StateId> starts;     // robot order
};

// Builds the per-robot frontier scorer. Robots may not share one scorer
// instance (scorers carry per-search caches), hence a factory.
using RobotScorerFactory = std::function<std::unique_ptr<NodeScorer>(
    int robot, const GoalList& objects, const DistanceEstimator& dist)>;

MultiRobotResult run_multi_robot(const GridWorld& grid, const MultiRobotParams& params,
                                 const RobotScorerFactory& make_scorer, std::uint64_t seed);

} // namespace mgs

#endif
