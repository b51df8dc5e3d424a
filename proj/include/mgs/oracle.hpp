#ifndef MGS_ORACLE_HPP
#define MGS_ORACLE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mgs/state_space.hpp"

namespace mgs {

/**
 * Brute-force ground truth, test-support quality: exhaustive enumeration of
 * future search forests, full goal sweeps, exact path costs. Everything here
 * is deliberately independent of the engine machinery it checks.
 */

/**
 * A future-search forest: a set of so-far-ungenerated states, every one of
 * them reachable from the open set through forest members only, of total
 * size `r` (smaller only when the whole reachable remainder is smaller).
 * Budget semantics match the engines': regenerating something in `open` or
 * `closed` is free and contributes nothing, so those states never appear in
 * a forest.
 *
 * Instances are capped hard (r <= 12, candidate universe <= 63 states, and a
 * safety valve on the enumeration set) because the enumeration is
 * exponential; callers get an exception, never a silent truncation.
 */
struct ForestInstance {
    StateSpace* space = nullptr;
    std::vector<StateId> open;
    std::vector<StateId> closed;            // generated but no longer open
    std::unordered_set<StateId> collected;  // goals that no longer count
    std::uint64_t r = 0;
};

std::uint64_t optimal_forest_goal_count(const ForestInstance& inst);

// Open nodes with a direct successor inside at least one optimal forest.
// When even the best forest collects nothing, every open node is vacuously
// as good as any other and the whole open set comes back.
std::vector<StateId> opt_membership(const ForestInstance& inst);

struct GoalSweep {
    std::uint64_t count = 0;
    std::uint64_t states_visited = 0;    // every distinct state, roots included
    std::vector<StateId> states;         // empty for reclaiming tree spaces
    std::vector<std::string> encoded;    // filled when keep_encoded
};

// Full traversal. Tree spaces are walked without a visited set and their
// states are released on the way out, so reclaiming slab spaces stay small;
// graph spaces get a plain visited-set sweep.
GoalSweep exhaustive_goals(StateSpace& space, const std::vector<StateId>& roots,
                           bool keep_encoded = false);

// Exact cheapest path costs from the source set to every reachable state
// (Dijkstra; absent key = unreachable).
std::unordered_map<StateId, double> exact_shortest_paths(StateSpace& space,
                                                         const std::vector<StateId>& sources);

} // namespace mgs

#endif
