#ifndef MGS_DISTANCE_HEURISTICS_HPP
#define MGS_DISTANCE_HEURISTICS_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mgs/goal_list.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

// Pure scoring primitives.  `active` lists the goal states the heuristic may
// still see: the unvisited ones when influence disabling is on, all otherwise.

double h_min_dist(StateId s, std::span<const StateId> active, const DistanceEstimator& dist);
double h_sum_dist(StateId s, std::span<const StateId> active, const DistanceEstimator& dist);

// Goal-progress scores for a whole frontier: each unvisited goal is assigned
// to its closest frontier node (ties to the earliest node), and a node's score
// is the mean distance to its assigned goals divided by how many it got.
// Nodes that attract no goal get the +inf sentinel.
struct ProgressResult {
    std::vector<double> scores;              // parallel to the frontier span
    std::vector<std::size_t> goal_owner;     // per active goal: frontier position
};
ProgressResult h_progress(std::span<const StateId> frontier, std::span<const StateId> active_goals,
                          const DistanceEstimator& dist);

struct PenaltyParams {
    double c1 = 1.0;
    double c2 = 0.2;
};

// Push a score away from regions whose goals were already consumed:
// h * (1 + c1 * exp(-c2 * d)), d = feature distance to the nearest visited goal.
double feature_penalty(double h, double nearest_visited_distance, const PenaltyParams& p);

// ---------------------------------------------------------------------------

namespace detail {
std::vector<StateId> active_goals(const GoalList& goals, bool disable_visited);
}

// Scores of the min/sum family only change when a goal is crossed off, so both
// scorers memoize per node and invalidate on the visited-goal count. The memo
// entry remembers which state it was computed for, so recycled node slots
// (backtracking reclamation) can never serve a stale value.
class MinDistScorer : public NodeScorer {
public:
    MinDistScorer(const GoalList& goals, const DistanceEstimator& dist, bool disable_visited)
        : goals_(goals), dist_(dist), disable_(disable_visited) {}
    void begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) override;
    Score score(NodeIdx n, ScoreContext& ctx) override;

private:
    const GoalList& goals_;
    const DistanceEstimator& dist_;
    bool disable_;
    std::vector<StateId> active_;
    std::vector<double> memo_;
    std::vector<std::uint64_t> memo_version_;
    std::vector<StateId> memo_state_;
    std::uint64_t version_ = 0;
};

class SumDistScorer : public NodeScorer {
public:
    SumDistScorer(const GoalList& goals, const DistanceEstimator& dist, bool disable_visited)
        : goals_(goals), dist_(dist), disable_(disable_visited) {}
    void begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) override;
    Score score(NodeIdx n, ScoreContext& ctx) override;

private:
    const GoalList& goals_;
    const DistanceEstimator& dist_;
    bool disable_;
    std::vector<StateId> active_;
    std::vector<double> memo_;
    std::vector<std::uint64_t> memo_version_;
    std::vector<StateId> memo_state_;
    std::uint64_t version_ = 0;
};

class ProgressScorer : public NodeScorer {
public:
    ProgressScorer(const GoalList& goals, const DistanceEstimator& dist)
        : goals_(goals), dist_(dist) {}
    void begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) override;
    Score score(NodeIdx n, ScoreContext& ctx) override;

private:
    const GoalList& goals_;
    const DistanceEstimator& dist_;
    std::unordered_map<NodeIdx, double> round_scores_;
};

/**
 * Feature-space influence disabling: wraps another scorer and penalizes nodes
 * close (in feature space) to goals already collected. Feed visited goal
 * features through on_goal_visited; the cache keeps the most recent `cap`.
 */
class FeaturePenaltyScorer : public NodeScorer {
public:
    FeaturePenaltyScorer(NodeScorer& inner, PenaltyParams params, std::size_t cap = 1000)
        : inner_(inner), params_(params), cap_(cap) {}

    void on_goal_visited(std::vector<double> features);

    void begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) override {
        inner_.begin_round(open, ctx);
    }
    Score score(NodeIdx n, ScoreContext& ctx) override;

private:
    NodeScorer& inner_;
    PenaltyParams params_;
    std::size_t cap_;
    std::vector<std::vector<double>> visited_features_; // ring, newest overwrite
    std::size_t next_slot_ = 0;
};

double euclidean(std::span<const double> a, std::span<const double> b);

} // namespace mgs

#endif
