#include "mgs/distance_heuristics.hpp"

#include <cmath>

namespace mgs {

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double h_min_dist(StateId s, std::span<const StateId> active, const DistanceEstimator& dist) {
    double best = kInfScore;
    for (StateId g : active) best = std::min(best, dist.distance(s, g));
    return best;
}

double h_sum_dist(StateId s, std::span<const StateId> active, const DistanceEstimator& dist) {
    if (active.empty()) return kInfScore;
    double sum = 0.0;
    for (StateId g : active) sum += dist.distance(s, g);
    return sum;
}

ProgressResult h_progress(std::span<const StateId> frontier, std::span<const StateId> active_goals,
                          const DistanceEstimator& dist) {
    ProgressResult out;
    out.scores.assign(frontier.size(), kInfScore);
    out.goal_owner.assign(active_goals.size(), 0);

    std::vector<double> assigned_sum(frontier.size(), 0.0);
    std::vector<std::uint32_t> assigned_cnt(frontier.size(), 0);

    for (std::size_t gi = 0; gi < active_goals.size(); ++gi) {
        double best = kInfScore;
        std::size_t owner = 0;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
            double d = dist.distance(frontier[fi], active_goals[gi]);
            if (d < best) { // ties keep the earliest frontier node
                best = d;
                owner = fi;
            }
        }
        out.goal_owner[gi] = owner;
        assigned_sum[owner] += best;
        assigned_cnt[owner] += 1;
    }
    for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
        if (assigned_cnt[fi] == 0) continue;
        double mean = assigned_sum[fi] / assigned_cnt[fi];
        out.scores[fi] = mean / assigned_cnt[fi];
    }
    return out;
}

double feature_penalty(double h, double nearest_visited_distance, const PenaltyParams& p) {
    if (std::isinf(nearest_visited_distance)) return h;
    return h * (1.0 + p.c1 * std::exp(-p.c2 * nearest_visited_distance));
}

namespace detail {
std::vector<StateId> active_goals(const GoalList& goals, bool disable_visited) {
    std::vector<StateId> out;
    out.reserve(goals.size());
    for (std::size_t i = 0; i < goals.size(); ++i)
        if (!disable_visited || !goals.visited(i)) out.push_back(goals.goal(i));
    return out;
}
} // namespace detail

void MinDistScorer::begin_round(std::span<const NodeIdx>, ScoreContext& ctx) {
    // Version 1 is the pristine list; disabling advances it per goal crossed off.
    std::uint64_t v = 1 + (disable_ ? goals_.size() - goals_.unvisited_count() : 0);
    if (v != version_) {
        version_ = v;
        active_ = detail::active_goals(goals_, disable_);
    }
    if (memo_.size() < ctx.graph.pool_size()) {
        memo_.resize(ctx.graph.pool_size());
        memo_version_.resize(ctx.graph.pool_size(), 0);
        memo_state_.resize(ctx.graph.pool_size());
    }
}

Score MinDistScorer::score(NodeIdx n, ScoreContext& ctx) {
    StateId s = ctx.graph.node(n).state;
    if (n < memo_.size() && memo_version_[n] == version_ && memo_state_[n] == s)
        return memo_[n];
    double h = h_min_dist(s, active_, dist_);
    if (n < memo_.size()) {
        memo_[n] = h;
        memo_version_[n] = version_;
        memo_state_[n] = s;
    }
    return h;
}

void SumDistScorer::begin_round(std::span<const NodeIdx>, ScoreContext& ctx) {
    std::uint64_t v = 1 + (disable_ ? goals_.size() - goals_.unvisited_count() : 0);
    if (v != version_) {
        version_ = v;
        active_ = detail::active_goals(goals_, disable_);
    }
    if (memo_.size() < ctx.graph.pool_size()) {
        memo_.resize(ctx.graph.pool_size());
        memo_version_.resize(ctx.graph.pool_size(), 0);
        memo_state_.resize(ctx.graph.pool_size());
    }
}

Score SumDistScorer::score(NodeIdx n, ScoreContext& ctx) {
    StateId s = ctx.graph.node(n).state;
    if (n < memo_.size() && memo_version_[n] == version_ && memo_state_[n] == s)
        return memo_[n];
    double h = h_sum_dist(s, active_, dist_);
    if (n < memo_.size()) {
        memo_[n] = h;
        memo_version_[n] = version_;
        memo_state_[n] = s;
    }
    return h;
}

void ProgressScorer::begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) {
    round_scores_.clear();
    std::vector<StateId> active = detail::active_goals(goals_, true);
    std::vector<StateId> frontier;
    frontier.reserve(open.size());
    for (NodeIdx n : open) frontier.push_back(ctx.graph.node(n).state);
    ProgressResult r = h_progress(frontier, active, dist_);
    for (std::size_t i = 0; i < open.size(); ++i) round_scores_[open[i]] = r.scores[i];
}

Score ProgressScorer::score(NodeIdx n, ScoreContext&) {
    auto it = round_scores_.find(n);
    return it == round_scores_.end() ? kInfScore : it->second;
}

void FeaturePenaltyScorer::on_goal_visited(std::vector<double> features) {
    if (cap_ == 0) return;
    if (visited_features_.size() < cap_) {
        visited_features_.push_back(std::move(features));
    } else {
        visited_features_[next_slot_] = std::move(features);
        next_slot_ = (next_slot_ + 1) % cap_;
    }
}

Score FeaturePenaltyScorer::score(NodeIdx n, ScoreContext& ctx) {
    double h = inner_.score(n, ctx);
    double dmin = kInfScore;
    if (!visited_features_.empty()) {
        std::vector<double> f = ctx.space.features(ctx.graph.node(n).state);
        for (const auto& vg : visited_features_)
            dmin = std::min(dmin, euclidean(f, vg));
    }
    return feature_penalty(h, dmin, params_);
}

} // namespace mgs
