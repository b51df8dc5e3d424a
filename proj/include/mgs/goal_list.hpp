#ifndef MGS_GOAL_LIST_HPP
#define MGS_GOAL_LIST_HPP

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mgs/types.hpp"

namespace mgs {

/** Pairwise distance estimate between states (domain supplied, e.g. Manhattan). */
class DistanceEstimator {
public:
    virtual ~DistanceEstimator() = default;
    virtual double distance(StateId a, StateId b) const = 0;
};

/**
 * Explicit goal set with visited flags. Distance heuristics read it and the
 * influence-disabling hook flips goals to visited as they are collected.
 */
class GoalList {
public:
    explicit GoalList(std::vector<StateId> goals) : goals_(std::move(goals)) {
        visited_.assign(goals_.size(), false);
        for (std::size_t i = 0; i < goals_.size(); ++i) {
            if (!index_.emplace(goals_[i], i).second)
                throw std::invalid_argument("goal list: duplicate goal state");
        }
        unvisited_ = goals_.size();
    }

    std::size_t size() const { return goals_.size(); }
    std::size_t unvisited_count() const { return unvisited_; }
    StateId goal(std::size_t i) const { return goals_[i]; }
    bool visited(std::size_t i) const { return visited_[i]; }

    bool contains(StateId s) const { return index_.count(s) != 0; }

    // Idempotent; unknown states are an error.
    void mark_visited(StateId s) {
        auto it = index_.find(s);
        if (it == index_.end())
            throw std::invalid_argument("goal list: state is not a goal");
        if (!visited_[it->second]) {
            visited_[it->second] = true;
            --unvisited_;
        }
    }

    template <typename F>
    void for_each_unvisited(F&& f) const {
        for (std::size_t i = 0; i < goals_.size(); ++i)
            if (!visited_[i]) f(i, goals_[i]);
    }

private:
    std::vector<StateId> goals_;
    std::vector<bool> visited_;
    std::unordered_map<StateId, std::size_t> index_;
    std::size_t unvisited_ = 0;
};

} // namespace mgs

#endif
