#include "mgs/backtracking.hpp"

#include <algorithm>
#include <chrono>

namespace mgs {

BacktrackingEngine::BacktrackingEngine(SearchProblem problem, NodeScorer& value_orderer,
                                       EngineParams params, EngineHooks hooks, bool reclaim)
    : problem_(std::move(problem)), orderer_(value_orderer), params_(params),
      hooks_(std::move(hooks)), reclaim_(reclaim) {
    problem_.validate();
    if (params_.cluster_siblings) reclaim_ = false; // virtual nodes pin the fringe
    graph_ = std::make_unique<SearchGraph>(params_.counter_depth, params_.sigma,
                                           problem_.resource_limit);
}

bool BacktrackingEngine::descend(NodeIdx child) {
    auto res = detail::expand_node(*graph_, *problem_.space, child, params_, hooks_, true);
    Frame f;
    f.node = child;
    for (NodeIdx c : res.fresh)
        if (!graph_->node(c).goal) f.pending.push_back(c);
    stack_.push_back(std::move(f));
    return !res.truncated;
}

void BacktrackingEngine::reap_children(NodeIdx node) {
    if (!reclaim_) return;
    // Every child is a leaf by now: visited subtrees were reaped on their own
    // pops, goals were never descended into. Counters keep the history.
    std::vector<NodeIdx> children = graph_->node(node).children;
    for (NodeIdx c : children) {
        if (!graph_->node(c).alive || !graph_->node(c).children.empty()) continue;
        StateId s = graph_->node(c).state;
        graph_->remove_leaf(c);
        problem_.space->release(s);
    }
}

SearchOutcome BacktrackingEngine::run() {
    auto t0 = std::chrono::steady_clock::now();
    bool out_of_budget = false;

    for (StateId root_state : problem_.initial_states) {
        if (out_of_budget) break;
        bool goal = problem_.space->is_goal(root_state);
        NodeIdx root = graph_->add_root(root_state, goal);
        if (goal) {
            detail::collect_goal(*graph_, *problem_.space, root, params_, hooks_);
            continue; // a goal fails by definition: nothing to explore below
        }
        if (!descend(root)) out_of_budget = true;

        while (!stack_.empty() && !out_of_budget) {
            Frame& top = stack_.back();
            if (top.pending.empty()) {
                reap_children(top.node);
                stack_.pop_back();
                continue;
            }
            ScoreContext ctx{*graph_, *problem_.space,
                             detail::planning_budget(*graph_, params_)};
            orderer_.begin_round(top.pending, ctx);
            std::size_t best = 0;
            Score best_s = orderer_.score(top.pending[0], ctx);
            for (std::size_t i = 1; i < top.pending.size(); ++i) {
                Score s = orderer_.score(top.pending[i], ctx);
                if (s < best_s) {
                    best_s = s;
                    best = i;
                }
            }
            NodeIdx child = top.pending[best];
            top.pending.erase(top.pending.begin() + static_cast<std::ptrdiff_t>(best));
            if (!descend(child)) out_of_budget = true;
        }
    }

    termination_ = out_of_budget ? Termination::kResourcesExhausted : Termination::kOpenExhausted;
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return graph_->finish(termination_, wall);
}

} // namespace mgs
