#include "mgs/hill_climbing.hpp"

#include <chrono>

namespace mgs {

HillClimbingEngine::HillClimbingEngine(SearchProblem problem, NodeScorer& scorer,
                                       std::size_t walk_length, std::uint64_t seed,
                                       EngineParams params, EngineHooks hooks)
    : problem_(std::move(problem)), scorer_(scorer), walk_len_(walk_length), params_(params),
      hooks_(std::move(hooks)), rng_(seed) {
    problem_.validate();
    graph_ = std::make_unique<SearchGraph>(params_.counter_depth, params_.sigma,
                                           problem_.resource_limit);
    for (StateId s : problem_.initial_states) {
        bool goal = problem_.space->is_goal(s);
        NodeIdx r = graph_->add_root(s, goal);
        roots_.push_back(r);
        ++unexpanded_known_;
        if (goal) {
            detail::collect_goal(*graph_, *problem_.space, r, params_, hooks_);
            cur_ = r;
            pending_walk_ = walk_len_;
        }
    }
    if (cur_ == kNoNode) cur_ = random_root();
}

NodeIdx HillClimbingEngine::random_root() {
    std::uniform_int_distribution<std::size_t> pick(0, roots_.size() - 1);
    return roots_[pick(rng_)];
}

bool HillClimbingEngine::expand_current() {
    if (graph_->node(cur_).expanded) return true;
    auto res = detail::expand_node(*graph_, *problem_.space, cur_, params_, hooks_, true);
    --unexpanded_known_;
    unexpanded_known_ += res.fresh.size();
    if (!res.fresh.empty()) stagnant_moves_ = 0;
    if (!res.goals_collected.empty()) {
        cur_ = res.goals_collected.back();
        pending_walk_ = walk_len_;
    }
    return !res.truncated;
}

SearchOutcome HillClimbingEngine::run() {
    auto t0 = std::chrono::steady_clock::now();
    termination_ = Termination::kResourcesExhausted;

    while (true) {
        if (graph_->meter().exhausted()) {
            termination_ = Termination::kResourcesExhausted;
            break;
        }
        if (unexpanded_known_ == 0) {
            // Whole reachable component generated and expanded: no move can
            // produce anything new, walking would spin forever.
            termination_ = Termination::kOpenExhausted;
            break;
        }

        if (!expand_current()) break; // budget died mid-expansion

        // Greedy moves over an already-explored region can cycle without ever
        // spending budget; a random-walk kick breaks the cycle (some frontier
        // node is always reachable inside the explored component).
        if (++stagnant_moves_ > 2 * graph_->pool_size() + 16) {
            pending_walk_ = std::max<std::size_t>(walk_len_, 8);
            stagnant_moves_ = 0;
        }

        const auto& children = graph_->node(cur_).children;
        if (children.empty()) {
            cur_ = random_root();
            pending_walk_ = 0;
            continue;
        }

        if (pending_walk_ > 0) {
            std::uniform_int_distribution<std::size_t> pick(0, children.size() - 1);
            NodeIdx next = children[pick(rng_)];
            --pending_walk_;
            cur_ = next;
            continue;
        }

        ScoreContext ctx{*graph_, *problem_.space, detail::planning_budget(*graph_, params_)};
        scorer_.begin_round(children, ctx);
        NodeIdx best = children[0];
        Score best_s = scorer_.score(best, ctx);
        for (std::size_t i = 1; i < children.size(); ++i) {
            Score s = scorer_.score(children[i], ctx);
            if (s < best_s) {
                best_s = s;
                best = children[i];
            }
        }
        cur_ = best;
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return graph_->finish(termination_, wall);
}

} // namespace mgs
