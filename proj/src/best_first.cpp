#include "mgs/best_first.hpp"

#include <algorithm>
#include <chrono>

namespace mgs {

BestFirstEngine::BestFirstEngine(SearchProblem problem, NodeScorer& scorer, EngineParams params,
                                 EngineHooks hooks)
    : problem_(std::move(problem)), scorer_(scorer), params_(params), hooks_(std::move(hooks)),
      diversity_(params.diversity_window) {
    problem_.validate();
    graph_ = std::make_unique<SearchGraph>(params_.counter_depth, params_.sigma,
                                           problem_.resource_limit);
    for (StateId s : problem_.initial_states) {
        bool goal = problem_.space->is_goal(s);
        NodeIdx r = graph_->add_root(s, goal);
        graph_->node(r).in_open = true;
        open_.push_back(r);
        if (goal) detail::collect_goal(*graph_, *problem_.space, r, params_, hooks_);
    }
}

NodeIdx BestFirstEngine::select() {
    ScoreContext ctx{*graph_, *problem_.space, detail::planning_budget(*graph_, params_)};
    scorer_.begin_round(open_, ctx);

    if (!params_.diversify) {
        NodeIdx best = open_[0];
        Score best_s = scorer_.score(best, ctx);
        for (std::size_t i = 1; i < open_.size(); ++i) {
            Score s = scorer_.score(open_[i], ctx);
            if (s < best_s) {
                best_s = s;
                best = open_[i];
            }
        }
        return best;
    }

    // Diversified choice: take the k best-scored candidates, then prefer the
    // one farthest (in feature space) from recently expanded nodes.
    std::size_t k = std::max<std::size_t>(1, params_.diversity_k);
    std::vector<std::pair<Score, std::size_t>> ranked; // (score, open position)
    ranked.reserve(open_.size());
    for (std::size_t i = 0; i < open_.size(); ++i)
        ranked.emplace_back(scorer_.score(open_[i], ctx), i);
    std::size_t kk = std::min(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(kk),
                      ranked.end());
    std::vector<std::vector<double>> feats;
    feats.reserve(kk);
    for (std::size_t i = 0; i < kk; ++i)
        feats.push_back(problem_.space->features(graph_->node(open_[ranked[i].second]).state));
    std::size_t pick = diversify_select(feats, diversity_);
    return open_[ranked[pick].second];
}

bool BestFirstEngine::step() {
    if (done_) return false;
    if (graph_->meter().exhausted()) {
        termination_ = Termination::kResourcesExhausted;
        done_ = true;
        return false;
    }
    if (open_.empty()) {
        termination_ = Termination::kOpenExhausted;
        done_ = true;
        return false;
    }

    auto t0 = std::chrono::steady_clock::now();
    NodeIdx n = select();
    open_.erase(std::find(open_.begin(), open_.end(), n));
    graph_->node(n).in_open = false;

    if (params_.diversify && problem_.space->has_features())
        diversity_.push(problem_.space->features(graph_->node(n).state));

    auto res = detail::expand_node(*graph_, *problem_.space, n, params_, hooks_, true);
    for (NodeIdx c : res.fresh) {
        graph_->node(c).in_open = true;
        open_.push_back(c);
    }
    if (res.truncated) {
        termination_ = Termination::kResourcesExhausted;
        done_ = true;
    }
    wall_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return !done_;
}

SearchOutcome BestFirstEngine::run() {
    while (step()) {
    }
    return finish();
}

SearchOutcome BestFirstEngine::finish() const {
    return graph_->finish(termination_, wall_seconds_);
}

} // namespace mgs
