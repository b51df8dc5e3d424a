#include "mgs/astar_epsilon.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace mgs {

namespace {
constexpr double kTieEps = 1e-9;
}

AstarEpsilonEngine::AstarEpsilonEngine(SearchProblem problem,
                                       std::function<double(StateId)> admissible_h,
                                       NodeScorer& focal_scorer, double epsilon,
                                       EngineParams params, EngineHooks hooks)
    : problem_(std::move(problem)), h_(std::move(admissible_h)), focal_(focal_scorer),
      eps_(epsilon), params_(params), hooks_(std::move(hooks)) {
    problem_.validate();
    if (eps_ < 0.0) throw std::invalid_argument("epsilon must be >= 0");
    graph_ = std::make_unique<SearchGraph>(params_.counter_depth, params_.sigma,
                                           problem_.resource_limit);
    graph_->on_g_improved = [this](NodeIdx n) {
        Node& node = graph_->node(n);
        if (node.expanded && !node.in_open) {
            node.in_open = true;
            open_.push_back(n);
        }
    };
    for (StateId s : problem_.initial_states) {
        NodeIdx r = graph_->add_root(s, problem_.space->is_goal(s));
        graph_->node(r).in_open = true;
        open_.push_back(r);
    }
}

double AstarEpsilonEngine::f_of(NodeIdx n) {
    if (h_cache_.size() <= static_cast<std::size_t>(n)) {
        h_cache_.resize(graph_->pool_size(), -1.0);
        collected_flag_.resize(graph_->pool_size(), false);
    }
    if (h_cache_[n] < 0.0) h_cache_[n] = h_(graph_->node(n).state);
    return graph_->node(n).g + h_cache_[n];
}

bool AstarEpsilonEngine::step() {
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

    double f_min = f_of(open_[0]);
    for (std::size_t i = 1; i < open_.size(); ++i) f_min = std::min(f_min, f_of(open_[i]));

    // Every open node above the collected-goal cutoff means nothing worth
    // (1+eps)-collecting remains reachable.
    if (has_goal_ && f_min > (1.0 + eps_) * g_min_ + kTieEps) {
        termination_ = Termination::kCutoff;
        done_ = true;
        return false;
    }

    std::vector<NodeIdx> focal;
    double bound = (1.0 + eps_) * f_min + kTieEps;
    for (NodeIdx n : open_)
        if (f_of(n) <= bound) focal.push_back(n);

    ScoreContext ctx{*graph_, *problem_.space, detail::planning_budget(*graph_, params_)};
    focal_.begin_round(focal, ctx);
    NodeIdx best = focal[0];
    Score best_s = focal_.score(best, ctx);
    for (std::size_t i = 1; i < focal.size(); ++i) {
        Score s = focal_.score(focal[i], ctx);
        if (s < best_s) {
            best_s = s;
            best = focal[i];
        }
    }

    open_.erase(std::find(open_.begin(), open_.end(), best));
    Node& bn = graph_->node(best);
    bn.in_open = false;

    if (bn.goal && !collected_flag_[best]) {
        bool admissible = !has_goal_ || bn.g <= (1.0 + eps_) * g_min_ + kTieEps;
        if (admissible) {
            collected_flag_[best] = true;
            detail::collect_goal(*graph_, *problem_.space, best, params_, hooks_);
            g_min_ = has_goal_ ? std::min(g_min_, bn.g) : bn.g;
            has_goal_ = true;
        }
    }

    auto res = detail::expand_node(*graph_, *problem_.space, best, params_, hooks_, false);
    for (NodeIdx c : res.fresh) {
        graph_->node(c).in_open = true;
        open_.push_back(c);
    }
    if (h_cache_.size() < graph_->pool_size()) {
        h_cache_.resize(graph_->pool_size(), -1.0);
        collected_flag_.resize(graph_->pool_size(), false);
    }
    if (res.truncated) {
        termination_ = Termination::kResourcesExhausted;
        done_ = true;
    }
    wall_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return !done_;
}

SearchOutcome AstarEpsilonEngine::run() {
    while (step()) {
    }
    return finish();
}

SearchOutcome AstarEpsilonEngine::finish() const {
    return graph_->finish(termination_, wall_seconds_);
}

} // namespace mgs
