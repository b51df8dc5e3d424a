#include "mgs/mu_inference.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgs {

double partial_mu(const SearchGraph& g, NodeIdx n, int d) {
    const Node& node = g.node(n);
    std::uint32_t nd = node.cn[static_cast<std::size_t>(d) - 1];
    if (nd == 0) throw std::invalid_argument("partial_mu: no visited descendants at this depth");
    return static_cast<double>(node.cg[d - 1]) / static_cast<double>(nd);
}

void MuEvaluator::ensure_scratch() {
    if (mu_cache_.size() < g_.pool_size()) {
        mu_cache_.resize(g_.pool_size());
        ts_cache_.resize(g_.pool_size());
        on_path_.resize(g_.pool_size(), 0);
    }
}

void MuEvaluator::begin_round() {
    ++round_;
    ensure_scratch();
}

double MuEvaluator::mu(NodeIdx n, int d) {
    begin_round(); // standalone query: drop caches from previous graph states
    return mu_rec(n, d);
}

double MuEvaluator::tree_size(NodeIdx n, int d) {
    begin_round();
    return ts_rec(n, d);
}

double MuEvaluator::mu_rec(NodeIdx n, int d) {
    CacheLine& line = mu_cache_[n];
    if (line.stamp[d - 1] == round_) return line.val[d - 1];

    double result = 0.0;
    const Node& node = g_.node(n);
    if (g_.supported(n, d)) {
        result = static_cast<double>(node.cg[d - 1]) / static_cast<double>(node.cn[d - 1]);
    } else if (node.parents.empty()) {
        result = 0.0;
    } else {
        double sum = 0.0;
        int cnt = 0;
        for (NodeIdx p : node.parents) {
            for (NodeIdx c : g_.node(p).children) {
                if (c == n || !g_.node(c).alive) continue;
                if (g_.supported(c, d)) {
                    sum += static_cast<double>(g_.node(c).cg[d - 1]) /
                           static_cast<double>(g_.node(c).cn[d - 1]);
                    ++cnt;
                }
            }
        }
        if (cnt > 0) {
            result = sum / cnt;
        } else {
            int up = std::min(d + 1, g_.counter_depth());
            on_path_[n] = round_;
            double psum = 0.0;
            int pcnt = 0;
            for (NodeIdx p : node.parents) {
                if (on_path_[p] == round_) continue; // cycle guard
                psum += mu_rec(p, up);
                ++pcnt;
            }
            on_path_[n] = 0;
            result = pcnt > 0 ? psum / pcnt : 0.0;
        }
    }
    line.val[d - 1] = result;
    line.stamp[d - 1] = round_;
    return result;
}

double MuEvaluator::ts_rec(NodeIdx n, int d) {
    CacheLine& line = ts_cache_[n];
    if (line.stamp[d - 1] == round_) return line.val[d - 1];

    const Node& node = g_.node(n);
    double own = static_cast<double>(node.cn[d - 1]);
    double result = own;
    if (!g_.supported(n, d) && !node.parents.empty()) {
        double sum = 0.0;
        int cnt = 0;
        for (NodeIdx p : node.parents) {
            for (NodeIdx c : g_.node(p).children) {
                if (c == n || !g_.node(c).alive) continue;
                if (g_.supported(c, d)) {
                    sum += static_cast<double>(g_.node(c).cn[d - 1]);
                    ++cnt;
                }
            }
        }
        if (cnt > 0) {
            result = sum / cnt;
        } else {
            int up = std::min(d + 1, g_.counter_depth());
            on_path_[n] = round_;
            double psum = 0.0;
            int pcnt = 0;
            for (NodeIdx p : node.parents) {
                if (on_path_[p] == round_) continue;
                double branch = std::max<std::size_t>(g_.node(p).children.size(), 1);
                psum += ts_rec(p, up) / branch;
                ++pcnt;
            }
            on_path_[n] = 0;
            result = pcnt > 0 ? psum / pcnt : own;
        }
    }
    line.val[d - 1] = result;
    line.stamp[d - 1] = round_;
    return result;
}

int MuEvaluator::pick_depth(NodeIdx n, std::uint64_t budget) {
    if (budget < 1) throw std::invalid_argument("marginal utility: budget must be >= 1");
    ensure_scratch();
    int depth = 1;
    for (int d = 1; d <= g_.counter_depth(); ++d) {
        if (ts_rec(n, d) < static_cast<double>(budget)) depth = d;
    }
    return depth;
}

double MuEvaluator::marginal_utility(NodeIdx n, std::uint64_t budget) {
    int depth = pick_depth(n, budget);
    return mu_rec(n, depth);
}

} // namespace mgs
