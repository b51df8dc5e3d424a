#include "mgs/domains/webgraph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mgs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

ExplicitGraph synthetic_web_graph(const WebGraphParams& params, std::uint64_t seed) {
    if (params.nodes < 1) throw std::invalid_argument("web graph: need at least one node");
    if (params.topic_dims < 1) throw std::invalid_argument("web graph: need at least one topic");
    if (params.goal_topic >= params.topic_dims)
        throw std::invalid_argument("web graph: goal topic out of range");
    if (params.goal_rate < 0.0 || params.goal_rate > 1.0)
        throw std::invalid_argument("web graph: goal rate must be in [0,1]");
    if (params.mean_out_degree < 1.0)
        throw std::invalid_argument("web graph: mean out-degree must be >= 1");

    const std::size_t n = params.nodes;
    const std::size_t dims = params.topic_dims;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    ExplicitGraph g;
    g.feature_dim = dims;
    g.succs.resize(n);
    g.feats.resize(n);
    g.goal.assign(n, 0);

    // Topic mixtures: one dominant topic per page plus a skewed background,
    // normalized to sum 1. pow(u, 4) concentrates background mass near zero
    // so the dominant coordinate stands out.
    std::vector<std::size_t> dominant(n);
    std::uniform_int_distribution<std::size_t> pick_topic(0, dims - 1);
    for (std::size_t i = 0; i < n; ++i) {
        dominant[i] = pick_topic(rng);
        auto& f = g.feats[i];
        f.resize(dims);
        double sum = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            double u = uni(rng);
            f[d] = u * u * u * u;
            sum += f[d];
        }
        f[dominant[i]] += 1.0;
        sum += 1.0;
        for (std::size_t d = 0; d < dims; ++d) f[d] /= sum;
    }

    // Stub-based preferential attachment: every link endpoint lands in the
    // pool, so sampling the pool is sampling by degree. A homophilic stub
    // retries for a partner sharing the dominant topic before settling.
    std::vector<std::uint32_t> pool;
    pool.reserve(static_cast<std::size_t>(static_cast<double>(n) * params.mean_out_degree * 2.2));
    pool.push_back(0);

    std::poisson_distribution<int> stub_count(params.mean_out_degree);
    for (std::size_t i = 1; i < n; ++i) {
        int stubs = std::max(1, stub_count(rng));
        std::uint32_t self = static_cast<std::uint32_t>(i);
        // The pool gains node i's endpoints only after all its stubs are
        // placed, so a node can never link to itself.
        std::vector<std::uint32_t> partners;
        for (int s = 0; s < stubs; ++s) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            std::uint32_t partner = pool[pick(rng)];
            if (uni(rng) < params.homophily) {
                for (int tries = 0; tries < 32 && dominant[partner] != dominant[i]; ++tries)
                    partner = pool[pick(rng)];
            }
            if (uni(rng) < 0.5)
                g.succs[self].push_back(partner);
            else
                g.succs[partner].push_back(self);
            partners.push_back(partner);
        }
        for (std::uint32_t partner : partners) {
            pool.push_back(partner);
            pool.push_back(self);
        }
    }
    for (auto& row : g.succs) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    // Threshold on the goal-topic coordinate at the (1 - rate) quantile.
    std::size_t goal_count =
        std::min(n, static_cast<std::size_t>(std::llround(params.goal_rate * static_cast<double>(n))));
    if (goal_count > 0) {
        std::vector<double> coords(n);
        for (std::size_t i = 0; i < n; ++i) coords[i] = g.feats[i][params.goal_topic];
        std::nth_element(coords.begin(), coords.end() - static_cast<std::ptrdiff_t>(goal_count),
                         coords.end());
        double threshold = coords[n - goal_count];
        for (std::size_t i = 0; i < n; ++i)
            g.goal[i] = g.feats[i][params.goal_topic] >= threshold ? 1 : 0;
    }

    g.validate();
    return g;
}

double WebDistanceEstimator::distance(StateId a, StateId b) const {
    const auto& fa = g_.feats[static_cast<std::size_t>(a)];
    const auto& fb = g_.feats[static_cast<std::size_t>(b)];
    double s = 0.0;
    for (std::size_t d = 0; d < fa.size(); ++d) {
        double diff = fa[d] - fb[d];
        s += diff * diff;
    }
    double base = scale_ * std::sqrt(s);

    // Deterministic relative noise per (a, b) pair.
    std::uint64_t h = splitmix64(seed_ ^ splitmix64(a * 0x100000001b3ull ^ (b + 0x9e3779b9ull)));
    double u = static_cast<double>(h >> 11) * 0x1.0p-53; // [0,1)
    return base * (1.0 + noise_ * (2.0 * u - 1.0));
}

} // namespace mgs
