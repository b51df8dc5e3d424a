#include "mgs/induction.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mgs/distance_heuristics.hpp"

namespace mgs {

KnnMuModel::KnnMuModel(int max_depth, int k, std::size_t scan_cap)
    : k_(k), scan_cap_(scan_cap == 0 ? 1 : scan_cap) {
    if (max_depth < 1 || max_depth > kMaxCounterDepth)
        throw std::invalid_argument("model depth out of range");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    stores_.resize(static_cast<std::size_t>(max_depth));
    by_node_.resize(static_cast<std::size_t>(max_depth));
}

void KnnMuModel::add_example(std::uint64_t node_key, int depth, std::vector<double> features,
                             double target) {
    if (depth < 1 || depth > max_depth()) throw std::invalid_argument("example depth out of range");
    auto& store = stores_[depth - 1];
    auto& index = by_node_[depth - 1];
    auto it = index.find(node_key);
    if (it != index.end()) {
        store[it->second] = {std::move(features), target};
    } else {
        index.emplace(node_key, store.size());
        store.push_back({std::move(features), target});
    }
}

std::size_t KnnMuModel::total_examples() const {
    std::size_t n = 0;
    for (const auto& s : stores_) n += s.size();
    return n;
}

double KnnMuModel::predict(const std::vector<double>& features, int depth) const {
    if (depth < 1 || depth > max_depth()) throw std::invalid_argument("predict depth out of range");
    const auto& store = stores_[depth - 1];
    if (store.empty()) return 0.0;

    // Large stores are scanned with a stride so prediction cost stays bounded;
    // the stride is deterministic and spreads over insertion order.
    std::size_t stride = store.size() > scan_cap_ ? (store.size() + scan_cap_ - 1) / scan_cap_ : 1;

    constexpr double kExactEps = 1e-12;
    double exact_sum = 0.0;
    std::size_t exact_cnt = 0;
    std::vector<std::pair<double, std::size_t>> near; // (distance, index)
    near.reserve(store.size() / stride + 1);
    for (std::size_t i = 0; i < store.size(); i += stride) {
        double d = euclidean(features, store[i].features);
        if (d <= kExactEps) {
            exact_sum += store[i].target;
            ++exact_cnt;
        } else {
            near.emplace_back(d, i);
        }
    }
    if (exact_cnt > 0) return exact_sum / static_cast<double>(exact_cnt);
    if (near.empty()) return 0.0;

    std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k_), near.size());
    std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(kk), near.end());
    double wsum = 0.0, vsum = 0.0;
    for (std::size_t i = 0; i < kk; ++i) {
        double w = 1.0 / near[i].first;
        wsum += w;
        vsum += w * store[near[i].second].target;
    }
    return vsum / wsum;
}

void KnnMuModel::dump(std::ostream& os) const {
    std::size_t dim = 0;
    for (const auto& s : stores_)
        if (!s.empty()) dim = s[0].features.size();
    os << "MUKNN v1 " << dim << " " << max_depth() << "\n";
    for (int d = 1; d <= max_depth(); ++d) {
        for (const auto& ex : stores_[d - 1]) {
            os << d << " " << ex.target;
            for (double f : ex.features) os << " " << f;
            os << "\n";
        }
    }
}

KnnMuModel KnnMuModel::load(std::istream& is, int k, std::size_t scan_cap) {
    std::string magic, version;
    std::size_t dim = 0;
    int max_depth = 0;
    if (!(is >> magic >> version >> dim >> max_depth) || magic != "MUKNN" || version != "v1")
        throw std::runtime_error("model file: bad header");
    KnnMuModel m(max_depth, k, scan_cap);
    std::string line;
    std::getline(is, line); // rest of header line
    std::uint64_t key = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int d = 0;
        double target = 0.0;
        if (!(ls >> d >> target)) throw std::runtime_error("model file: bad example line");
        std::vector<double> f;
        f.reserve(dim);
        double v = 0.0;
        while (ls >> v) f.push_back(v);
        if (f.size() != dim) throw std::runtime_error("model file: feature dim mismatch");
        m.add_example(key++, d, std::move(f), target);
    }
    return m;
}

void ExampleCollector::on_bump(NodeIdx n, int low_depth) {
    const Node& node = graph_.node(n);
    if (node.virt) return;
    std::vector<double> f;
    for (int d = low_depth; d <= graph_.counter_depth(); ++d) {
        if (!graph_.supported(n, d)) continue;
        if (f.empty()) f = space_.features(node.state);
        model_.add_example(node.seq, d, f, partial_mu(graph_, n, d));
    }
}

double combined_score(double normalized_distance, double predicted_mu, double alpha) {
    return alpha * normalized_distance + (1.0 - alpha) * (1.0 - predicted_mu);
}

void CombinedScorer::begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) {
    dist_.begin_round(open, ctx);
    if (!eval_) eval_ = std::make_unique<MuEvaluator>(ctx.graph);
    eval_->begin_round();
    ++round_;
    if (round_dist_.size() < ctx.graph.pool_size()) {
        round_dist_.resize(ctx.graph.pool_size(), 0.0);
        round_stamp_.resize(ctx.graph.pool_size(), 0);
        pred_.resize(ctx.graph.pool_size());
    }
    lo_ = kInfScore;
    hi_ = -kInfScore;
    for (NodeIdx n : open) {
        double d = dist_.score(n, ctx);
        round_dist_[n] = d;
        round_stamp_[n] = round_;
        if (std::isfinite(d)) {
            lo_ = std::min(lo_, d);
            hi_ = std::max(hi_, d);
        }
    }
}

Score CombinedScorer::score(NodeIdx n, ScoreContext& ctx) {
    double d = round_stamp_[n] == round_ ? round_dist_[n] : dist_.score(n, ctx);
    double norm;
    if (!std::isfinite(d)) norm = 1.0;
    else if (hi_ > lo_) norm = (d - lo_) / (hi_ - lo_);
    else norm = 0.0;

    int depth = eval_->pick_depth(n, ctx.planning_budget);
    std::uint64_t bucket = model_.total_examples() / bucket_;
    PredCache& pc = pred_[n];
    if (pc.model_bucket != bucket || pc.depth != depth) {
        pc.value = model_.predict(ctx.space.features(ctx.graph.node(n).state), depth);
        pc.model_bucket = bucket;
        pc.depth = depth;
    }
    return combined_score(norm, pc.value, alpha_);
}

} // namespace mgs
