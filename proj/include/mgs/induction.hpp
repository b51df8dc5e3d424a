#ifndef MGS_INDUCTION_HPP
#define MGS_INDUCTION_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgs/mu_inference.hpp"
#include "mgs/scorer.hpp"

namespace mgs {

struct TrainingExample {
    std::vector<double> features;
    double target = 0.0; // observed goal density in [0,1]
};

/**
 * Per-horizon utility regressor: distance-weighted k-nearest-neighbour over
 * examples tagged from supported nodes. Incremental — every added example is
 * visible to the next prediction. Examples are keyed by node so a node whose
 * counters grow replaces its earlier tag instead of piling up duplicates.
 */
class KnnMuModel {
public:
    explicit KnnMuModel(int max_depth, int k = 5, std::size_t scan_cap = 1024);

    void add_example(std::uint64_t node_key, int depth, std::vector<double> features,
                     double target);

    // Inverse-distance weighted mean of the k nearest examples at `depth`.
    // Exact feature matches dominate (their mean target is returned); an empty
    // store predicts the prior 0.
    double predict(const std::vector<double>& features, int depth) const;

    std::size_t example_count(int depth) const { return stores_[depth - 1].size(); }
    std::size_t total_examples() const;
    int max_depth() const { return static_cast<int>(stores_.size()); }
    int k() const { return k_; }

    void dump(std::ostream& os) const;
    static KnnMuModel load(std::istream& is, int k = 5, std::size_t scan_cap = 1024);

private:
    int k_;
    std::size_t scan_cap_;
    std::vector<std::vector<TrainingExample>> stores_;           // [depth-1]
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> by_node_;
};

/**
 * Streams supported-node tags into the model as counters change. Attach via
 * SearchGraph::on_counters_bumped.
 */
class ExampleCollector {
public:
    ExampleCollector(SearchGraph& graph, StateSpace& space, KnnMuModel& model)
        : graph_(graph), space_(space), model_(model) {}

    void on_bump(NodeIdx n, int low_depth);

private:
    SearchGraph& graph_;
    StateSpace& space_;
    KnnMuModel& model_;
};

// alpha * normalized-distance + (1 - alpha) * (1 - predicted-utility).
double combined_score(double normalized_distance, double predicted_mu, double alpha);

/**
 * Blends a distance scorer with learned utility predictions. Distance scores
 * are min-max normalized over the current open list each round; the utility
 * prediction for a node uses the per-horizon model chosen by the subtree-size
 * budget rule. Predictions are cached per node and refreshed once the model
 * has grown by `refresh_bucket` examples (or the chosen horizon changes).
 */
class CombinedScorer : public NodeScorer {
public:
    CombinedScorer(NodeScorer& distance_scorer, const KnnMuModel& model, double alpha,
                   std::size_t refresh_bucket = 500)
        : dist_(distance_scorer), model_(model), alpha_(alpha),
          bucket_(refresh_bucket == 0 ? 1 : refresh_bucket) {}

    void begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) override;
    Score score(NodeIdx n, ScoreContext& ctx) override;

private:
    NodeScorer& dist_;
    const KnnMuModel& model_;
    std::unique_ptr<MuEvaluator> eval_; // bound to the graph on the first round
    double alpha_;
    std::size_t bucket_;

    double lo_ = 0.0, hi_ = 0.0;
    std::vector<double> round_dist_;
    std::vector<std::uint32_t> round_stamp_;
    std::uint32_t round_ = 1;

    struct PredCache {
        double value = 0.0;
        std::uint64_t model_bucket = ~0ull;
        int depth = 0;
    };
    std::vector<PredCache> pred_;
};

} // namespace mgs

#endif
