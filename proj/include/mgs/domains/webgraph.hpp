#ifndef MGS_DOMAINS_WEBGRAPH_HPP
#define MGS_DOMAINS_WEBGRAPH_HPP

#include <cstdint>

#include "mgs/domains/graph_file.hpp"
#include "mgs/goal_list.hpp"

namespace mgs {

/**
 * Synthetic crawl target: a directed preferential-attachment graph whose
 * nodes carry topic-mixture feature vectors. Links prefer topically similar
 * nodes (homophily), so pages about the target topic clump together the way
 * real sites do. A node is a goal when its target-topic coordinate clears a
 * quantile threshold picked to hit `goal_rate`.
 */
struct WebGraphParams {
    std::size_t nodes = 30000;
    double mean_out_degree = 10.6;
    std::size_t topic_dims = 8;
    std::size_t goal_topic = 0;
    double goal_rate = 0.01;
    double homophily = 0.75;       // chance a link insists on a same-topic partner
    std::size_t root_candidates = 200; // trial start pages come from the oldest nodes
};

ExplicitGraph synthetic_web_graph(const WebGraphParams& params, std::uint64_t seed);

/**
 * Stand-in for a learned link-distance predictor: scaled feature-space
 * distance distorted by deterministic per-pair relative noise. Rankings it
 * induces are informative but imperfect, like a trained estimator's.
 */
class WebDistanceEstimator : public DistanceEstimator {
public:
    WebDistanceEstimator(const ExplicitGraph& graph, double noise, std::uint64_t seed,
                         double scale = 10.0)
        : g_(graph), noise_(noise), seed_(seed), scale_(scale) {}

    double distance(StateId a, StateId b) const override;

private:
    const ExplicitGraph& g_;
    double noise_;
    std::uint64_t seed_;
    double scale_;
};

} // namespace mgs

#endif
