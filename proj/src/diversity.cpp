#include "mgs/diversity.hpp"

#include "mgs/distance_heuristics.hpp"

namespace mgs {

void DiversityBuffer::push(std::vector<double> features) {
    if (cap_ == 0) return;
    if (items_.size() < cap_) {
        items_.push_back(std::move(features));
    } else {
        items_[next_] = std::move(features);
        next_ = (next_ + 1) % cap_;
    }
}

double DiversityBuffer::mean_distance(const std::vector<double>& features) const {
    if (items_.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& it : items_) sum += euclidean(features, it);
    return sum / static_cast<double>(items_.size());
}

std::size_t diversify_select(const std::vector<std::vector<double>>& candidate_features,
                             const DiversityBuffer& buffer) {
    std::size_t best = 0;
    if (buffer.size() == 0) return best;
    double best_d = -1.0;
    for (std::size_t i = 0; i < candidate_features.size(); ++i) {
        double d = buffer.mean_distance(candidate_features[i]);
        if (d > best_d + 1e-12) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

} // namespace mgs
