#ifndef MGS_DIVERSITY_HPP
#define MGS_DIVERSITY_HPP

#include <cstddef>
#include <vector>

namespace mgs {

/** Ring buffer of the feature vectors of recently expanded nodes. */
class DiversityBuffer {
public:
    explicit DiversityBuffer(std::size_t capacity) : cap_(capacity) {}

    void push(std::vector<double> features);
    std::size_t size() const { return items_.size(); }
    std::size_t capacity() const { return cap_; }

    // Mean Euclidean distance from `features` to the buffer contents;
    // 0 when the buffer is empty.
    double mean_distance(const std::vector<double>& features) const;

private:
    std::size_t cap_;
    std::size_t next_ = 0;
    std::vector<std::vector<double>> items_;
};

/**
 * Among score-ranked candidates (best first), pick the one whose features are
 * on average farthest from the recently-expanded set. An empty buffer keeps
 * the best-scored candidate; distance ties also keep the earlier candidate.
 * Returns the index into `candidate_features`.
 */
std::size_t diversify_select(const std::vector<std::vector<double>>& candidate_features,
                             const DiversityBuffer& buffer);

} // namespace mgs

#endif
