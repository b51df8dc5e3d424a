#ifndef MGS_CLUSTERING_HPP
#define MGS_CLUSTERING_HPP

#include <cstddef>
#include <vector>

namespace mgs {

/**
 * Groups sibling feature vectors by single-link agglomerative clustering.
 * Features are min-max normalized per dimension over the sibling set first;
 * clusters merge while the closest pair of clusters (minimum pairwise
 * Euclidean distance between members) is strictly below `tau`.
 *
 * Returns member-index groups ordered by their smallest member. tau = 0 yields
 * all singletons; identical feature vectors end up in one cluster for tau > 0.
 */
std::vector<std::vector<std::size_t>> cluster_siblings(
    const std::vector<std::vector<double>>& features, double tau);

/** Component-wise mean of a set of feature vectors. */
std::vector<double> feature_centroid(const std::vector<std::vector<double>>& features,
                                     const std::vector<std::size_t>& members);

} // namespace mgs

#endif
