#include "mgs/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgs {

std::vector<std::vector<std::size_t>> cluster_siblings(
    const std::vector<std::vector<double>>& features, double tau) {
    if (tau < 0.0) throw std::invalid_argument("cluster threshold must be >= 0");
    const std::size_t k = features.size();
    std::vector<std::vector<std::size_t>> clusters;
    if (k == 0) return clusters;

    std::size_t dim = features[0].size();
    for (const auto& f : features)
        if (f.size() != dim) throw std::invalid_argument("sibling feature dims differ");

    // Min-max normalize over this sibling set; constant dimensions become 0.
    std::vector<std::vector<double>> norm(k, std::vector<double>(dim, 0.0));
    for (std::size_t j = 0; j < dim; ++j) {
        double lo = features[0][j], hi = features[0][j];
        for (const auto& f : features) {
            lo = std::min(lo, f[j]);
            hi = std::max(hi, f[j]);
        }
        double range = hi - lo;
        if (range <= 0.0) continue;
        for (std::size_t i = 0; i < k; ++i) norm[i][j] = (features[i][j] - lo) / range;
    }

    auto dist2 = [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            double d = norm[a][j] - norm[b][j];
            s += d * d;
        }
        return s;
    };

    for (std::size_t i = 0; i < k; ++i) clusters.push_back({i});

    // Single link: repeatedly merge the closest pair of clusters while the
    // minimum member-to-member distance is below tau.
    const double tau2 = tau * tau;
    while (clusters.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                double d = std::numeric_limits<double>::infinity();
                for (std::size_t a : clusters[i])
                    for (std::size_t b : clusters[j]) d = std::min(d, dist2(a, b));
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (!(best < tau2)) break;
        auto& dst = clusters[bi];
        dst.insert(dst.end(), clusters[bj].begin(), clusters[bj].end());
        std::sort(dst.begin(), dst.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    }

    std::sort(clusters.begin(), clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return clusters;
}

std::vector<double> feature_centroid(const std::vector<std::vector<double>>& features,
                                     const std::vector<std::size_t>& members) {
    if (members.empty()) return {};
    std::vector<double> c(features[members[0]].size(), 0.0);
    for (std::size_t m : members)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += features[m][j];
    for (double& v : c) v /= static_cast<double>(members.size());
    return c;
}

} // namespace mgs
