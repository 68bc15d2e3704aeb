#include "synclust/baselines.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "synclust/datagen.hpp"
#include "synclust/model.hpp"

namespace synclust {

DbscanResult dbscan(const StateVector& data, const DbscanParams& params) {
    if (params.eps <= 0.0) throw InvalidInput("dbscan: eps must be positive");
    if (params.min_pts < 1) throw InvalidInput("dbscan: min_pts must be >= 1");

    const Index n = data.size();
    std::vector<std::vector<Index>> nb(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (euclidean_distance(data, i, j) <= params.eps) {
                nb[i].push_back(j);
                nb[j].push_back(i);
            }

    // The eps-neighborhood for the density test includes the point itself.
    std::vector<char> is_core(n, 0);
    for (Index i = 0; i < n; ++i)
        is_core[i] = static_cast<Index>(nb[i].size()) + 1 >= params.min_pts;

    DbscanResult result;
    result.labels.assign(n, -1);
    std::vector<char> visited(n, 0);
    Index next_label = 0;
    for (Index seed = 0; seed < n; ++seed) {
        if (visited[seed] || !is_core[seed]) continue;
        const Index label = next_label++;
        std::deque<Index> queue{seed};
        visited[seed] = 1;
        result.labels[seed] = label;
        while (!queue.empty()) {
            Index p = queue.front();
            queue.pop_front();
            if (!is_core[p]) continue;  // border points join but do not expand
            for (Index q : nb[p]) {
                if (visited[q]) continue;
                visited[q] = 1;
                result.labels[q] = label;
                queue.push_back(q);
            }
        }
    }
    result.cluster_count = next_label;
    return result;
}

ClusterLabels kmeans(const StateVector& data, Index k, std::uint64_t seed, int max_iters) {
    const Index n = data.size();
    if (k < 1 || k > n) throw InvalidInput("kmeans: require 1 <= k <= n");
    if (max_iters < 1) throw InvalidInput("kmeans: max_iters must be >= 1");
    const int d = data.dim();

    // k distinct starting points chosen by a seeded partial shuffle.
    Rng rng(seed);
    std::vector<Index> idx(n);
    for (Index i = 0; i < n; ++i) idx[i] = i;
    for (Index i = 0; i < k; ++i) {
        Index j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::vector<double>> centers(k);
    for (Index c = 0; c < k; ++c) {
        const auto p = data.point(idx[c]);
        centers[c].assign(p.begin(), p.end());
    }

    std::vector<Index> assign(n, -1);
    for (int iter = 0; iter < max_iters; ++iter) {
        bool changed = false;
        for (Index i = 0; i < n; ++i) {
            Index best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (Index c = 0; c < k; ++c) {
                double dist = euclidean_distance(data.point(i), centers[c]);
                if (dist < best_d) {  // ties keep the lower center index
                    best_d = dist;
                    best = c;
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }

        std::vector<Index> sizes(k, 0);
        std::vector<std::vector<double>> sums(k, std::vector<double>(d, 0.0));
        for (Index i = 0; i < n; ++i) {
            ++sizes[assign[i]];
            const auto p = data.point(i);
            for (int kk = 0; kk < d; ++kk) sums[assign[i]][kk] += p[kk];
        }
        for (Index c = 0; c < k; ++c) {
            if (sizes[c] > 0) {
                for (int kk = 0; kk < d; ++kk)
                    centers[c][kk] = sums[c][kk] / static_cast<double>(sizes[c]);
            } else {
                // Reseed an emptied cluster from the point farthest from its
                // own center (lowest index on ties).
                Index far = 0;
                double far_d = -1.0;
                for (Index i = 0; i < n; ++i) {
                    double dist = euclidean_distance(data.point(i), centers[assign[i]]);
                    if (dist > far_d) {
                        far_d = dist;
                        far = i;
                    }
                }
                const auto p = data.point(far);
                centers[c].assign(p.begin(), p.end());
                assign[far] = c;
                changed = true;
            }
        }
        if (!changed) break;
    }

    ClusterLabels out;
    out.labels = assign;
    out.centers = std::move(centers);
    return out;
}

}  // namespace synclust
