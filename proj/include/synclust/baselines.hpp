#pragma once

#include "synclust/metrics.hpp"
#include "synclust/types.hpp"

namespace synclust {

struct DbscanParams {
    double eps = 0.0;
    int min_pts = 4;
};

struct DbscanResult {
    std::vector<int> labels;  // cluster id from 0, or -1 for noise
    Index cluster_count = 0;
};

// Classic density clustering: a point is core when its closed eps-ball,
// itself included, holds at least min_pts points. Clusters grow from core
// points in ascending index order, so border assignment is deterministic.
DbscanResult dbscan(const StateVector& data, const DbscanParams& params);

// Lloyd iterations from k distinct seeded starting points. Ties go to the
// lowest center index; a cluster that empties is reseeded from the point
// farthest from its current center. Deterministic under the seed.
ClusterLabels kmeans(const StateVector& data, Index k, std::uint64_t seed, int max_iters = 100);

}  // namespace synclust
