#pragma once

#include "synclust/types.hpp"

namespace synclust {

// Undirected neighbor graph of one state: an edge (i, j, w) exists iff
// dis(x_i, x_j) <= delta, with w the distance. Edges are stored i-major
// with i < j, no self-loops, no duplicates.
struct DeltaGraph {
    struct Edge {
        Index i;
        Index j;
        double weight;
    };
    Index vertex_count = 0;
    std::vector<Edge> edges;
};

DeltaGraph build_delta_graph(const StateVector& state, double delta);

// Mean edge weight; 0 for an edgeless graph. Tends to 0 as neighbors
// synchronize onto common locations.
double ave_len(const DeltaGraph& graph);

// Unnormalized proximity statistic: (1/n) * sum over ordered neighbor pairs
// of exp(-distance). For K equal coincident clusters of size n/K, pairwise
// farther than delta, this equals n/K - 1.
double cluster_order_parameter(const StateVector& state, double delta);

struct ClusterLabels {
    std::vector<Index> labels;                 // one label per point, contiguous from 0
    std::vector<std::vector<double>> centers;  // representative (mean) per label

    Index cluster_count() const { return static_cast<Index>(centers.size()); }
};

// Connected components of the strict epsilon-threshold graph (two points are
// chained into one cluster when their distance is < epsilon). Labels are
// assigned in first-occurrence order of the lowest point index per component.
ClusterLabels extract_clusters(const StateVector& state, double epsilon);

// Partition equality up to relabeling.
bool match_labels(const ClusterLabels& a, const ClusterLabels& b);

}  // namespace synclust
