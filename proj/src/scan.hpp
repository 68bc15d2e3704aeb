#pragma once

// One shared pass per iteration serves three consumers: the neighbor sets
// that drive the next renewal, the edge statistics (mean length, order
// parameter) of the current state, and the coincidence components that
// become cluster labels. Fusing them keeps the distance-evaluation counter
// an honest measure of everything a run computes.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "synclust/grid.hpp"
#include "synclust/types.hpp"

namespace synclust::detail {

struct UnionFind {
    std::vector<Index> parent;

    explicit UnionFind(Index n) : parent(n) { std::iota(parent.begin(), parent.end(), Index{0}); }

    Index find(Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Lower root wins so component ids are stable under scan order.
    void unite(Index a, Index b) {
        Index ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (ra < rb)
            parent[rb] = ra;
        else
            parent[ra] = rb;
    }
};

struct ScanResult {
    std::vector<std::vector<Index>> neighbors;  // ascending per point
    double ave_len = 0.0;
    double r_c = 0.0;
    Index distinct = 0;              // coincidence components (when requested)
    std::vector<Index> component;    // component root per point (when requested)
    std::uint64_t evals = 0;
};

// Half-matrix pass over all pairs. When eps_cluster > 0, pairs strictly
// closer than it are united into coincidence components (requires
// eps_cluster <= delta only for the grid variant; here every pair is seen).
ScanResult scan_all_pairs(const StateVector& state, double delta, double eps_cluster);

// Same outputs via grid queries; candidate pairs outside the scanned cell
// neighborhood are never evaluated. Callers must ensure eps_cluster <= delta
// (coincident pairs are then always within reach).
ScanResult scan_with_grid(const StateVector& state, const Grid& grid, double delta,
                          double eps_cluster);

struct LabelsOut {
    std::vector<Index> labels;
    std::vector<std::vector<double>> centers;
};

// Labels in first-occurrence order from component roots, plus per-label
// means as representatives.
LabelsOut components_to_labels(const StateVector& state, std::span<const Index> component);

}  // namespace synclust::detail
