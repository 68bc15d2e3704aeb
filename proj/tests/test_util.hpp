#pragma once

// Shared helpers and independent oracles for the test suites. Everything in
// here recomputes results from first principles (plain loops, no library
// internals) so the implementations are checked against a second route.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "synclust/types.hpp"

namespace testutil {

using synclust::Index;
using synclust::StateVector;

// Scalar sum-of-squares distance, written differently from the library path.
inline double oracle_distance(std::span<const double> a, std::span<const double> b) {
    double ss = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) ss += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(ss);
}

inline std::vector<Index> oracle_neighbors(const StateVector& s, Index i, double delta) {
    std::vector<Index> out;
    for (Index j = 0; j < s.size(); ++j)
        if (j != i && oracle_distance(s.point(i), s.point(j)) <= delta) out.push_back(j);
    return out;
}

// Compensated mean, used as the high-accuracy oracle for collapse checks.
inline std::vector<double> kahan_mean(const StateVector& s) {
    std::vector<double> sum(s.dim(), 0.0), comp(s.dim(), 0.0);
    for (Index i = 0; i < s.size(); ++i) {
        const auto p = s.point(i);
        for (int k = 0; k < s.dim(); ++k) {
            double y = p[k] - comp[k];
            double t = sum[k] + y;
            comp[k] = (t - sum[k]) - y;
            sum[k] = t;
        }
    }
    for (double& v : sum) v /= static_cast<double>(s.size());
    return sum;
}

// Reference disjoint-set, rank-free, recursive compression.
struct OracleUnionFind {
    std::vector<Index> parent;
    explicit OracleUnionFind(Index n) : parent(n) {
        std::iota(parent.begin(), parent.end(), Index{0});
    }
    Index find(Index x) {
        if (parent[x] != x) parent[x] = find(parent[x]);
        return parent[x];
    }
    void unite(Index a, Index b) { parent[find(a)] = find(b); }
};

// Partition of {0..n-1} as canonical sorted set-of-sets, for equality checks
// that ignore label names.
inline std::set<std::vector<Index>> canonical_partition(std::span<const Index> labels) {
    std::vector<std::vector<Index>> groups;
    for (Index i = 0; i < static_cast<Index>(labels.size()); ++i) {
        if (labels[i] < 0) continue;
        if (labels[i] >= static_cast<Index>(groups.size())) groups.resize(labels[i] + 1);
        groups[labels[i]].push_back(i);
    }
    std::set<std::vector<Index>> out;
    for (auto& g : groups)
        if (!g.empty()) out.insert(std::move(g));
    return out;
}

inline StateVector random_state(std::mt19937& rng, Index n, int dim, double lo = 0.0,
                                double hi = 600.0) {
    std::uniform_real_distribution<double> coord(lo, hi);
    StateVector s(n, dim);
    for (Index i = 0; i < n; ++i)
        for (int k = 0; k < dim; ++k) s.point_mut(i)[k] = coord(rng);
    return s;
}

inline double min_pairwise(const StateVector& s) {
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < s.size(); ++i)
        for (Index j = i + 1; j < s.size(); ++j)
            best = std::min(best, oracle_distance(s.point(i), s.point(j)));
    return best;
}

inline double max_pairwise(const StateVector& s) {
    double best = 0.0;
    for (Index i = 0; i < s.size(); ++i)
        for (Index j = i + 1; j < s.size(); ++j)
            best = std::max(best, oracle_distance(s.point(i), s.point(j)));
    return best;
}

}  // namespace testutil
