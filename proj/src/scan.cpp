#include "scan.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "synclust/model.hpp"

namespace synclust::detail {

namespace {

struct RowMatch {
    Index j;
    double d;
};

}  // namespace

ScanResult scan_all_pairs(const StateVector& state, double delta, double eps_cluster) {
    const Index n = state.size();
    ScanResult res;
    res.neighbors.assign(n, {});

    // Distance phase: each row i holds its matches with j > i. Rows are
    // independent, so this is the parallel part; everything order-sensitive
    // happens in the sequential merge below.
    std::vector<std::vector<RowMatch>> rows(n);
    const double keep = std::max(delta, eps_cluster);
    std::vector<std::uint64_t> row_evals(n, 0);
    parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ii = lo; ii < hi; ++ii) {
            const Index i = static_cast<Index>(ii);
            const auto xi = state.point(i);
            std::uint64_t evals = 0;
            for (Index j = i + 1; j < n; ++j) {
                double d = euclidean_distance(xi, state.point(j));
                ++evals;
                if (d <= keep) rows[i].push_back({j, d});
            }
            row_evals[i] = evals;
        }
    });

    UnionFind uf(n);
    double len_sum = 0.0;
    std::uint64_t edge_count = 0;
    double rc_sum = 0.0;
    for (Index i = 0; i < n; ++i) {
        res.evals += row_evals[i];
        for (const auto& m : rows[i]) {
            if (m.d <= delta) {
                res.neighbors[i].push_back(m.j);
                res.neighbors[m.j].push_back(i);
                len_sum += m.d;
                ++edge_count;
                rc_sum += 2.0 * std::exp(-m.d);
            }
            if (eps_cluster > 0.0 && m.d < eps_cluster) uf.unite(i, m.j);
        }
    }
    res.ave_len = edge_count ? len_sum / static_cast<double>(edge_count) : 0.0;
    res.r_c = n ? rc_sum / static_cast<double>(n) : 0.0;

    if (eps_cluster > 0.0) {
        res.component.resize(n);
        Index distinct = 0;
        for (Index i = 0; i < n; ++i) {
            res.component[i] = uf.find(i);
            if (res.component[i] == i) ++distinct;
        }
        res.distinct = distinct;
    }
    return res;
}

ScanResult scan_with_grid(const StateVector& state, const Grid& grid, double delta,
                          double eps_cluster) {
    const Index n = state.size();
    ScanResult res;
    res.neighbors.assign(n, {});

    std::vector<std::vector<Grid::NeighborHit>> rows(n);
    std::vector<std::uint64_t> row_evals(n, 0);
    parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ii = lo; ii < hi; ++ii) {
            const Index i = static_cast<Index>(ii);
            rows[i] = grid.delta_neighbors_with_dist(state, i, delta, &row_evals[i]);
        }
    });

    // Metrics accumulate i-major over (i, j > i), the same order as the
    // naive scan, so the two paths report bit-identical statistics.
    UnionFind uf(n);
    double len_sum = 0.0;
    std::uint64_t edge_count = 0;
    double rc_sum = 0.0;
    for (Index i = 0; i < n; ++i) {
        res.evals += row_evals[i];
        res.neighbors[i].reserve(rows[i].size());
        for (const auto& m : rows[i]) {
            res.neighbors[i].push_back(m.j);
            if (m.j <= i) continue;
            len_sum += m.dist;
            ++edge_count;
            rc_sum += 2.0 * std::exp(-m.dist);
            if (eps_cluster > 0.0 && m.dist < eps_cluster) uf.unite(i, m.j);
        }
    }
    res.ave_len = edge_count ? len_sum / static_cast<double>(edge_count) : 0.0;
    res.r_c = n ? rc_sum / static_cast<double>(n) : 0.0;

    if (eps_cluster > 0.0) {
        res.component.resize(n);
        Index distinct = 0;
        for (Index i = 0; i < n; ++i) {
            res.component[i] = uf.find(i);
            if (res.component[i] == i) ++distinct;
        }
        res.distinct = distinct;
    }
    return res;
}

}  // namespace synclust::detail
