#include "synclust/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "point_engine.hpp"
#include "scan.hpp"
#include "synclust/model.hpp"

namespace synclust {

GridSpec GridSpec::cover(const StateVector& state, std::span<const double> r) {
    const int d = state.dim();
    if (state.size() < 1) throw InvalidInput("GridSpec::cover: empty state");
    if (static_cast<int>(r.size()) != d)
        throw InvalidInput("GridSpec::cover: one cell length per dimension required");
    for (double v : r)
        if (v <= 0.0) throw InvalidInput("GridSpec::cover: cell lengths must be positive");

    GridSpec spec;
    spec.origin.assign(d, 0.0);
    spec.cell_lengths.assign(r.begin(), r.end());
    spec.counts.assign(d, 1);
    std::vector<double> hi(d, 0.0);
    for (int k = 0; k < d; ++k) {
        spec.origin[k] = state.point(0)[k];
        hi[k] = state.point(0)[k];
    }
    for (Index i = 1; i < state.size(); ++i) {
        const auto p = state.point(i);
        for (int k = 0; k < d; ++k) {
            spec.origin[k] = std::min(spec.origin[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    for (int k = 0; k < d; ++k)
        spec.counts[k] = static_cast<Index>(std::floor((hi[k] - spec.origin[k]) / r[k])) + 1;
    return spec;
}

std::uint64_t GridSpec::total_cells() const {
    std::uint64_t total = 1;
    const std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
    for (Index c : counts) {
        if (c <= 0) return 0;
        if (total > cap / static_cast<std::uint64_t>(c)) return cap;
        total *= static_cast<std::uint64_t>(c);
    }
    return total;
}

std::vector<Index> Grid::coordinate_of(std::span<const double> pos) const {
    const int d = static_cast<int>(spec_.origin.size());
    std::vector<Index> coord(d);
    for (int k = 0; k < d; ++k) {
        double rel = (pos[k] - spec_.origin[k]) / spec_.cell_lengths[k];
        Index c = static_cast<Index>(std::floor(rel));
        if (c < 0) c = 0;
        if (c >= spec_.counts[k]) c = spec_.counts[k] - 1;
        coord[k] = c;
    }
    return coord;
}

std::int64_t Grid::label_of(const std::vector<Index>& coord) const {
    std::int64_t label = 0;
    for (std::size_t k = 0; k < coord.size(); ++k) label += coord[k] * strides_[k];
    return label;
}

double Grid::box_distance(std::span<const double> pos, std::span<const Index> coord) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < coord.size(); ++k) {
        double lo = spec_.origin[k] + coord[k] * spec_.cell_lengths[k];
        double hi = lo + spec_.cell_lengths[k];
        double gap = 0.0;
        if (pos[k] < lo)
            gap = lo - pos[k];
        else if (pos[k] > hi)
            gap = pos[k] - hi;
        acc += gap * gap;
    }
    return std::sqrt(acc);
}

std::optional<Grid> Grid::build(const StateVector& state, const GridSpec& spec) {
    const int d = state.dim();
    if (static_cast<int>(spec.origin.size()) != d || static_cast<int>(spec.cell_lengths.size()) != d ||
        static_cast<int>(spec.counts.size()) != d)
        throw InvalidInput("Grid::build: spec dimension mismatch");
    if (spec.total_cells() > spec.max_cells) return std::nullopt;

    Grid grid;
    grid.spec_ = spec;
    grid.strides_.assign(d, 1);
    for (int k = d - 2; k >= 0; --k)
        grid.strides_[k] = grid.strides_[k + 1] * spec.counts[k + 1];
    grid.point_cell_.assign(state.size(), 0);
    for (Index i = 0; i < state.size(); ++i) {
        std::int64_t label = grid.label_of(grid.coordinate_of(state.point(i)));
        grid.point_cell_[i] = label;
        grid.cells_[label].insert(i);
    }
    return grid;
}

std::int64_t Grid::cell_label_of(std::span<const double> pos) const {
    return label_of(coordinate_of(pos));
}

GridCell Grid::cell_info(std::int64_t label) const {
    auto it = cells_.find(label);
    if (it == cells_.end()) throw InvalidInput("Grid::cell_info: cell not materialized");
    GridCell cell;
    cell.label = label;
    const int d = static_cast<int>(spec_.origin.size());
    cell.coordinate.assign(d, 0);
    std::int64_t rest = label;
    for (int k = 0; k < d; ++k) {
        cell.coordinate[k] = static_cast<Index>(rest / strides_[k]);
        rest %= strides_[k];
    }
    cell.center.assign(d, 0.0);
    cell.range.resize(d);
    for (int k = 0; k < d; ++k) {
        double lo = spec_.origin[k] + cell.coordinate[k] * spec_.cell_lengths[k];
        cell.range[k] = {lo, lo + spec_.cell_lengths[k]};
        cell.center[k] = lo + 0.5 * spec_.cell_lengths[k];
    }
    cell.members.assign(it->second.begin(), it->second.end());
    cell.point_count = static_cast<Index>(cell.members.size());
    return cell;
}

std::vector<std::int64_t> Grid::cell_labels() const {
    std::vector<std::int64_t> out;
    out.reserve(cells_.size());
    for (const auto& [label, members] : cells_) out.push_back(label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Grid::NeighborHit> Grid::delta_neighbors_with_dist(const StateVector& state, Index i,
                                                               double delta,
                                                               std::uint64_t* evals) const {
    if (i < 0 || i >= state.size())
        throw InvalidInput("Grid::delta_neighbors: index out of range");
    if (delta <= 0.0)
        throw InvalidInput("Grid::delta_neighbors: delta must be positive");
    const int d = state.dim();
    const auto pos = state.point(i);
    const auto home = coordinate_of(pos);

    // Candidate cell window: ceil(delta / r_k) cells either side, clamped.
    std::vector<Index> lo(d), hi(d), cur(d);
    for (int k = 0; k < d; ++k) {
        Index reach = static_cast<Index>(std::ceil(delta / spec_.cell_lengths[k]));
        lo[k] = std::max<Index>(0, home[k] - reach);
        hi[k] = std::min<Index>(spec_.counts[k] - 1, home[k] + reach);
        cur[k] = lo[k];
    }

    std::vector<NeighborHit> hits;
    std::uint64_t local_evals = 0;
    // Lexicographic coordinate order = ascending cell label.
    while (true) {
        if (box_distance(pos, cur) <= delta) {
            auto it = cells_.find(label_of(cur));
            if (it != cells_.end()) {
                for (Index j : it->second) {
                    if (j == i) continue;
                    double dist = euclidean_distance(pos, state.point(j));
                    ++local_evals;
                    if (dist <= delta) hits.push_back({j, dist});
                }
            }
        }
        int k = d - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
    }
    // Once a cluster has collapsed its members share one cell and arrive
    // already ordered; the sort only pays for the scattered early phase.
    auto by_index = [](const NeighborHit& a, const NeighborHit& b) { return a.j < b.j; };
    if (!std::is_sorted(hits.begin(), hits.end(), by_index))
        std::sort(hits.begin(), hits.end(), by_index);
    if (evals) *evals += local_evals;
    return hits;
}

std::vector<Index> Grid::delta_neighbors(const StateVector& state, Index i, double delta,
                                         std::uint64_t* evals) const {
    auto hits = delta_neighbors_with_dist(state, i, delta, evals);
    std::vector<Index> out;
    out.reserve(hits.size());
    for (const auto& h : hits) out.push_back(h.j);
    return out;
}

void Grid::relocate(Index i, std::span<const double> old_pos, std::span<const double> new_pos) {
    std::int64_t old_label = label_of(coordinate_of(old_pos));
    std::int64_t new_label = label_of(coordinate_of(new_pos));
    if (old_label == new_label) return;
    auto it = cells_.find(old_label);
    if (it == cells_.end() || it->second.erase(i) == 0)
        throw InternalCorruption("Grid::relocate: point missing from its source cell");
    if (it->second.empty()) cells_.erase(it);
    cells_[new_label].insert(i);
    point_cell_[i] = new_label;
}

RunReport iesync_run(const StateVector& data, const ModelParams& params, const RunOptions& opts,
                     const GridSpec& spec) {
    if (opts.model != Model::linear_vicsek)
        throw InvalidInput("iesync_run: grid acceleration applies to the linear-vicsek model");

    std::optional<Grid> grid =
        (opts.epsilon_cluster <= params.delta) ? Grid::build(data, spec) : std::nullopt;
    if (!grid) {
        // Either the spec addresses too many cells or the coincidence radius
        // exceeds delta (grid queries would miss coincident pairs). Results
        // stay correct on the naive path.
        RunReport report = detail::run_point_engine(
            data, params, opts,
            [&](const StateVector& s) {
                return detail::scan_all_pairs(s, params.delta, opts.epsilon_cluster);
            },
            [](const StateVector&, const StateVector&) {}, {"grid-fallback-naive"});
        return report;
    }

    return detail::run_point_engine(
        data, params, opts,
        [&](const StateVector& s) {
            return detail::scan_with_grid(s, *grid, params.delta, opts.epsilon_cluster);
        },
        [&](const StateVector& before, const StateVector& after) {
            for (Index i = 0; i < before.size(); ++i)
                grid->relocate(i, before.point(i), after.point(i));
        },
        {});
}

}  // namespace synclust
