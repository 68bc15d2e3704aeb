#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>

#include "synclust/esync.hpp"
#include "synclust/types.hpp"

namespace synclust {

// Axis-aligned cell decomposition of the data bounding box. Cells are
// half-open per dimension so every point lands in exactly one cell.
struct GridSpec {
    std::vector<double> origin;        // per-dimension region minimum
    std::vector<double> cell_lengths;  // per-dimension cell edge r_k > 0
    std::vector<Index> counts;         // cells per dimension
    std::uint64_t max_cells = 2'000'000;

    // Spec covering the bounding box of `state` with the given edge lengths.
    static GridSpec cover(const StateVector& state, std::span<const double> r);

    // Total addressable cell count, saturating at 2^63-1.
    std::uint64_t total_cells() const;
};

// Inspection view of one materialized cell.
struct GridCell {
    std::int64_t label = 0;
    std::vector<Index> coordinate;
    std::vector<double> center;
    std::vector<std::pair<double, double>> range;  // [low, high) per dimension
    Index point_count = 0;
    std::vector<Index> members;  // ascending
};

class Grid {
public:
    // Assigns every point to its cell. Returns nullopt when the spec
    // addresses more cells than max_cells allows (callers fall back to
    // naive queries).
    static std::optional<Grid> build(const StateVector& state, const GridSpec& spec);

    // Same set as the naive delta_neighbors, ascending. Scans only cells
    // whose range lies within delta of the query position and counts one
    // distance evaluation per candidate examined.
    std::vector<Index> delta_neighbors(const StateVector& state, Index i, double delta,
                                       std::uint64_t* evals = nullptr) const;

    struct NeighborHit {
        Index j;
        double dist;
    };

    // Neighbor indices with their distances, sorted by index; lets callers
    // reuse the distances the query already paid for.
    std::vector<NeighborHit> delta_neighbors_with_dist(const StateVector& state, Index i,
                                                       double delta,
                                                       std::uint64_t* evals = nullptr) const;

    // Moves point i between cells when its cell coordinate changed. Throws
    // InternalCorruption when i is not where old_pos says it should be.
    void relocate(Index i, std::span<const double> old_pos, std::span<const double> new_pos);

    std::int64_t cell_label_of(std::span<const double> pos) const;
    std::size_t materialized_cells() const { return cells_.size(); }
    GridCell cell_info(std::int64_t label) const;
    std::vector<std::int64_t> cell_labels() const;  // ascending

    const GridSpec& spec() const { return spec_; }

private:
    GridSpec spec_;
    std::vector<std::int64_t> strides_;
    std::unordered_map<std::int64_t, std::set<Index>> cells_;  // ordered members per cell
    std::vector<std::int64_t> point_cell_;

    std::vector<Index> coordinate_of(std::span<const double> pos) const;
    std::int64_t label_of(const std::vector<Index>& coord) const;
    // Smallest distance from pos to the closed box of the cell coordinate.
    double box_distance(std::span<const double> pos, std::span<const Index> coord) const;

    friend struct GridScanAccess;
};

// Grid-accelerated run of the linearized-Vicsek engine. Produces a report
// identical to esync_run(linear-vicsek) except for the distance-evaluation
// counters; the per-point neighbor sums happen in the same ascending index
// order. Falls back to naive queries (and records a flag) when the cell cap
// is exceeded.
RunReport iesync_run(const StateVector& data, const ModelParams& params, const RunOptions& opts,
                     const GridSpec& spec);

}  // namespace synclust
