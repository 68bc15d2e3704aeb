#pragma once

#include "synclust/types.hpp"

namespace synclust {

// L2 distance. Throws InvalidInput on dimension mismatch.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

inline double euclidean_distance(const StateVector& s, Index i, Index j) {
    return euclidean_distance(s.point(i), s.point(j));
}

// Indices j != i with dis(x_j, x_i) <= delta, ascending. Closed ball.
std::vector<Index> delta_neighbors(const StateVector& state, Index i, double delta);

// One synchronous step of the linearized-Vicsek rule: every point moves to
// the mean of itself and its delta-neighbors; isolates stay put. All new
// positions are computed from the step-t positions, then committed at once.
StateVector lv_update(const StateVector& state, const ModelParams& params);

// One synchronous step of the per-dimension sinusoidal coupling rule.
// Isolates stay put (the averaging factor is undefined for them).
StateVector ek_update(const StateVector& state, const ModelParams& params);

struct OvResult {
    StateVector state;
    // Points whose direction vector had zero norm this step; they were left
    // in place because no direction is defined for them.
    std::vector<Index> degenerate;
};

// One synchronous step of the constant-speed heading rule: each point moves
// v_dt along the unit direction of (own position + neighbor positions).
// With no neighbors the direction is the point's own position vector.
OvResult ov_update(const StateVector& state, const ModelParams& params);

// Count-weighted averaging step over core locations; neighbor sets are taken
// over the given cores' locations with the same closed-ball rule. Counts are
// not modified here (merging is the shrinking engine's job). With all counts
// equal to 1 this reproduces lv_update bit for bit.
std::vector<std::vector<double>> weighted_core_update(const std::vector<Core>& cores, double delta);

namespace detail {

// Per-point renewal kernels shared by the standalone ops and the engines.
// `neighbors` must be ascending; summation happens in that order so that
// naive and grid-backed runs produce identical bits.
void lv_renew(const StateVector& s, Index i, std::span<const Index> neighbors, std::span<double> out);
void ek_renew(const StateVector& s, Index i, std::span<const Index> neighbors, std::span<double> out);
// Returns false when the direction norm is zero (point left unchanged).
bool ov_renew(const StateVector& s, Index i, std::span<const Index> neighbors, double v_dt,
              std::span<double> out);

}  // namespace detail

}  // namespace synclust
