#pragma once

#include <functional>
#include <optional>

#include "synclust/metrics.hpp"
#include "synclust/model.hpp"
#include "synclust/types.hpp"

namespace synclust {

struct RunOptions {
    Model model = Model::linear_vicsek;
    int max_iters = 50;
    // Convergence fires when the mean neighbor-edge length drops to this.
    double conv_tol = 1e-6;
    // Coincidence radius used to extract clusters and count distinct
    // locations per iteration.
    double epsilon_cluster = 1e-5;
    // When set, called with (step, state) for step 0 (the input) and after
    // every applied update.
    std::function<void(int, const StateVector&)> snapshot_sink;
};

struct IterStats {
    int step = 0;
    double ave_len = 0.0;
    double r_c = 0.0;
    // Distinct locations (coincidence components) for the point engines;
    // active-core count for the shrinking engines.
    Index active = 0;
    std::uint64_t distance_evals = 0;
};

struct RunReport {
    StateVector final_state;
    int iterations = 0;
    bool converged = false;
    std::vector<IterStats> per_iter;
    ClusterLabels labels;
    std::vector<std::string> flags;
    std::uint64_t distance_evals = 0;  // every L2 evaluation performed by the run
};

// Iterates the selected update rule synchronously until the mean neighbor
// edge length falls below conv_tol or max_iters is hit. Per-iteration
// statistics describe the post-update state.
RunReport esync_run(const StateVector& data, const ModelParams& params, const RunOptions& opts);

struct SweepPoint {
    double delta = 0.0;
    Index clusters = 0;
    int iterations = 0;
    bool converged = false;
};

// One run per delta (ascending); the cluster-count curve of the family.
std::vector<SweepPoint> delta_sweep(const StateVector& data, std::span<const double> deltas,
                                    const ModelParams& base, const RunOptions& opts);

}  // namespace synclust
