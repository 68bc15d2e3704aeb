#pragma once

#include "synclust/esync.hpp"
#include "synclust/types.hpp"

namespace synclust {

struct SSyncReport {
    std::vector<Core> cores;  // all cores at T, parent paths compressed
    std::vector<Index> roots;  // root core ids, ascending
    // Active-core count series; entry 0 is the initial count, then one entry
    // per iteration. Non-increasing.
    std::vector<Index> active_counts;
    // Sum of containing_points over active cores, aligned with active_counts;
    // stays equal to the total point mass throughout.
    std::vector<long long> active_mass;
    int iterations = 0;
    bool converged = false;  // stability exit (vs. iteration cap)
    std::vector<IterStats> per_iter;
    ClusterLabels labels;  // point partition induced by the root forest
    // Multi-level runs only: root-core count contributed by each subsection.
    std::vector<Index> subsection_roots;
    std::uint64_t distance_evals = 0;
    std::vector<std::string> flags;
};

// Shrinking synchronization run: every point starts as a unit-count core;
// each iteration renews all active cores with the count-weighted averaging
// rule, then absorbs epsilon-coincident actives into the lowest-id core of
// each coincident group (strict < epsilon). The run stops when an iteration
// changes nothing — no absorption and no core moved more than move_tol —
// or at max_iters. Parent paths are compressed before returning.
SSyncReport ssync_run(const StateVector& data, double delta, double epsilon, int max_iters = 50,
                      double move_tol = 1e-6);

// As above over an explicit starting core set (locations and counts carried
// in; ids must equal the vector index). Used by the multi-level engine's
// second stage.
SSyncReport ssync_run_cores(std::vector<Core> cores, int dim, double delta, double epsilon,
                            int max_iters = 50, double move_tol = 1e-6);

// Follows parent pointers to the root. Throws InternalCorruption on a cycle.
Index find_root(const std::vector<Core>& cores, Index id);

// Points every core directly at its root.
void compress_paths(std::vector<Core>& cores);

enum class CoreClass {
    isolate,       // root representing a single point
    cluster_root,  // root representing two or more points
    absorbed,      // non-root
};

CoreClass classify_core(const Core& core);

// Convenience accessor for the per-iteration active-core series.
std::vector<Index> active_counts(const SSyncReport& report);

}  // namespace synclust
