#pragma once

#include "synclust/ssync.hpp"
#include "synclust/types.hpp"

namespace synclust {

struct PartitionPlan {
    int m = 1;
    std::vector<int> assignment;  // point index -> subsection in [0, m)
    std::uint64_t seed = 0;
};

// Random assignment of n points to m non-empty subsections, deterministic
// under the seed. One point is dealt to each subsection first (in shuffled
// order), the rest are assigned independently and uniformly, so sizes are
// binomial up to the dealt unit.
PartitionPlan partition_random(Index n, int m, std::uint64_t seed);

// Multi-level run: partition, shrink each subsection independently, collect
// all subsection root cores (counts and converged locations carried over,
// isolates included), then shrink the collected set with the count-weighted
// rule. The returned report describes the collected-core run; labels map the
// original points through both levels, and subsection_roots records how many
// roots each subsection contributed.
SSyncReport msync_run(const StateVector& data, double delta, int m, double epsilon,
                      std::uint64_t seed, int max_iters = 50);

// Re-activates and re-ids every root core from the given reports, in report
// order then ascending root id. Counts are preserved.
std::vector<Core> collect_root_cores(const std::vector<SSyncReport>& reports);

}  // namespace synclust
