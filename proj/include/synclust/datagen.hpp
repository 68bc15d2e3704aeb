#pragma once

#include <optional>

#include "synclust/types.hpp"

namespace synclust {

// Synthetic blob generator parameters. Clusters are uniform samples from an
// L2 ball of the given semidiameter around centers placed uniformly in the
// region (inset by the semidiameter so clusters stay inside), with pairwise
// center distance at least min_center_gap. Optional noise is uniform over
// the whole region.
struct GenSpec {
    int num_clusters = 1;
    bool with_noise = false;
    double semidiameter = 30.0;
    int dim = 2;
    Index n = 400;
    double region_min = 0.0;
    double region_max = 600.0;
    double noise_fraction = 0.1;   // used only when with_noise
    double min_center_gap = 0.0;   // 0 = default: 2 * semidiameter + 40
    std::uint64_t seed = 1;

    double effective_center_gap() const {
        return min_center_gap > 0.0 ? min_center_gap : 2.0 * semidiameter + 40.0;
    }
};

// Named presets of the benchmark family: number of clusters, noise flag,
// semidiameter and dimension of ds1..ds12. Returns nullopt for an unknown
// name. n and seed keep their current values.
std::optional<GenSpec> preset_spec(const std::string& name);

struct LabeledDataSet {
    StateVector points;
    std::vector<int> truth;  // cluster id per point; -1 marks noise
    GenSpec spec;
};

// Deterministic under spec.seed. Throws InvalidInput on bad parameters and
// InfeasibleSpec when center placement cannot satisfy the gap constraint.
LabeledDataSet generate_dataset(const GenSpec& spec);

// Ascending edge weights of a minimum spanning tree of the complete
// Euclidean graph (Prim, O(n^2)). Throws InvalidInput for n < 2.
std::vector<double> mst_edge_weights(const StateVector& data);

struct DeltaBounds {
    double delta_min = 0.0;    // min MST edge = min pairwise distance
    double e_max_mst = 0.0;    // max MST edge
    double max_pairwise = 0.0; // data diameter
    bool degenerate = false;   // duplicate points collapse the lower band
};

// Neighbor-radius bands for local synchronization: any delta in
// [delta_min, max_pairwise] synchronizes locally; values at or above
// e_max_mst merge everything reachable.
DeltaBounds delta_bounds(const StateVector& data);

struct RecoveryInterval {
    double lo = 0.0;  // max over clusters of the longest in-cluster MST edge
    double hi = 0.0;  // min over cluster pairs of the closest point distance
    bool empty = false;

    double midpoint() const { return 0.5 * (lo + hi); }
};

// The open delta interval (lo, hi) over which the linearized-Vicsek run
// recovers the labeled clusters exactly: above every in-cluster MST edge,
// below every between-cluster gap. Noise points are excluded. With fewer
// than two clusters hi is +infinity.
RecoveryInterval recovery_interval(const LabeledDataSet& data);

// Deterministic generator used across the library (fixed integer-to-double
// mapping so runs reproduce independently of the standard library's
// distribution implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform01();  // [0, 1)
    double uniform(double lo, double hi);
    std::uint64_t below(std::uint64_t bound);  // unbiased [0, bound)
    double normal();

private:
    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace synclust
