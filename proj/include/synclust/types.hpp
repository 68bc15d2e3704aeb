#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synclust {

using Index = std::int32_t;

// Thrown when a caller violates a precondition (bad dimension, bad parameter).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown on file read/write failures; message carries path and, for parse
// errors, the 1-based line number.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a generator spec cannot be satisfied (e.g. center placement
// keeps failing the minimum-gap constraint).
struct InfeasibleSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant breaks (index corruption, parent cycle).
struct InternalCorruption : std::logic_error {
    using std::logic_error::logic_error;
};

// Dense n x d point buffer plus the evolution step counter. Row i is the
// current position of point i; identity is the row index and never changes
// over a run.
class StateVector {
public:
    StateVector() = default;

    StateVector(Index n, int dim)
        : n_(n), dim_(dim), step_(0), coords_(static_cast<std::size_t>(n) * dim, 0.0) {
        if (n < 0 || dim <= 0) throw InvalidInput("StateVector: n must be >= 0 and dim > 0");
    }

    static StateVector from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw InvalidInput("StateVector::from_rows: empty input");
        StateVector s(static_cast<Index>(rows.size()), static_cast<int>(rows.front().size()));
        for (Index i = 0; i < s.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != s.dim())
                throw InvalidInput("StateVector::from_rows: ragged rows");
            std::copy(rows[i].begin(), rows[i].end(), s.point_mut(i).begin());
        }
        return s;
    }

    Index size() const { return n_; }
    int dim() const { return dim_; }

    int step() const { return step_; }
    void set_step(int t) { step_ = t; }

    std::span<const double> point(Index i) const {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }
    std::span<double> point_mut(Index i) {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }

    const std::vector<double>& data() const { return coords_; }
    std::vector<double>& data_mut() { return coords_; }

    bool same_coords(const StateVector& other) const {
        return n_ == other.n_ && dim_ == other.dim_ && coords_ == other.coords_;
    }

private:
    Index n_ = 0;
    int dim_ = 0;
    int step_ = 0;
    std::vector<double> coords_;
};

enum class Model {
    linear_vicsek,
    extensive_kuramoto,
    original_vicsek,
};

struct ModelParams {
    double delta = 0.0;  // neighbor radius (closed ball)
    double v_dt = 1.0;   // per-step move length, original-Vicsek only
};

// Weighted representative used by the shrinking and multi-level engines.
// A root satisfies parent_core_id == core_id; absorbed cores keep the count
// they had when absorbed.
struct Core {
    Index core_id = 0;
    std::vector<double> location;
    Index parent_core_id = 0;
    long long containing_points = 1;
    bool active = true;
};

}  // namespace synclust
