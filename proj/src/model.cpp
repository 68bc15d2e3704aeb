#include "synclust/model.hpp"

#include <cmath>

namespace synclust {

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw InvalidInput("euclidean_distance: dimension mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double diff = a[k] - b[k];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

std::vector<Index> delta_neighbors(const StateVector& state, Index i, double delta) {
    if (i < 0 || i >= state.size())
        throw InvalidInput("delta_neighbors: index out of range");
    if (delta <= 0.0)
        throw InvalidInput("delta_neighbors: delta must be positive");
    std::vector<Index> out;
    for (Index j = 0; j < state.size(); ++j) {
        if (j == i) continue;
        if (euclidean_distance(state, i, j) <= delta) out.push_back(j);
    }
    return out;
}

namespace detail {

void lv_renew(const StateVector& s, Index i, std::span<const Index> neighbors,
              std::span<double> out) {
    const auto x = s.point(i);
    if (neighbors.empty()) {
        std::copy(x.begin(), x.end(), out.begin());
        return;
    }
    const int d = s.dim();
    // Compensated accumulation keeps coincident groups at their common
    // location to within a couple of ulps, so converged states really are
    // fixed points of one more step. Term order stays ascending.
    double comp[64];
    std::vector<double> comp_heap;
    double* c = d <= 64 ? comp : (comp_heap.assign(d, 0.0), comp_heap.data());
    for (int k = 0; k < d; ++k) {
        out[k] = x[k];
        c[k] = 0.0;
    }
    for (Index j : neighbors) {
        const auto y = s.point(j);
        for (int k = 0; k < d; ++k) {
            const double term = y[k] - c[k];
            const double next = out[k] + term;
            c[k] = (next - out[k]) - term;
            out[k] = next;
        }
    }
    const double denom = static_cast<double>(1 + neighbors.size());
    for (int k = 0; k < d; ++k) out[k] /= denom;
}

void ek_renew(const StateVector& s, Index i, std::span<const Index> neighbors,
              std::span<double> out) {
    const auto x = s.point(i);
    if (neighbors.empty()) {
        std::copy(x.begin(), x.end(), out.begin());
        return;
    }
    const int d = s.dim();
    const double inv = 1.0 / static_cast<double>(neighbors.size());
    for (int k = 0; k < d; ++k) {
        double coupling = 0.0;
        for (Index j : neighbors) coupling += std::sin(s.point(j)[k] - x[k]);
        out[k] = x[k] + inv * coupling;
    }
}

bool ov_renew(const StateVector& s, Index i, std::span<const Index> neighbors, double v_dt,
              std::span<double> out) {
    const auto x = s.point(i);
    const int d = s.dim();
    // Direction is own position plus neighbor positions; with no neighbors
    // the point keeps heading along its own position vector.
    std::vector<double> dir(x.begin(), x.end());
    for (Index j : neighbors) {
        const auto y = s.point(j);
        for (int k = 0; k < d; ++k) dir[k] += y[k];
    }
    double norm_sq = 0.0;
    for (int k = 0; k < d; ++k) norm_sq += dir[k] * dir[k];
    if (norm_sq == 0.0) {
        std::copy(x.begin(), x.end(), out.begin());
        return false;
    }
    const double scale = v_dt / std::sqrt(norm_sq);
    for (int k = 0; k < d; ++k) out[k] = x[k] + dir[k] * scale;
    return true;
}

}  // namespace detail

namespace {

template <typename Renew>
StateVector synchronous_step(const StateVector& state, double delta, Renew&& renew) {
    StateVector next(state.size(), state.dim());
    for (Index i = 0; i < state.size(); ++i) {
        auto nb = delta_neighbors(state, i, delta);
        renew(i, nb, next.point_mut(i));
    }
    next.set_step(state.step() + 1);
    return next;
}

}  // namespace

StateVector lv_update(const StateVector& state, const ModelParams& params) {
    return synchronous_step(state, params.delta, [&](Index i, const std::vector<Index>& nb, std::span<double> out) {
        detail::lv_renew(state, i, nb, out);
    });
}

StateVector ek_update(const StateVector& state, const ModelParams& params) {
    return synchronous_step(state, params.delta, [&](Index i, const std::vector<Index>& nb, std::span<double> out) {
        detail::ek_renew(state, i, nb, out);
    });
}

OvResult ov_update(const StateVector& state, const ModelParams& params) {
    if (params.v_dt <= 0.0)
        throw InvalidInput("ov_update: v_dt must be positive");
    OvResult result;
    result.state = synchronous_step(state, params.delta,
                                    [&](Index i, const std::vector<Index>& nb, std::span<double> out) {
        if (!detail::ov_renew(state, i, nb, params.v_dt, out)) result.degenerate.push_back(i);
    });
    return result;
}

std::vector<std::vector<double>> weighted_core_update(const std::vector<Core>& cores, double delta) {
    if (delta <= 0.0)
        throw InvalidInput("weighted_core_update: delta must be positive");
    const Index n = static_cast<Index>(cores.size());
    std::vector<std::vector<double>> out(n);
    for (Index i = 0; i < n; ++i) {
        if (cores[i].containing_points < 1)
            throw InvalidInput("weighted_core_update: core count must be >= 1");
        const auto& x = cores[i].location;
        const int d = static_cast<int>(x.size());
        std::vector<double> acc(d), comp(d, 0.0);
        double own_w = static_cast<double>(cores[i].containing_points);
        for (int k = 0; k < d; ++k) acc[k] = own_w * x[k];
        double total_w = own_w;
        for (Index j = 0; j < n; ++j) {
            if (j == i) continue;
            if (euclidean_distance(std::span<const double>(x), cores[j].location) > delta) continue;
            double w = static_cast<double>(cores[j].containing_points);
            for (int k = 0; k < d; ++k) {
                const double term = w * cores[j].location[k] - comp[k];
                const double next = acc[k] + term;
                comp[k] = (next - acc[k]) - term;
                acc[k] = next;
            }
            total_w += w;
        }
        for (int k = 0; k < d; ++k) acc[k] /= total_w;
        out[i] = std::move(acc);
    }
    return out;
}

}  // namespace synclust
