#include "synclust/esync.hpp"

#include "parallel.hpp"
#include "point_engine.hpp"
#include "scan.hpp"

namespace synclust {

namespace detail {

void renew_all(const StateVector& cur, const std::vector<std::vector<Index>>& neighbors,
               Model model, double v_dt, StateVector& next, int step,
               std::vector<std::string>& flags) {
    const Index n = cur.size();
    std::vector<char> degenerate(model == Model::original_vicsek ? n : 0, 0);
    parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ii = lo; ii < hi; ++ii) {
            const Index i = static_cast<Index>(ii);
            auto out = next.point_mut(i);
            switch (model) {
                case Model::linear_vicsek:
                    lv_renew(cur, i, neighbors[i], out);
                    break;
                case Model::extensive_kuramoto:
                    ek_renew(cur, i, neighbors[i], out);
                    break;
                case Model::original_vicsek:
                    if (!ov_renew(cur, i, neighbors[i], v_dt, out)) degenerate[i] = 1;
                    break;
            }
        }
    });
    for (Index i = 0; i < n; ++i)
        if (!degenerate.empty() && degenerate[i])
            flags.push_back("ov-degenerate point=" + std::to_string(i) +
                            " step=" + std::to_string(step));
    next.set_step(step);
}

// Common loop for the naive and grid-backed point engines. `scan` must
// deliver neighbor sets, edge statistics and coincidence components for a
// given state; `moved` is told about each applied update so an index can
// follow the points.
RunReport run_point_engine(const StateVector& data, const ModelParams& params,
                           const RunOptions& opts,
                           const std::function<ScanResult(const StateVector&)>& scan,
                           const std::function<void(const StateVector&, const StateVector&)>& moved,
                           std::vector<std::string> initial_flags) {
    if (data.size() < 1) throw InvalidInput("run: need at least one point");
    if (params.delta <= 0.0) throw InvalidInput("run: delta must be positive");
    if (opts.max_iters < 1) throw InvalidInput("run: max_iters must be >= 1");
    if (opts.conv_tol <= 0.0) throw InvalidInput("run: conv_tol must be positive");
    if (opts.epsilon_cluster <= 0.0) throw InvalidInput("run: epsilon_cluster must be positive");
    if (opts.model == Model::original_vicsek && params.v_dt <= 0.0)
        throw InvalidInput("run: v_dt must be positive for the original-vicsek model");

    RunReport report;
    report.flags = std::move(initial_flags);

    StateVector cur = data;
    cur.set_step(0);
    if (opts.snapshot_sink) opts.snapshot_sink(0, cur);

    ScanResult sc = scan(cur);
    std::uint64_t pending_evals = sc.evals;  // charged to the first iteration

    for (int t = 1; t <= opts.max_iters; ++t) {
        StateVector next(cur.size(), cur.dim());
        renew_all(cur, sc.neighbors, opts.model, params.v_dt, next, t, report.flags);
        moved(cur, next);
        if (opts.snapshot_sink) opts.snapshot_sink(t, next);

        sc = scan(next);
        report.per_iter.push_back(
            {t, sc.ave_len, sc.r_c, sc.distinct, pending_evals + sc.evals});
        report.distance_evals += pending_evals + sc.evals;
        pending_evals = 0;
        report.iterations = t;
        cur = std::move(next);

        if (sc.ave_len <= opts.conv_tol) {
            report.converged = true;
            break;
        }
    }

    auto lo = components_to_labels(cur, sc.component);
    report.labels = ClusterLabels{std::move(lo.labels), std::move(lo.centers)};
    report.final_state = std::move(cur);
    return report;
}

}  // namespace detail

RunReport esync_run(const StateVector& data, const ModelParams& params, const RunOptions& opts) {
    return detail::run_point_engine(
        data, params, opts,
        [&](const StateVector& s) {
            return detail::scan_all_pairs(s, params.delta, opts.epsilon_cluster);
        },
        [](const StateVector&, const StateVector&) {}, {});
}

std::vector<SweepPoint> delta_sweep(const StateVector& data, std::span<const double> deltas,
                                    const ModelParams& base, const RunOptions& opts) {
    std::vector<SweepPoint> out;
    out.reserve(deltas.size());
    double prev = 0.0;
    for (double d : deltas) {
        if (d <= 0.0 || d < prev)
            throw InvalidInput("delta_sweep: deltas must be positive and ascending");
        prev = d;
        ModelParams p = base;
        p.delta = d;
        RunReport r = esync_run(data, p, opts);
        out.push_back({d, r.labels.cluster_count(), r.iterations, r.converged});
    }
    return out;
}

}  // namespace synclust
