#include "synclust/ssync.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scan.hpp"
#include "synclust/model.hpp"

namespace synclust {

Index find_root(const std::vector<Core>& cores, Index id) {
    if (id < 0 || id >= static_cast<Index>(cores.size()))
        throw InvalidInput("find_root: id out of range");
    Index cur = id;
    for (std::size_t steps = 0; steps <= cores.size(); ++steps) {
        Index parent = cores[cur].parent_core_id;
        if (parent == cur) return cur;
        cur = parent;
        if (cur < 0 || cur >= static_cast<Index>(cores.size()))
            throw InternalCorruption("find_root: parent id out of range");
    }
    throw InternalCorruption("find_root: parent cycle detected");
}

void compress_paths(std::vector<Core>& cores) {
    for (Index id = 0; id < static_cast<Index>(cores.size()); ++id)
        cores[id].parent_core_id = find_root(cores, id);
}

CoreClass classify_core(const Core& core) {
    if (core.parent_core_id != core.core_id) return CoreClass::absorbed;
    return core.containing_points >= 2 ? CoreClass::cluster_root : CoreClass::isolate;
}

std::vector<Index> active_counts(const SSyncReport& report) { return report.active_counts; }

namespace {

// Scan over the locations of the listed cores; neighbor slots refer to
// positions in `active`.
detail::ScanResult scan_active_cores(const std::vector<Core>& cores,
                                     const std::vector<Index>& active, int dim, double delta) {
    StateVector locs(static_cast<Index>(active.size()), dim);
    for (std::size_t s = 0; s < active.size(); ++s) {
        auto out = locs.point_mut(static_cast<Index>(s));
        const auto& loc = cores[active[s]].location;
        std::copy(loc.begin(), loc.end(), out.begin());
    }
    return detail::scan_all_pairs(locs, delta, 0.0);
}

long long active_mass_of(const std::vector<Core>& cores, const std::vector<Index>& active) {
    long long mass = 0;
    for (Index id : active) mass += cores[id].containing_points;
    return mass;
}

}  // namespace

SSyncReport ssync_run_cores(std::vector<Core> cores, int dim, double delta, double epsilon,
                            int max_iters, double move_tol) {
    if (cores.empty()) throw InvalidInput("ssync: need at least one core");
    if (delta <= 0.0) throw InvalidInput("ssync: delta must be positive");
    if (epsilon <= 0.0) throw InvalidInput("ssync: epsilon must be positive");
    if (max_iters < 1) throw InvalidInput("ssync: max_iters must be >= 1");
    if (move_tol <= 0.0) throw InvalidInput("ssync: move_tol must be positive");
    for (Index id = 0; id < static_cast<Index>(cores.size()); ++id) {
        if (cores[id].core_id != id)
            throw InvalidInput("ssync: core ids must equal their position");
        if (cores[id].containing_points < 1)
            throw InvalidInput("ssync: core counts must be >= 1");
        if (static_cast<int>(cores[id].location.size()) != dim)
            throw InvalidInput("ssync: core location dimension mismatch");
    }

    SSyncReport report;
    std::vector<Index> active;
    for (Index id = 0; id < static_cast<Index>(cores.size()); ++id)
        if (cores[id].active) active.push_back(id);
    if (active.empty()) throw InvalidInput("ssync: no active cores");

    report.active_counts.push_back(static_cast<Index>(active.size()));
    report.active_mass.push_back(active_mass_of(cores, active));

    detail::ScanResult sc = scan_active_cores(cores, active, dim, delta);
    std::uint64_t pending_evals = sc.evals;

    for (int t = 1; t <= max_iters; ++t) {
        std::uint64_t iter_evals = pending_evals;
        pending_evals = 0;
        const std::size_t n_act = active.size();

        // Synchronous weighted renewal from the step-(t-1) active locations.
        std::vector<std::vector<double>> renewed(n_act);
        double max_disp = 0.0;
        for (std::size_t s = 0; s < n_act; ++s) {
            const Core& self = cores[active[s]];
            std::vector<double> acc(dim), comp(dim, 0.0);
            const double own_w = static_cast<double>(self.containing_points);
            for (int k = 0; k < dim; ++k) acc[k] = own_w * self.location[k];
            double total_w = own_w;
            for (Index u : sc.neighbors[static_cast<Index>(s)]) {
                const Core& other = cores[active[u]];
                const double w = static_cast<double>(other.containing_points);
                for (int k = 0; k < dim; ++k) {
                    const double term = w * other.location[k] - comp[k];
                    const double next = acc[k] + term;
                    comp[k] = (next - acc[k]) - term;
                    acc[k] = next;
                }
                total_w += w;
            }
            for (int k = 0; k < dim; ++k) acc[k] /= total_w;
            double disp = euclidean_distance(std::span<const double>(acc), self.location);
            ++iter_evals;
            max_disp = std::max(max_disp, disp);
            renewed[s] = std::move(acc);
        }
        for (std::size_t s = 0; s < n_act; ++s) cores[active[s]].location = std::move(renewed[s]);

        // Coincidence sweep: ascending id, the first unabsorbed core of each
        // strictly-epsilon-close group absorbs the rest. A first-coordinate
        // sort keeps the candidate windows small.
        std::vector<std::size_t> order(n_act);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cores[active[a]].location[0] < cores[active[b]].location[0];
        });
        std::vector<double> xs(n_act);
        for (std::size_t p = 0; p < n_act; ++p) xs[p] = cores[active[order[p]]].location[0];

        std::vector<char> absorbed(n_act, 0);
        for (std::size_t s = 0; s < n_act; ++s) {
            if (absorbed[s]) continue;
            Core& self = cores[active[s]];
            const double x0 = self.location[0];
            auto first = std::lower_bound(xs.begin(), xs.end(), x0 - epsilon);
            auto last = std::upper_bound(xs.begin(), xs.end(), x0 + epsilon);
            for (auto it = first; it != last; ++it) {
                std::size_t u = order[static_cast<std::size_t>(it - xs.begin())];
                if (u == s || absorbed[u]) continue;
                Core& other = cores[active[u]];
                double d = euclidean_distance(std::span<const double>(self.location), other.location);
                ++iter_evals;
                if (d < epsilon) {
                    absorbed[u] = 1;
                    other.active = false;
                    other.parent_core_id = self.core_id;
                    self.containing_points += other.containing_points;
                }
            }
        }

        std::vector<Index> survivors;
        survivors.reserve(n_act);
        for (std::size_t s = 0; s < n_act; ++s)
            if (!absorbed[s]) survivors.push_back(active[s]);

        const Index prev_count = report.active_counts.back();
        report.active_counts.push_back(static_cast<Index>(survivors.size()));
        report.active_mass.push_back(active_mass_of(cores, survivors));

        sc = scan_active_cores(cores, survivors, dim, delta);
        iter_evals += sc.evals;
        report.per_iter.push_back({t, sc.ave_len, sc.r_c,
                                   static_cast<Index>(survivors.size()), iter_evals});
        report.distance_evals += iter_evals;
        report.iterations = t;
        active = std::move(survivors);

        // An iteration that neither absorbed anything nor moved any core
        // materially changed nothing; later iterations would repeat it.
        if (static_cast<Index>(active.size()) == prev_count && max_disp <= move_tol) {
            report.converged = true;
            break;
        }
    }

    compress_paths(cores);
    for (Index id = 0; id < static_cast<Index>(cores.size()); ++id)
        if (cores[id].parent_core_id == id) report.roots.push_back(id);

    // Partition: one label per root, ascending root id; every core maps to
    // its root's label.
    std::vector<Index> root_label(cores.size(), -1);
    for (std::size_t r = 0; r < report.roots.size(); ++r) {
        root_label[report.roots[r]] = static_cast<Index>(r);
        report.labels.centers.push_back(cores[report.roots[r]].location);
    }
    report.labels.labels.resize(cores.size());
    for (Index id = 0; id < static_cast<Index>(cores.size()); ++id)
        report.labels.labels[id] = root_label[cores[id].parent_core_id];

    report.cores = std::move(cores);
    return report;
}

SSyncReport ssync_run(const StateVector& data, double delta, double epsilon, int max_iters,
                      double move_tol) {
    if (data.size() < 1) throw InvalidInput("ssync: need at least one point");
    std::vector<Core> cores(data.size());
    for (Index i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        cores[i].core_id = i;
        cores[i].location.assign(p.begin(), p.end());
        cores[i].parent_core_id = i;
        cores[i].containing_points = 1;
        cores[i].active = true;
    }
    return ssync_run_cores(std::move(cores), data.dim(), delta, epsilon, max_iters, move_tol);
}

}  // namespace synclust
