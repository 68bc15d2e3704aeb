#include "synclust/msync.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "synclust/datagen.hpp"

namespace synclust {

PartitionPlan partition_random(Index n, int m, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("partition_random: need at least one point");
    if (m < 1 || m > n) throw InvalidInput("partition_random: require 1 <= m <= n");

    PartitionPlan plan;
    plan.m = m;
    plan.seed = seed;
    plan.assignment.assign(n, 0);
    Rng rng(seed);

    // Deal one point to every subsection so none is empty, then assign the
    // rest independently at random.
    std::vector<Index> idx(n);
    std::iota(idx.begin(), idx.end(), Index{0});
    for (Index i = 0; i < n - 1; ++i) {
        Index j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    for (int s = 0; s < m; ++s) plan.assignment[idx[s]] = s;
    for (Index p = m; p < n; ++p)
        plan.assignment[idx[p]] = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    return plan;
}

std::vector<Core> collect_root_cores(const std::vector<SSyncReport>& reports) {
    std::vector<Core> collected;
    for (const auto& report : reports) {
        for (Index root : report.roots) {
            Core c = report.cores[root];
            c.core_id = static_cast<Index>(collected.size());
            c.parent_core_id = c.core_id;
            c.active = true;
            collected.push_back(std::move(c));
        }
    }
    return collected;
}

SSyncReport msync_run(const StateVector& data, double delta, int m, double epsilon,
                      std::uint64_t seed, int max_iters) {
    if (data.size() < 1) throw InvalidInput("msync: need at least one point");
    PartitionPlan plan = partition_random(data.size(), m, seed);

    // Subsections keep ascending point order, so m = 1 reproduces the plain
    // shrinking run exactly.
    std::vector<std::vector<Index>> members(m);
    for (Index i = 0; i < data.size(); ++i)
        members[plan.assignment[i]].push_back(i);

    std::vector<SSyncReport> level1;
    level1.reserve(m);
    std::uint64_t level1_evals = 0;
    for (int s = 0; s < m; ++s) {
        StateVector sub(static_cast<Index>(members[s].size()), data.dim());
        for (std::size_t l = 0; l < members[s].size(); ++l) {
            const auto p = data.point(members[s][l]);
            std::copy(p.begin(), p.end(), sub.point_mut(static_cast<Index>(l)).begin());
        }
        level1.push_back(ssync_run(sub, delta, epsilon, max_iters));
        level1_evals += level1.back().distance_evals;
    }

    // Map each subsection root to its id in the collected set; collection
    // order is subsection-major, ascending root id.
    std::vector<std::map<Index, Index>> root_to_cs(m);
    Index next_cs = 0;
    for (int s = 0; s < m; ++s)
        for (Index root : level1[s].roots) root_to_cs[s][root] = next_cs++;

    std::vector<Core> collected = collect_root_cores(level1);
    SSyncReport report =
        ssync_run_cores(std::move(collected), data.dim(), delta, epsilon, max_iters);

    for (int s = 0; s < m; ++s)
        report.subsection_roots.push_back(static_cast<Index>(level1[s].roots.size()));
    report.distance_evals += level1_evals;

    // Point partition: point -> level-1 root -> collected core -> level-2
    // root label.
    const ClusterLabels core_labels = report.labels;
    report.labels.labels.assign(data.size(), -1);
    for (int s = 0; s < m; ++s) {
        const auto& sub_report = level1[s];
        for (std::size_t l = 0; l < members[s].size(); ++l) {
            Index local_root = sub_report.cores[static_cast<Index>(l)].parent_core_id;
            Index cs_id = root_to_cs[s].at(local_root);
            report.labels.labels[members[s][l]] = core_labels.labels[cs_id];
        }
    }
    return report;
}

}  // namespace synclust
