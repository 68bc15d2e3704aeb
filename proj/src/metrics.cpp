#include "synclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "scan.hpp"
#include "synclust/model.hpp"

namespace synclust {

DeltaGraph build_delta_graph(const StateVector& state, double delta) {
    if (delta <= 0.0)
        throw InvalidInput("build_delta_graph: delta must be positive");
    DeltaGraph g;
    g.vertex_count = state.size();
    for (Index i = 0; i < state.size(); ++i) {
        for (Index j = i + 1; j < state.size(); ++j) {
            double d = euclidean_distance(state, i, j);
            if (d <= delta) g.edges.push_back({i, j, d});
        }
    }
    return g;
}

double ave_len(const DeltaGraph& graph) {
    if (graph.edges.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& e : graph.edges) sum += e.weight;
    return sum / static_cast<double>(graph.edges.size());
}

double cluster_order_parameter(const StateVector& state, double delta) {
    if (delta <= 0.0)
        throw InvalidInput("cluster_order_parameter: delta must be positive");
    if (state.size() == 0) return 0.0;
    double sum = 0.0;
    for (Index i = 0; i < state.size(); ++i) {
        for (Index j = i + 1; j < state.size(); ++j) {
            double d = euclidean_distance(state, i, j);
            if (d <= delta) sum += 2.0 * std::exp(-d);  // both orientations of the pair
        }
    }
    return sum / static_cast<double>(state.size());
}

namespace detail {

LabelsOut components_to_labels(const StateVector& state, std::span<const Index> component) {
    LabelsOut out;
    const Index n = state.size();
    out.labels.assign(n, -1);
    std::map<Index, Index> root_to_label;
    for (Index i = 0; i < n; ++i) {
        auto it = root_to_label.try_emplace(component[i], static_cast<Index>(root_to_label.size())).first;
        out.labels[i] = it->second;
    }
    const Index k = static_cast<Index>(root_to_label.size());
    out.centers.assign(k, std::vector<double>(state.dim(), 0.0));
    std::vector<Index> sizes(k, 0);
    for (Index i = 0; i < n; ++i) {
        const auto p = state.point(i);
        auto& c = out.centers[out.labels[i]];
        for (int d = 0; d < state.dim(); ++d) c[d] += p[d];
        ++sizes[out.labels[i]];
    }
    for (Index l = 0; l < k; ++l)
        for (double& v : out.centers[l]) v /= static_cast<double>(sizes[l]);
    return out;
}

}  // namespace detail

ClusterLabels extract_clusters(const StateVector& state, double epsilon) {
    if (epsilon <= 0.0)
        throw InvalidInput("extract_clusters: epsilon must be positive");
    detail::UnionFind uf(state.size());
    for (Index i = 0; i < state.size(); ++i)
        for (Index j = i + 1; j < state.size(); ++j)
            if (euclidean_distance(state, i, j) < epsilon) uf.unite(i, j);
    std::vector<Index> component(state.size());
    for (Index i = 0; i < state.size(); ++i) component[i] = uf.find(i);
    auto lo = detail::components_to_labels(state, component);
    return ClusterLabels{std::move(lo.labels), std::move(lo.centers)};
}

bool match_labels(const ClusterLabels& a, const ClusterLabels& b) {
    if (a.labels.size() != b.labels.size()) return false;
    std::map<Index, Index> fwd, rev;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        Index la = a.labels[i], lb = b.labels[i];
        auto [fit, fnew] = fwd.try_emplace(la, lb);
        if (!fnew && fit->second != lb) return false;
        auto [rit, rnew] = rev.try_emplace(lb, la);
        if (!rnew && rit->second != la) return false;
    }
    return true;
}

}  // namespace synclust
