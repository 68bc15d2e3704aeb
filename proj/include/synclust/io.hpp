#pragma once

#include <optional>
#include <string>

#include "synclust/esync.hpp"
#include "synclust/ssync.hpp"
#include "synclust/types.hpp"

namespace synclust {

// One point per line, comma-separated decimal fields with '.' separators.
// A single leading header line is detected and skipped. Parse failures name
// the 1-based line number.
StateVector read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const StateVector& state);

// Sidecar label column, one integer per line (-1 = noise).
std::vector<int> read_labels_csv(const std::string& path);
void write_labels_csv(const std::string& path, std::span<const int> labels);

// Per-step snapshot file "step_{t:03}.csv" in dir; step 0 is the input.
void write_snapshot_csv(const std::string& dir, int step, const StateVector& state);

// JSON view of a finished run. Field names are stable; optional sections
// appear only for the engines that produce them.
struct ReportDoc {
    std::string algo;
    std::optional<std::string> model;  // lv | ek | ov
    double delta = 0.0;
    double epsilon = 0.0;
    std::optional<int> m;
    std::optional<std::vector<double>> grid_r;
    std::uint64_t seed = 0;
    int iterations = 0;
    bool converged = false;

    struct ClusterEntry {
        Index label = 0;
        Index size = 0;
        std::vector<double> center;
        bool operator==(const ClusterEntry&) const = default;
    };
    std::vector<ClusterEntry> clusters;

    struct IterEntry {
        int t = 0;
        double ave_len = 0.0;
        double r_c = 0.0;
        Index active = 0;
        bool operator==(const IterEntry&) const = default;
    };
    std::vector<IterEntry> per_iter;

    std::uint64_t distance_evals = 0;
    std::vector<std::string> flags;
    std::vector<Index> labels;

    std::optional<std::vector<Index>> roots;
    std::optional<std::vector<Index>> active_counts;
    std::optional<std::vector<Index>> subsection_roots;

    bool operator==(const ReportDoc&) const = default;
};

struct ReportMeta {
    std::string algo;
    std::optional<std::string> model;
    double delta = 0.0;
    double epsilon = 0.0;
    std::optional<int> m;
    std::optional<std::vector<double>> grid_r;
    std::uint64_t seed = 0;
};

ReportDoc make_report_doc(const ReportMeta& meta, const RunReport& report);
ReportDoc make_report_doc(const ReportMeta& meta, const SSyncReport& report);
// For label-only algorithms (dbscan, kmeans); sizes/centers computed from
// the data, noise points carry label -1 and join no cluster entry.
ReportDoc make_report_doc(const ReportMeta& meta, const StateVector& data,
                          std::span<const int> labels, std::uint64_t distance_evals);

std::string report_to_json(const ReportDoc& doc);
ReportDoc report_from_json(const std::string& json_text);
void write_report_json(const std::string& path, const ReportDoc& doc);

}  // namespace synclust
