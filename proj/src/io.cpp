#include "synclust/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace synclust {

namespace {

using nlohmann::json;

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

bool parse_double(const std::string& field, double& out) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && begin != end && std::isfinite(out);
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

StateVector read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_fields(line);
        std::vector<double> row(fields.size());
        bool ok = true;
        for (std::size_t f = 0; f < fields.size(); ++f)
            if (!parse_double(fields[f], row[f])) {
                ok = false;
                break;
            }
        if (!ok) {
            if (first_content_line) {  // a single header line is tolerated
                first_content_line = false;
                continue;
            }
            throw IoError("'" + path + "' line " + std::to_string(line_no) +
                          ": malformed numeric field");
        }
        first_content_line = false;
        if (!rows.empty() && rows.front().size() != row.size())
            throw IoError("'" + path + "' line " + std::to_string(line_no) +
                          ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("'" + path + "': no data rows");
    return StateVector::from_rows(rows);
}

void write_points_csv(const std::string& path, const StateVector& state) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (Index i = 0; i < state.size(); ++i) {
        const auto p = state.point(i);
        for (int k = 0; k < state.dim(); ++k) {
            if (k) out << ',';
            out << format_double(p[k]);
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<int> read_labels_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::vector<int> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        int value = 0;
        const char* begin = line.data();
        const char* end = begin + line.size();
        while (end > begin && (*(end - 1) == '\r' || *(end - 1) == ' ')) --end;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end)
            throw IoError("'" + path + "' line " + std::to_string(line_no) +
                          ": malformed label");
        labels.push_back(value);
    }
    if (labels.empty()) throw IoError("'" + path + "': no labels");
    return labels;
}

void write_labels_csv(const std::string& path, std::span<const int> labels) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (int label : labels) out << label << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_snapshot_csv(const std::string& dir, int step, const StateVector& state) {
    std::filesystem::create_directories(dir);
    char name[32];
    std::snprintf(name, sizeof(name), "step_%03d.csv", step);
    write_points_csv((std::filesystem::path(dir) / name).string(), state);
}

namespace {

json params_json(const ReportDoc& doc) {
    json params;
    params["delta"] = doc.delta;
    params["epsilon"] = doc.epsilon;
    params["m"] = doc.m ? json(*doc.m) : json(nullptr);
    params["grid_r"] = doc.grid_r ? json(*doc.grid_r) : json(nullptr);
    params["seed"] = doc.seed;
    return params;
}

void fill_common(const ReportMeta& meta, ReportDoc& doc) {
    doc.algo = meta.algo;
    doc.model = meta.model;
    doc.delta = meta.delta;
    doc.epsilon = meta.epsilon;
    doc.m = meta.m;
    doc.grid_r = meta.grid_r;
    doc.seed = meta.seed;
}

void fill_clusters(ReportDoc& doc, const ClusterLabels& labels) {
    std::vector<Index> sizes(labels.cluster_count(), 0);
    for (Index l : labels.labels)
        if (l >= 0) ++sizes[l];
    for (Index c = 0; c < labels.cluster_count(); ++c)
        doc.clusters.push_back({c, sizes[c], labels.centers[c]});
    doc.labels = labels.labels;
}

}  // namespace

ReportDoc make_report_doc(const ReportMeta& meta, const RunReport& report) {
    ReportDoc doc;
    fill_common(meta, doc);
    doc.iterations = report.iterations;
    doc.converged = report.converged;
    fill_clusters(doc, report.labels);
    for (const auto& it : report.per_iter)
        doc.per_iter.push_back({it.step, it.ave_len, it.r_c, it.active});
    doc.distance_evals = report.distance_evals;
    doc.flags = report.flags;
    return doc;
}

ReportDoc make_report_doc(const ReportMeta& meta, const SSyncReport& report) {
    ReportDoc doc;
    fill_common(meta, doc);
    doc.iterations = report.iterations;
    doc.converged = report.converged;
    fill_clusters(doc, report.labels);
    for (const auto& it : report.per_iter)
        doc.per_iter.push_back({it.step, it.ave_len, it.r_c, it.active});
    doc.distance_evals = report.distance_evals;
    doc.flags = report.flags;
    doc.roots = report.roots;
    doc.active_counts = report.active_counts;
    if (!report.subsection_roots.empty()) doc.subsection_roots = report.subsection_roots;
    return doc;
}

ReportDoc make_report_doc(const ReportMeta& meta, const StateVector& data,
                          std::span<const int> labels, std::uint64_t distance_evals) {
    ReportDoc doc;
    fill_common(meta, doc);
    doc.iterations = 0;
    doc.converged = true;
    doc.distance_evals = distance_evals;

    Index k = 0;
    for (int l : labels) k = std::max(k, static_cast<Index>(l) + 1);
    std::vector<Index> sizes(k, 0);
    std::vector<std::vector<double>> centers(k, std::vector<double>(data.dim(), 0.0));
    for (Index i = 0; i < data.size(); ++i) {
        int l = labels[i];
        doc.labels.push_back(l);
        if (l < 0) continue;
        ++sizes[l];
        const auto p = data.point(i);
        for (int d = 0; d < data.dim(); ++d) centers[l][d] += p[d];
    }
    for (Index c = 0; c < k; ++c) {
        for (double& v : centers[c]) v /= static_cast<double>(std::max<Index>(1, sizes[c]));
        doc.clusters.push_back({c, sizes[c], centers[c]});
    }
    return doc;
}

std::string report_to_json(const ReportDoc& doc) {
    json j;
    j["algo"] = doc.algo;
    j["model"] = doc.model ? json(*doc.model) : json(nullptr);
    j["params"] = params_json(doc);
    j["iterations"] = doc.iterations;
    j["converged"] = doc.converged;
    j["clusters"] = json::array();
    for (const auto& c : doc.clusters)
        j["clusters"].push_back({{"label", c.label}, {"size", c.size}, {"center", c.center}});
    j["per_iter"] = json::array();
    for (const auto& it : doc.per_iter)
        j["per_iter"].push_back(
            {{"t", it.t}, {"ave_len", it.ave_len}, {"r_c", it.r_c}, {"active", it.active}});
    j["counters"] = {{"distance_evals", doc.distance_evals}};
    j["flags"] = doc.flags;
    j["labels"] = doc.labels;
    if (doc.roots) j["roots"] = *doc.roots;
    if (doc.active_counts) j["active_counts"] = *doc.active_counts;
    if (doc.subsection_roots) j["subsection_roots"] = *doc.subsection_roots;
    return j.dump(2);
}

ReportDoc report_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    ReportDoc doc;
    doc.algo = j.at("algo").get<std::string>();
    if (!j.at("model").is_null()) doc.model = j.at("model").get<std::string>();
    const json& params = j.at("params");
    doc.delta = params.at("delta").get<double>();
    doc.epsilon = params.at("epsilon").get<double>();
    if (!params.at("m").is_null()) doc.m = params.at("m").get<int>();
    if (!params.at("grid_r").is_null()) doc.grid_r = params.at("grid_r").get<std::vector<double>>();
    doc.seed = params.at("seed").get<std::uint64_t>();
    doc.iterations = j.at("iterations").get<int>();
    doc.converged = j.at("converged").get<bool>();
    for (const auto& c : j.at("clusters"))
        doc.clusters.push_back({c.at("label").get<Index>(), c.at("size").get<Index>(),
                                c.at("center").get<std::vector<double>>()});
    for (const auto& it : j.at("per_iter"))
        doc.per_iter.push_back({it.at("t").get<int>(), it.at("ave_len").get<double>(),
                                it.at("r_c").get<double>(), it.at("active").get<Index>()});
    doc.distance_evals = j.at("counters").at("distance_evals").get<std::uint64_t>();
    doc.flags = j.at("flags").get<std::vector<std::string>>();
    doc.labels = j.at("labels").get<std::vector<Index>>();
    if (j.contains("roots")) doc.roots = j.at("roots").get<std::vector<Index>>();
    if (j.contains("active_counts"))
        doc.active_counts = j.at("active_counts").get<std::vector<Index>>();
    if (j.contains("subsection_roots"))
        doc.subsection_roots = j.at("subsection_roots").get<std::vector<Index>>();
    return doc;
}

void write_report_json(const std::string& path, const ReportDoc& doc) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << report_to_json(doc) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace synclust
