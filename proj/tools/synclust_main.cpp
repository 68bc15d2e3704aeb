// Command-line front end for the synclust shared library. All clustering
// work goes through the C API in synclust.h; this file only parses flags,
// moves files around and formats CSV/JSON outputs.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "synclust.h"

namespace {

constexpr int kExitBadConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInfeasible = 4;

int exit_code_for(synclust_status status) {
    switch (status) {
        case SYNCLUST_OK: return 0;
        case SYNCLUST_ERR_INVALID: return kExitBadConfig;
        case SYNCLUST_ERR_IO: return kExitIo;
        case SYNCLUST_ERR_INFEASIBLE: return kExitInfeasible;
        default: return 1;
    }
}

[[noreturn]] void fail(synclust_status status) {
    std::cerr << "error: " << synclust_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(synclust_status status) {
    if (status != SYNCLUST_OK) fail(status);
}

struct DatasetHandle {
    synclust_dataset* ds = nullptr;
    ~DatasetHandle() { synclust_dataset_free(ds); }
};

struct ReportHandle {
    synclust_report* report = nullptr;
    ~ReportHandle() { synclust_report_free(report); }
};

struct GenFlags {
    std::string preset;
    int nc = 0;
    double cs = 0.0;
    int dim = 0;
    bool noise = false;
    int n = 400;
    double region_min = 0.0;
    double region_max = 600.0;
    double noise_frac = 0.1;
    double gap = 0.0;
    std::uint64_t seed = 1;
};

synclust_gen_spec build_gen_spec(const GenFlags& flags) {
    synclust_gen_spec spec;
    synclust_gen_spec_init(&spec);
    if (!flags.preset.empty()) check(synclust_gen_spec_preset(flags.preset.c_str(), &spec));
    if (flags.nc > 0) spec.num_clusters = flags.nc;
    if (flags.cs > 0.0) spec.semidiameter = flags.cs;
    if (flags.dim > 0) spec.dim = flags.dim;
    if (flags.preset.empty()) spec.with_noise = flags.noise ? 1 : 0;
    spec.n = flags.n;
    spec.region_min = flags.region_min;
    spec.region_max = flags.region_max;
    spec.noise_fraction = flags.noise_frac;
    spec.min_center_gap = flags.gap;
    spec.seed = flags.seed;
    return spec;
}

struct RunFlags {
    std::string algo = "esync";
    bool m_given = false;
    std::string model = "lv";
    double delta = 18.0;
    double epsilon = 1e-5;
    double conv_tol = 1e-6;
    double v_dt = 1.0;
    std::vector<double> grid_r;
    int m = 1;
    int max_iters = 50;
    int k = 0;
    int min_pts = 4;
    std::uint64_t seed = 1;
    std::string snapshot_dir;
};

synclust_run_config build_run_config(const RunFlags& flags) {
    synclust_run_config cfg;
    synclust_run_config_init(&cfg);
    if (flags.algo == "esync")
        cfg.algo = SYNCLUST_ALGO_ESYNC;
    else if (flags.algo == "iesync")
        cfg.algo = SYNCLUST_ALGO_IESYNC;
    else if (flags.algo == "ssync")
        cfg.algo = SYNCLUST_ALGO_SSYNC;
    else if (flags.algo == "msync")
        cfg.algo = SYNCLUST_ALGO_MSYNC;
    else if (flags.algo == "dbscan")
        cfg.algo = SYNCLUST_ALGO_DBSCAN;
    else if (flags.algo == "kmeans")
        cfg.algo = SYNCLUST_ALGO_KMEANS;
    else {
        std::cerr << "error: unknown --algo '" << flags.algo << "'\n";
        std::exit(kExitBadConfig);
    }
    if (flags.model == "lv")
        cfg.model = SYNCLUST_MODEL_LV;
    else if (flags.model == "ek")
        cfg.model = SYNCLUST_MODEL_EK;
    else if (flags.model == "ov")
        cfg.model = SYNCLUST_MODEL_OV;
    else {
        std::cerr << "error: unknown --model '" << flags.model << "'\n";
        std::exit(kExitBadConfig);
    }
    cfg.delta = flags.delta;
    cfg.epsilon = flags.epsilon;
    cfg.conv_tol = flags.conv_tol;
    cfg.v_dt = flags.v_dt;
    if (!flags.grid_r.empty()) {
        cfg.grid_r = flags.grid_r.data();
        cfg.grid_r_len = static_cast<int32_t>(flags.grid_r.size());
    }
    cfg.m = flags.m;
    cfg.max_iters = flags.max_iters;
    cfg.kmeans_k = flags.k;
    cfg.dbscan_min_pts = flags.min_pts;
    cfg.seed = flags.seed;
    if (!flags.snapshot_dir.empty()) cfg.snapshot_dir = flags.snapshot_dir.c_str();
    return cfg;
}

void require_algo_flags(const RunFlags& flags) {
    if (flags.algo == "iesync" && flags.grid_r.empty()) {
        std::cerr << "error: --algo iesync requires --grid-r\n";
        std::exit(kExitBadConfig);
    }
    if (flags.algo == "msync" && !flags.m_given) {
        std::cerr << "error: --algo msync requires --m\n";
        std::exit(kExitBadConfig);
    }
    if (flags.algo == "kmeans" && flags.k < 1) {
        std::cerr << "error: --algo kmeans requires --k\n";
        std::exit(kExitBadConfig);
    }
}

std::vector<double> parse_delta_range(const std::string& text) {
    // "lo:hi[:step]" or a comma list.
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double lo = 0.0, hi = 0.0, step = 1.0;
        char sep1 = 0, sep2 = 0;
        std::istringstream in(text);
        in >> lo >> sep1 >> hi;
        if (in && in.peek() == ':') in >> sep2 >> step;
        if (!in || lo <= 0.0 || hi < lo || step <= 0.0) {
            std::cerr << "error: bad --deltas range '" << text << "'\n";
            std::exit(kExitBadConfig);
        }
        for (double d = lo; d <= hi + 1e-12; d += step) out.push_back(d);
    } else {
        std::istringstream in(text);
        std::string field;
        while (std::getline(in, field, ',')) {
            try {
                out.push_back(std::stod(field));
            } catch (...) {
                std::cerr << "error: bad --deltas value '" << field << "'\n";
                std::exit(kExitBadConfig);
            }
        }
    }
    if (out.empty()) {
        std::cerr << "error: --deltas produced no values\n";
        std::exit(kExitBadConfig);
    }
    return out;
}

void load_dataset(const std::string& input, DatasetHandle& handle) {
    check(synclust_dataset_load_csv(input.c_str(), &handle.ds));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronization-based clustering toolkit"};
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------
    GenFlags gen;
    std::string gen_out = "data.csv";
    std::string gen_truth;
    auto* cmd_gen = app.add_subcommand("gen", "generate a synthetic data set");
    cmd_gen->add_option("--preset", gen.preset, "named preset ds1..ds12");
    cmd_gen->add_option("--nc", gen.nc, "number of clusters");
    cmd_gen->add_option("--cs", gen.cs, "cluster semidiameter");
    cmd_gen->add_option("--d", gen.dim, "dimension");
    cmd_gen->add_flag("--noise", gen.noise, "add uniform background noise");
    cmd_gen->add_option("--n", gen.n, "total number of points");
    cmd_gen->add_option("--region-min", gen.region_min, "region lower bound per dimension");
    cmd_gen->add_option("--region-max", gen.region_max, "region upper bound per dimension");
    cmd_gen->add_option("--noise-frac", gen.noise_frac, "noise fraction when --noise");
    cmd_gen->add_option("--gap", gen.gap, "minimum center distance (0 = default)");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--out", gen_out, "output CSV path");
    cmd_gen->add_option("--truth-out", gen_truth, "truth CSV path (default <out>.truth.csv)");

    // --- run ---------------------------------------------------------
    RunFlags run;
    std::string run_input;
    std::string run_output = "report.json";
    auto* cmd_run = app.add_subcommand("run", "cluster a CSV data set and write a JSON report");
    cmd_run->add_option("--input", run_input, "input CSV")->required();
    cmd_run->add_option("--output", run_output, "report JSON path");
    cmd_run->add_option("--algo", run.algo, "esync|iesync|ssync|msync|dbscan|kmeans");
    cmd_run->add_option("--model", run.model, "lv|ek|ov (esync only)");
    cmd_run->add_option("--delta", run.delta, "neighbor radius (dbscan eps)");
    cmd_run->add_option("--epsilon", run.epsilon, "coincidence radius");
    cmd_run->add_option("--conv-tol", run.conv_tol, "mean-edge-length convergence threshold");
    cmd_run->add_option("--v-dt", run.v_dt, "ov move length per step");
    cmd_run->add_option("--grid-r", run.grid_r, "iesync cell edge (one value or one per dimension)");
    cmd_run->add_option("--m", run.m, "msync subsection count")
        ->each([&run](const std::string&) { run.m_given = true; });
    cmd_run->add_option("--max-iters", run.max_iters, "iteration cap");
    cmd_run->add_option("--k", run.k, "kmeans cluster count");
    cmd_run->add_option("--min-pts", run.min_pts, "dbscan density threshold");
    cmd_run->add_option("--seed", run.seed, "seed for msync/kmeans");
    cmd_run->add_option("--snapshots", run.snapshot_dir, "directory for per-step CSV snapshots");

    // --- sweep -------------------------------------------------------
    RunFlags sweep;
    std::string sweep_input;
    std::string sweep_output = "sweep.csv";
    std::string sweep_deltas = "1:99:1";
    auto* cmd_sweep = app.add_subcommand("sweep", "cluster counts across a delta range");
    cmd_sweep->add_option("--input", sweep_input, "input CSV")->required();
    cmd_sweep->add_option("--output", sweep_output, "output CSV path");
    cmd_sweep->add_option("--deltas", sweep_deltas, "lo:hi[:step] or comma list");
    cmd_sweep->add_option("--algo", sweep.algo, "esync|iesync|ssync|msync");
    cmd_sweep->add_option("--model", sweep.model, "lv|ek|ov");
    cmd_sweep->add_option("--epsilon", sweep.epsilon, "coincidence radius");
    cmd_sweep->add_option("--grid-r", sweep.grid_r, "iesync cell edge");
    cmd_sweep->add_option("--m", sweep.m, "msync subsection count")
        ->each([&sweep](const std::string&) { sweep.m_given = true; });
    cmd_sweep->add_option("--max-iters", sweep.max_iters, "iteration cap");
    cmd_sweep->add_option("--seed", sweep.seed, "seed");

    // --- bench -------------------------------------------------------
    RunFlags bench;
    std::string bench_input;
    std::string bench_output = "bench.csv";
    std::string bench_algos = "esync,iesync,ssync";
    std::string bench_deltas = "18";
    auto* cmd_bench = app.add_subcommand("bench", "compare algorithms on one data set");
    cmd_bench->add_option("--input", bench_input, "input CSV")->required();
    cmd_bench->add_option("--output", bench_output, "output CSV path");
    cmd_bench->add_option("--algos", bench_algos, "comma list of algorithms");
    cmd_bench->add_option("--deltas", bench_deltas, "lo:hi[:step] or comma list");
    cmd_bench->add_option("--model", bench.model, "lv|ek|ov");
    cmd_bench->add_option("--epsilon", bench.epsilon, "coincidence radius");
    cmd_bench->add_option("--grid-r", bench.grid_r, "iesync cell edge");
    cmd_bench->add_option("--m", bench.m, "msync subsection count")
        ->each([&bench](const std::string&) { bench.m_given = true; });
    cmd_bench->add_option("--max-iters", bench.max_iters, "iteration cap");
    cmd_bench->add_option("--k", bench.k, "kmeans cluster count");
    cmd_bench->add_option("--min-pts", bench.min_pts, "dbscan density threshold");
    cmd_bench->add_option("--seed", bench.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadConfig;
    }

    if (cmd_gen->parsed()) {
        synclust_gen_spec spec = build_gen_spec(gen);
        DatasetHandle handle;
        check(synclust_dataset_generate(&spec, &handle.ds));
        check(synclust_dataset_save_csv(handle.ds, gen_out.c_str()));
        std::string truth_path = gen_truth.empty() ? gen_out + ".truth.csv" : gen_truth;
        check(synclust_dataset_save_truth_csv(handle.ds, truth_path.c_str()));
        std::cout << "wrote " << synclust_dataset_size(handle.ds) << " points (dim "
                  << synclust_dataset_dim(handle.ds) << ") to " << gen_out << "\n";
        return 0;
    }

    if (cmd_run->parsed()) {
        require_algo_flags(run);
        DatasetHandle handle;
        load_dataset(run_input, handle);
        synclust_run_config cfg = build_run_config(run);
        ReportHandle report;
        check(synclust_run(handle.ds, &cfg, &report.report));
        check(synclust_report_save_json(report.report, run_output.c_str()));
        std::cout << run.algo << ": " << synclust_report_cluster_count(report.report)
                  << " clusters in " << synclust_report_iterations(report.report)
                  << " iterations"
                  << (synclust_report_converged(report.report) ? "" : " (iteration cap)")
                  << "; report written to " << run_output << "\n";
        return 0;
    }

    if (cmd_sweep->parsed()) {
        require_algo_flags(sweep);
        DatasetHandle handle;
        load_dataset(sweep_input, handle);
        auto deltas = parse_delta_range(sweep_deltas);
        std::vector<int32_t> clusters(deltas.size()), iterations(deltas.size());
        synclust_run_config cfg = build_run_config(sweep);
        check(synclust_sweep(handle.ds, &cfg, deltas.data(),
                             static_cast<int32_t>(deltas.size()), clusters.data(),
                             iterations.data()));
        std::ofstream out(sweep_output);
        if (!out) {
            std::cerr << "error: cannot open '" << sweep_output << "' for writing\n";
            return kExitIo;
        }
        out << "delta,clusters,iterations\n";
        for (std::size_t i = 0; i < deltas.size(); ++i)
            out << deltas[i] << ',' << clusters[i] << ',' << iterations[i] << '\n';
        std::cout << "swept " << deltas.size() << " delta values; wrote " << sweep_output << "\n";
        return 0;
    }

    if (cmd_bench->parsed()) {
        DatasetHandle handle;
        load_dataset(bench_input, handle);
        auto deltas = parse_delta_range(bench_deltas);
        std::vector<std::string> algos;
        {
            std::istringstream in(bench_algos);
            std::string field;
            while (std::getline(in, field, ',')) algos.push_back(field);
        }
        std::ofstream out(bench_output);
        if (!out) {
            std::cerr << "error: cannot open '" << bench_output << "' for writing\n";
            return kExitIo;
        }
        out << "algo,delta,iterations,clusters,distance_evals,wall_time,active_counts\n";
        for (const std::string& algo : algos) {
            for (double delta : deltas) {
                RunFlags flags = bench;
                flags.algo = algo;
                flags.delta = delta;
                require_algo_flags(flags);
                synclust_run_config cfg = build_run_config(flags);
                ReportHandle report;
                auto start = std::chrono::steady_clock::now();
                check(synclust_run(handle.ds, &cfg, &report.report));
                double seconds = std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
                out << algo << ',' << delta << ','
                    << synclust_report_iterations(report.report) << ','
                    << synclust_report_cluster_count(report.report) << ','
                    << synclust_report_distance_evals(report.report) << ',' << seconds << ',';
                int32_t len = 0;
                const int32_t* counts = synclust_report_active_counts(report.report, &len);
                for (int32_t i = 0; i < len; ++i) out << (i ? ";" : "") << counts[i];
                out << '\n';
            }
        }
        std::cout << "benchmarked " << algos.size() << " algorithms x " << deltas.size()
                  << " deltas; wrote " << bench_output << "\n";
        return 0;
    }

    return kExitBadConfig;
}
