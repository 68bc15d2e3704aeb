#include "synclust.h"

#include <cstring>
#include <memory>
#include <string>

#include "synclust/baselines.hpp"
#include "synclust/datagen.hpp"
#include "synclust/esync.hpp"
#include "synclust/grid.hpp"
#include "synclust/io.hpp"
#include "synclust/msync.hpp"
#include "synclust/ssync.hpp"

struct synclust_dataset {
    synclust::StateVector points;
    std::vector<int> truth;  // empty when unknown
    bool has_truth = false;
};

struct synclust_report {
    synclust::ReportDoc doc;
    std::vector<std::int32_t> labels;
    std::vector<std::int32_t> active_counts;
};

namespace {

thread_local std::string g_last_error;

synclust_status set_error(synclust_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
synclust_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const synclust::InvalidInput& e) {
        return set_error(SYNCLUST_ERR_INVALID, e.what());
    } catch (const synclust::IoError& e) {
        return set_error(SYNCLUST_ERR_IO, e.what());
    } catch (const synclust::InfeasibleSpec& e) {
        return set_error(SYNCLUST_ERR_INFEASIBLE, e.what());
    } catch (const std::exception& e) {
        return set_error(SYNCLUST_ERR_INTERNAL, e.what());
    }
}

const char* model_name(synclust_model model) {
    switch (model) {
        case SYNCLUST_MODEL_LV: return "lv";
        case SYNCLUST_MODEL_EK: return "ek";
        case SYNCLUST_MODEL_OV: return "ov";
    }
    return "lv";
}

synclust::Model to_model(synclust_model model) {
    switch (model) {
        case SYNCLUST_MODEL_EK: return synclust::Model::extensive_kuramoto;
        case SYNCLUST_MODEL_OV: return synclust::Model::original_vicsek;
        default: return synclust::Model::linear_vicsek;
    }
}

synclust_report* finish_report(synclust::ReportDoc doc) {
    auto* report = new synclust_report;
    report->doc = std::move(doc);
    report->labels.assign(report->doc.labels.begin(), report->doc.labels.end());
    if (report->doc.active_counts)
        report->active_counts.assign(report->doc.active_counts->begin(),
                                     report->doc.active_counts->end());
    return report;
}

synclust::ReportDoc run_dispatch(const synclust_dataset* ds, const synclust_run_config* cfg) {
    using namespace synclust;
    const StateVector& data = ds->points;

    RunOptions opts;
    opts.model = to_model(cfg->model);
    opts.max_iters = cfg->max_iters;
    opts.conv_tol = cfg->conv_tol;
    opts.epsilon_cluster = cfg->epsilon;
    std::string snapshot_dir = cfg->snapshot_dir ? cfg->snapshot_dir : "";
    if (!snapshot_dir.empty())
        opts.snapshot_sink = [snapshot_dir](int step, const StateVector& s) {
            write_snapshot_csv(snapshot_dir, step, s);
        };

    ModelParams params;
    params.delta = cfg->delta;
    params.v_dt = cfg->v_dt;

    ReportMeta meta;
    meta.delta = cfg->delta;
    meta.epsilon = cfg->epsilon;
    meta.seed = cfg->seed;

    switch (cfg->algo) {
        case SYNCLUST_ALGO_ESYNC: {
            meta.algo = "esync";
            meta.model = model_name(cfg->model);
            return make_report_doc(meta, esync_run(data, params, opts));
        }
        case SYNCLUST_ALGO_IESYNC: {
            if (!cfg->grid_r || cfg->grid_r_len < 1)
                throw InvalidInput("iesync requires grid cell lengths (grid_r)");
            std::vector<double> r;
            if (cfg->grid_r_len == 1)
                r.assign(data.dim(), cfg->grid_r[0]);
            else if (cfg->grid_r_len == data.dim())
                r.assign(cfg->grid_r, cfg->grid_r + cfg->grid_r_len);
            else
                throw InvalidInput("iesync: grid_r needs one value or one per dimension");
            if (cfg->model != SYNCLUST_MODEL_LV)
                throw InvalidInput("iesync runs the linear-vicsek model only");
            meta.algo = "iesync";
            meta.model = "lv";
            meta.grid_r = r;
            GridSpec spec = GridSpec::cover(data, r);
            return make_report_doc(meta, iesync_run(data, params, opts, spec));
        }
        case SYNCLUST_ALGO_SSYNC: {
            meta.algo = "ssync";
            meta.model = "lv";
            return make_report_doc(meta, ssync_run(data, cfg->delta, cfg->epsilon, cfg->max_iters));
        }
        case SYNCLUST_ALGO_MSYNC: {
            if (cfg->m < 1) throw InvalidInput("msync requires m >= 1");
            meta.algo = "msync";
            meta.model = "lv";
            meta.m = cfg->m;
            return make_report_doc(
                meta, msync_run(data, cfg->delta, cfg->m, cfg->epsilon, cfg->seed, cfg->max_iters));
        }
        case SYNCLUST_ALGO_DBSCAN: {
            meta.algo = "dbscan";
            DbscanParams dp{cfg->delta, cfg->dbscan_min_pts};
            auto result = dbscan(data, dp);
            // The neighbor pass evaluates each unordered pair exactly once.
            const std::uint64_t evals =
                static_cast<std::uint64_t>(data.size()) * (data.size() - 1) / 2;
            return make_report_doc(meta, data, result.labels, evals);
        }
        case SYNCLUST_ALGO_KMEANS: {
            if (cfg->kmeans_k < 1) throw InvalidInput("kmeans requires k >= 1");
            meta.algo = "kmeans";
            auto labels = kmeans(data, cfg->kmeans_k, cfg->seed, cfg->max_iters);
            std::vector<int> raw(labels.labels.begin(), labels.labels.end());
            return make_report_doc(meta, data, raw, 0);
        }
    }
    throw InvalidInput("unknown algorithm");
}

}  // namespace

extern "C" {

const char* synclust_version(void) { return "1.0.0"; }

const char* synclust_last_error(void) { return g_last_error.c_str(); }

void synclust_gen_spec_init(synclust_gen_spec* spec) {
    if (!spec) return;
    synclust::GenSpec defaults;
    spec->num_clusters = defaults.num_clusters;
    spec->with_noise = defaults.with_noise ? 1 : 0;
    spec->semidiameter = defaults.semidiameter;
    spec->dim = defaults.dim;
    spec->n = defaults.n;
    spec->region_min = defaults.region_min;
    spec->region_max = defaults.region_max;
    spec->noise_fraction = defaults.noise_fraction;
    spec->min_center_gap = defaults.min_center_gap;
    spec->seed = defaults.seed;
}

synclust_status synclust_gen_spec_preset(const char* name, synclust_gen_spec* spec) {
    return guarded([&]() -> synclust_status {
        if (!name || !spec) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        auto preset = synclust::preset_spec(name);
        if (!preset)
            return set_error(SYNCLUST_ERR_INVALID,
                             std::string("unknown preset '") + name + "' (expected ds1..ds12)");
        spec->num_clusters = preset->num_clusters;
        spec->with_noise = preset->with_noise ? 1 : 0;
        spec->semidiameter = preset->semidiameter;
        spec->dim = preset->dim;
        return SYNCLUST_OK;
    });
}

synclust_status synclust_dataset_create(const double* coords, int32_t n, int32_t dim,
                                        synclust_dataset** out) {
    return guarded([&]() -> synclust_status {
        if (!coords || !out) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        synclust::StateVector state(n, dim);
        std::copy(coords, coords + static_cast<std::size_t>(n) * dim, state.data_mut().begin());
        auto* ds = new synclust_dataset;
        ds->points = std::move(state);
        *out = ds;
        return SYNCLUST_OK;
    });
}

synclust_status synclust_dataset_generate(const synclust_gen_spec* spec, synclust_dataset** out) {
    return guarded([&]() -> synclust_status {
        if (!spec || !out) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        synclust::GenSpec gs;
        gs.num_clusters = spec->num_clusters;
        gs.with_noise = spec->with_noise != 0;
        gs.semidiameter = spec->semidiameter;
        gs.dim = spec->dim;
        gs.n = spec->n;
        gs.region_min = spec->region_min;
        gs.region_max = spec->region_max;
        gs.noise_fraction = spec->noise_fraction;
        gs.min_center_gap = spec->min_center_gap;
        gs.seed = spec->seed;
        auto data = synclust::generate_dataset(gs);
        auto* ds = new synclust_dataset;
        ds->points = std::move(data.points);
        ds->truth = std::move(data.truth);
        ds->has_truth = true;
        *out = ds;
        return SYNCLUST_OK;
    });
}

synclust_status synclust_dataset_load_csv(const char* path, synclust_dataset** out) {
    return guarded([&]() -> synclust_status {
        if (!path || !out) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        auto* ds = new synclust_dataset;
        try {
            ds->points = synclust::read_points_csv(path);
        } catch (...) {
            delete ds;
            throw;
        }
        *out = ds;
        return SYNCLUST_OK;
    });
}

synclust_status synclust_dataset_save_csv(const synclust_dataset* ds, const char* path) {
    return guarded([&]() -> synclust_status {
        if (!ds || !path) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        synclust::write_points_csv(path, ds->points);
        return SYNCLUST_OK;
    });
}

synclust_status synclust_dataset_save_truth_csv(const synclust_dataset* ds, const char* path) {
    return guarded([&]() -> synclust_status {
        if (!ds || !path) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        if (!ds->has_truth)
            return set_error(SYNCLUST_ERR_INVALID, "dataset carries no ground-truth labels");
        synclust::write_labels_csv(path, ds->truth);
        return SYNCLUST_OK;
    });
}

int32_t synclust_dataset_size(const synclust_dataset* ds) { return ds ? ds->points.size() : 0; }

int32_t synclust_dataset_dim(const synclust_dataset* ds) { return ds ? ds->points.dim() : 0; }

const double* synclust_dataset_coords(const synclust_dataset* ds) {
    return ds ? ds->points.data().data() : nullptr;
}

const int32_t* synclust_dataset_truth(const synclust_dataset* ds) {
    return (ds && ds->has_truth) ? ds->truth.data() : nullptr;
}

void synclust_dataset_free(synclust_dataset* ds) { delete ds; }

void synclust_run_config_init(synclust_run_config* config) {
    if (!config) return;
    std::memset(config, 0, sizeof(*config));
    config->algo = SYNCLUST_ALGO_ESYNC;
    config->model = SYNCLUST_MODEL_LV;
    config->delta = 18.0;
    config->epsilon = 1e-5;
    config->conv_tol = 1e-6;
    config->v_dt = 1.0;
    config->m = 1;
    config->max_iters = 50;
    config->kmeans_k = 1;
    config->dbscan_min_pts = 4;
    config->seed = 1;
}

synclust_status synclust_run(const synclust_dataset* ds, const synclust_run_config* config,
                             synclust_report** out) {
    return guarded([&]() -> synclust_status {
        if (!ds || !config || !out) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        *out = finish_report(run_dispatch(ds, config));
        return SYNCLUST_OK;
    });
}

synclust_status synclust_sweep(const synclust_dataset* ds, const synclust_run_config* config,
                               const double* deltas, int32_t count, int32_t* clusters_out,
                               int32_t* iterations_out) {
    return guarded([&]() -> synclust_status {
        if (!ds || !config || !deltas || count < 1 || !clusters_out || !iterations_out)
            return set_error(SYNCLUST_ERR_INVALID, "null argument");
        synclust_run_config cfg = *config;
        cfg.snapshot_dir = nullptr;
        for (int32_t i = 0; i < count; ++i) {
            if (deltas[i] <= 0.0 || (i > 0 && deltas[i] < deltas[i - 1]))
                return set_error(SYNCLUST_ERR_INVALID, "sweep deltas must be positive and ascending");
            cfg.delta = deltas[i];
            auto doc = run_dispatch(ds, &cfg);
            clusters_out[i] = static_cast<int32_t>(doc.clusters.size());
            iterations_out[i] = doc.iterations;
        }
        return SYNCLUST_OK;
    });
}

int32_t synclust_report_iterations(const synclust_report* report) {
    return report ? report->doc.iterations : 0;
}

int32_t synclust_report_converged(const synclust_report* report) {
    return (report && report->doc.converged) ? 1 : 0;
}

int32_t synclust_report_cluster_count(const synclust_report* report) {
    return report ? static_cast<int32_t>(report->doc.clusters.size()) : 0;
}

const int32_t* synclust_report_labels(const synclust_report* report) {
    return report ? report->labels.data() : nullptr;
}

uint64_t synclust_report_distance_evals(const synclust_report* report) {
    return report ? report->doc.distance_evals : 0;
}

const int32_t* synclust_report_active_counts(const synclust_report* report, int32_t* len) {
    if (!report || report->active_counts.empty()) {
        if (len) *len = 0;
        return nullptr;
    }
    if (len) *len = static_cast<int32_t>(report->active_counts.size());
    return report->active_counts.data();
}

synclust_status synclust_report_to_json(const synclust_report* report, char** out) {
    return guarded([&]() -> synclust_status {
        if (!report || !out) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        std::string text = synclust::report_to_json(report->doc);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) return set_error(SYNCLUST_ERR_INTERNAL, "out of memory");
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
        return SYNCLUST_OK;
    });
}

synclust_status synclust_report_save_json(const synclust_report* report, const char* path) {
    return guarded([&]() -> synclust_status {
        if (!report || !path) return set_error(SYNCLUST_ERR_INVALID, "null argument");
        synclust::write_report_json(path, report->doc);
        return SYNCLUST_OK;
    });
}

void synclust_report_free(synclust_report* report) { delete report; }

void synclust_string_free(char* text) { std::free(text); }

synclust_status synclust_delta_bounds(const synclust_dataset* ds, double* delta_min,
                                      double* mst_max_edge, double* max_pairwise) {
    return guarded([&]() -> synclust_status {
        if (!ds || !delta_min || !mst_max_edge || !max_pairwise)
            return set_error(SYNCLUST_ERR_INVALID, "null argument");
        auto bounds = synclust::delta_bounds(ds->points);
        *delta_min = bounds.delta_min;
        *mst_max_edge = bounds.e_max_mst;
        *max_pairwise = bounds.max_pairwise;
        return SYNCLUST_OK;
    });
}

synclust_status synclust_recovery_interval(const synclust_dataset* ds, double* lo, double* hi,
                                            int32_t* nonempty) {
    return guarded([&]() -> synclust_status {
        if (!ds || !lo || !hi || !nonempty)
            return set_error(SYNCLUST_ERR_INVALID, "null argument");
        if (!ds->has_truth)
            return set_error(SYNCLUST_ERR_INVALID, "dataset carries no ground-truth labels");
        synclust::LabeledDataSet labeled;
        labeled.points = ds->points;
        labeled.truth = ds->truth;
        auto interval = synclust::recovery_interval(labeled);
        *lo = interval.lo;
        *hi = interval.hi;
        *nonempty = interval.empty ? 0 : 1;
        return SYNCLUST_OK;
    });
}

}  // extern "C"
