/*
 * synclust — synchronization-based clustering library.
 *
 * C interface to the point-synchronization engines (naive, grid-accelerated,
 * shrinking-core, multi-level), the reference clusterers, the synthetic blob
 * generator and the neighbor-radius estimators. All objects are opaque
 * handles; every fallible call returns a status code and leaves a message
 * retrievable through synclust_last_error() on failure.
 */

#ifndef SYNCLUST_H
#define SYNCLUST_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SYNCLUST_API __declspec(dllexport)
#else
#define SYNCLUST_API __attribute__((visibility("default")))
#endif

typedef enum synclust_status {
    SYNCLUST_OK = 0,
    SYNCLUST_ERR_INVALID = 1,    /* bad argument or inconsistent configuration */
    SYNCLUST_ERR_IO = 2,         /* file missing, unreadable or malformed */
    SYNCLUST_ERR_INFEASIBLE = 3, /* generator spec cannot be satisfied */
    SYNCLUST_ERR_INTERNAL = 4    /* invariant breach inside the library */
} synclust_status;

typedef struct synclust_dataset synclust_dataset;
typedef struct synclust_report synclust_report;

SYNCLUST_API const char* synclust_version(void);

/* Message describing the most recent failure on this thread. */
SYNCLUST_API const char* synclust_last_error(void);

/* ------------------------------------------------------------------ */
/* Datasets                                                            */

typedef struct synclust_gen_spec {
    int32_t num_clusters;
    int32_t with_noise;
    double semidiameter;
    int32_t dim;
    int32_t n;
    double region_min;
    double region_max;
    double noise_fraction; /* used only when with_noise */
    double min_center_gap; /* 0 = default: 2 * semidiameter + 40 */
    uint64_t seed;
} synclust_gen_spec;

SYNCLUST_API void synclust_gen_spec_init(synclust_gen_spec* spec);

/* Fill num_clusters / with_noise / semidiameter / dim from a named preset
 * (ds1 .. ds12); n and seed keep their current values. */
SYNCLUST_API synclust_status synclust_gen_spec_preset(const char* name, synclust_gen_spec* spec);

/* Copies n*dim row-major coordinates. */
SYNCLUST_API synclust_status synclust_dataset_create(const double* coords, int32_t n, int32_t dim,
                                                     synclust_dataset** out);
SYNCLUST_API synclust_status synclust_dataset_generate(const synclust_gen_spec* spec,
                                                       synclust_dataset** out);
SYNCLUST_API synclust_status synclust_dataset_load_csv(const char* path, synclust_dataset** out);
SYNCLUST_API synclust_status synclust_dataset_save_csv(const synclust_dataset* ds,
                                                       const char* path);
/* Ground-truth labels, one per line; fails when the dataset has none. */
SYNCLUST_API synclust_status synclust_dataset_save_truth_csv(const synclust_dataset* ds,
                                                             const char* path);

SYNCLUST_API int32_t synclust_dataset_size(const synclust_dataset* ds);
SYNCLUST_API int32_t synclust_dataset_dim(const synclust_dataset* ds);
SYNCLUST_API const double* synclust_dataset_coords(const synclust_dataset* ds);
/* NULL when the dataset carries no ground truth. -1 marks noise points. */
SYNCLUST_API const int32_t* synclust_dataset_truth(const synclust_dataset* ds);
SYNCLUST_API void synclust_dataset_free(synclust_dataset* ds);

/* ------------------------------------------------------------------ */
/* Runs                                                                */

typedef enum synclust_algo {
    SYNCLUST_ALGO_ESYNC = 0,
    SYNCLUST_ALGO_IESYNC = 1,
    SYNCLUST_ALGO_SSYNC = 2,
    SYNCLUST_ALGO_MSYNC = 3,
    SYNCLUST_ALGO_DBSCAN = 4,
    SYNCLUST_ALGO_KMEANS = 5
} synclust_algo;

typedef enum synclust_model {
    SYNCLUST_MODEL_LV = 0, /* linearized Vicsek averaging */
    SYNCLUST_MODEL_EK = 1, /* extensive Kuramoto coupling */
    SYNCLUST_MODEL_OV = 2  /* original Vicsek constant-speed heading */
} synclust_model;

typedef struct synclust_run_config {
    synclust_algo algo;
    synclust_model model; /* esync only; iesync always runs the LV model */
    double delta;         /* neighbor radius */
    double epsilon;       /* coincidence radius (default 1e-5) */
    double conv_tol;      /* mean-edge-length convergence threshold (default 1e-6) */
    double v_dt;          /* OV move length per step (default 1) */
    const double* grid_r; /* iesync: cell edge per dimension */
    int32_t grid_r_len;
    int32_t m;            /* msync: subsection count */
    int32_t max_iters;    /* default 50 */
    int32_t kmeans_k;
    int32_t dbscan_min_pts; /* default 4 */
    uint64_t seed;          /* msync partition / kmeans start */
    const char* snapshot_dir; /* when set, step_###.csv per applied step */
} synclust_run_config;

SYNCLUST_API void synclust_run_config_init(synclust_run_config* config);

SYNCLUST_API synclust_status synclust_run(const synclust_dataset* ds,
                                          const synclust_run_config* config,
                                          synclust_report** out);

/* One run per delta (ascending); writes cluster counts and iteration counts
 * into the caller's arrays. */
SYNCLUST_API synclust_status synclust_sweep(const synclust_dataset* ds,
                                            const synclust_run_config* config,
                                            const double* deltas, int32_t count,
                                            int32_t* clusters_out, int32_t* iterations_out);

/* ------------------------------------------------------------------ */
/* Reports                                                             */

SYNCLUST_API int32_t synclust_report_iterations(const synclust_report* report);
SYNCLUST_API int32_t synclust_report_converged(const synclust_report* report);
SYNCLUST_API int32_t synclust_report_cluster_count(const synclust_report* report);
/* One label per point; -1 only for dbscan noise. */
SYNCLUST_API const int32_t* synclust_report_labels(const synclust_report* report);
SYNCLUST_API uint64_t synclust_report_distance_evals(const synclust_report* report);
/* Active-core series for ssync/msync runs; NULL (len 0) otherwise. */
SYNCLUST_API const int32_t* synclust_report_active_counts(const synclust_report* report,
                                                          int32_t* len);
/* Serialized report; free with synclust_string_free. */
SYNCLUST_API synclust_status synclust_report_to_json(const synclust_report* report, char** out);
SYNCLUST_API synclust_status synclust_report_save_json(const synclust_report* report,
                                                       const char* path);
SYNCLUST_API void synclust_report_free(synclust_report* report);
SYNCLUST_API void synclust_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Neighbor-radius estimation                                          */

/* delta_min = smallest pairwise distance (= smallest spanning-tree edge),
 * mst_max_edge = largest spanning-tree edge, max_pairwise = diameter. */
SYNCLUST_API synclust_status synclust_delta_bounds(const synclust_dataset* ds, double* delta_min,
                                                   double* mst_max_edge, double* max_pairwise);

/* Open interval of radii that exactly recover the ground-truth clusters;
 * requires truth labels. *nonempty is 0 when the interval is empty. */
SYNCLUST_API synclust_status synclust_recovery_interval(const synclust_dataset* ds, double* lo,
                                                         double* hi, int32_t* nonempty);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYNCLUST_H */
