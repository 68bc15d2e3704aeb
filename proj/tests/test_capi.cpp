// Exercises the shared-library surface the CLI is built on: opaque handles,
// status codes, and the JSON report format.

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "synclust.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("synclust_capi_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

synclust_dataset* make_ds2(int n = 400, uint64_t seed = 1) {
    synclust_gen_spec spec;
    synclust_gen_spec_init(&spec);
    REQUIRE(synclust_gen_spec_preset("ds2", &spec) == SYNCLUST_OK);
    spec.n = n;
    spec.seed = seed;
    synclust_dataset* ds = nullptr;
    REQUIRE(synclust_dataset_generate(&spec, &ds) == SYNCLUST_OK);
    return ds;
}

}  // namespace

TEST_CASE("capi: version and error strings exist") {
    CHECK(synclust_version() != nullptr);
    CHECK(synclust_last_error() != nullptr);
}

TEST_CASE("capi: dataset creation, accessors and CSV round trip") {
    TempDir dir;
    const double coords[] = {0, 0, 6, 0, 300, 300};
    synclust_dataset* ds = nullptr;
    REQUIRE(synclust_dataset_create(coords, 3, 2, &ds) == SYNCLUST_OK);
    CHECK(synclust_dataset_size(ds) == 3);
    CHECK(synclust_dataset_dim(ds) == 2);
    CHECK(synclust_dataset_truth(ds) == nullptr);
    CHECK(std::memcmp(synclust_dataset_coords(ds), coords, sizeof(coords)) == 0);

    REQUIRE(synclust_dataset_save_csv(ds, dir.file("pts.csv").c_str()) == SYNCLUST_OK);
    CHECK(synclust_dataset_save_truth_csv(ds, dir.file("t.csv").c_str()) == SYNCLUST_ERR_INVALID);

    synclust_dataset* loaded = nullptr;
    REQUIRE(synclust_dataset_load_csv(dir.file("pts.csv").c_str(), &loaded) == SYNCLUST_OK);
    CHECK(synclust_dataset_size(loaded) == 3);
    CHECK(std::memcmp(synclust_dataset_coords(loaded), coords, sizeof(coords)) == 0);
    synclust_dataset_free(loaded);
    synclust_dataset_free(ds);
}

TEST_CASE("capi: IO failures produce status and message") {
    synclust_dataset* ds = nullptr;
    CHECK(synclust_dataset_load_csv("/nonexistent/nowhere.csv", &ds) == SYNCLUST_ERR_IO);
    CHECK(std::string(synclust_last_error()).find("nowhere.csv") != std::string::npos);
}

TEST_CASE("capi: generated preset runs through every algorithm") {
    synclust_dataset* ds = make_ds2();
    CHECK(synclust_dataset_truth(ds) != nullptr);

    synclust_run_config cfg;
    synclust_run_config_init(&cfg);
    cfg.kmeans_k = 5;
    const double grid_r = 20.0;
    cfg.grid_r = &grid_r;
    cfg.grid_r_len = 1;
    cfg.m = 4;

    for (synclust_algo algo : {SYNCLUST_ALGO_ESYNC, SYNCLUST_ALGO_IESYNC, SYNCLUST_ALGO_SSYNC,
                               SYNCLUST_ALGO_MSYNC, SYNCLUST_ALGO_DBSCAN, SYNCLUST_ALGO_KMEANS}) {
        CAPTURE(static_cast<int>(algo));
        cfg.algo = algo;
        synclust_report* report = nullptr;
        REQUIRE(synclust_run(ds, &cfg, &report) == SYNCLUST_OK);
        CHECK(synclust_report_cluster_count(report) == 5);
        CHECK(synclust_report_labels(report) != nullptr);
        if (algo == SYNCLUST_ALGO_SSYNC || algo == SYNCLUST_ALGO_MSYNC) {
            int32_t len = 0;
            const int32_t* counts = synclust_report_active_counts(report, &len);
            REQUIRE(counts != nullptr);
            CHECK(len >= 2);
            if (algo == SYNCLUST_ALGO_SSYNC) CHECK(counts[0] == 400);
        }
        synclust_report_free(report);
    }
    synclust_dataset_free(ds);
}

TEST_CASE("capi: config validation failures") {
    synclust_dataset* ds = make_ds2(100);
    synclust_run_config cfg;
    synclust_run_config_init(&cfg);

    cfg.algo = SYNCLUST_ALGO_IESYNC;  // no grid_r supplied
    synclust_report* report = nullptr;
    CHECK(synclust_run(ds, &cfg, &report) == SYNCLUST_ERR_INVALID);

    synclust_run_config_init(&cfg);
    cfg.algo = SYNCLUST_ALGO_KMEANS;
    cfg.kmeans_k = 0;
    CHECK(synclust_run(ds, &cfg, &report) == SYNCLUST_ERR_INVALID);

    synclust_gen_spec bad;
    synclust_gen_spec_init(&bad);
    bad.n = 0;
    synclust_dataset* out = nullptr;
    CHECK(synclust_dataset_generate(&bad, &out) == SYNCLUST_ERR_INVALID);

    CHECK(synclust_gen_spec_preset("ds99", &bad) == SYNCLUST_ERR_INVALID);
    synclust_dataset_free(ds);
}

TEST_CASE("capi: infeasible generator specs use their own status") {
    synclust_gen_spec spec;
    synclust_gen_spec_init(&spec);
    spec.num_clusters = 40;
    spec.semidiameter = 60;
    spec.n = 400;
    spec.min_center_gap = 500;
    synclust_dataset* ds = nullptr;
    CHECK(synclust_dataset_generate(&spec, &ds) == SYNCLUST_ERR_INFEASIBLE);
}

TEST_CASE("capi: json report carries the fixed fields and saves to disk") {
    TempDir dir;
    synclust_dataset* ds = make_ds2(200);
    synclust_run_config cfg;
    synclust_run_config_init(&cfg);
    synclust_report* report = nullptr;
    REQUIRE(synclust_run(ds, &cfg, &report) == SYNCLUST_OK);

    char* json = nullptr;
    REQUIRE(synclust_report_to_json(report, &json) == SYNCLUST_OK);
    std::string text(json);
    synclust_string_free(json);
    for (const char* field : {"\"algo\"", "\"params\"", "\"iterations\"", "\"converged\"",
                              "\"clusters\"", "\"per_iter\"", "\"counters\"", "\"labels\""})
        CHECK(text.find(field) != std::string::npos);
    CHECK(text.find("\"esync\"") != std::string::npos);

    REQUIRE(synclust_report_save_json(report, dir.file("r.json").c_str()) == SYNCLUST_OK);
    CHECK(fs::exists(dir.file("r.json")));

    CHECK(synclust_report_distance_evals(report) > 0);
    CHECK(synclust_report_converged(report) == 1);
    CHECK(synclust_report_iterations(report) >= 1);
    synclust_report_free(report);
    synclust_dataset_free(ds);
}

TEST_CASE("capi: sweep endpoints and validation") {
    synclust_dataset* ds = make_ds2(150, 3);
    synclust_run_config cfg;
    synclust_run_config_init(&cfg);

    const double deltas[] = {0.05, 900.0};
    int32_t clusters[2] = {0, 0};
    int32_t iterations[2] = {0, 0};
    REQUIRE(synclust_sweep(ds, &cfg, deltas, 2, clusters, iterations) == SYNCLUST_OK);
    CHECK(clusters[0] == 150);
    CHECK(clusters[1] == 1);

    const double bad[] = {5.0, 1.0};
    CHECK(synclust_sweep(ds, &cfg, bad, 2, clusters, iterations) == SYNCLUST_ERR_INVALID);
    synclust_dataset_free(ds);
}

TEST_CASE("capi: snapshots are written when requested") {
    TempDir dir;
    synclust_dataset* ds = make_ds2(60, 4);
    synclust_run_config cfg;
    synclust_run_config_init(&cfg);
    std::string snaps = dir.file("snaps");
    cfg.snapshot_dir = snaps.c_str();
    synclust_report* report = nullptr;
    REQUIRE(synclust_run(ds, &cfg, &report) == SYNCLUST_OK);
    CHECK(fs::exists(fs::path(snaps) / "step_000.csv"));
    CHECK(fs::exists(fs::path(snaps) / "step_001.csv"));
    synclust_report_free(report);
    synclust_dataset_free(ds);
}

TEST_CASE("capi: delta bounds and the recovery interval") {
    synclust_dataset* ds = make_ds2(300, 5);
    double dmin = 0, emax = 0, diam = 0;
    REQUIRE(synclust_delta_bounds(ds, &dmin, &emax, &diam) == SYNCLUST_OK);
    CHECK(dmin > 0);
    CHECK(dmin <= emax);
    CHECK(emax <= diam);

    double lo = 0, hi = 0;
    int32_t nonempty = 0;
    REQUIRE(synclust_recovery_interval(ds, &lo, &hi, &nonempty) == SYNCLUST_OK);
    CHECK(nonempty == 1);
    CHECK(lo < hi);

    // A dataset without truth cannot answer.
    const double coords[] = {0, 0, 1, 1};
    synclust_dataset* plain = nullptr;
    REQUIRE(synclust_dataset_create(coords, 2, 2, &plain) == SYNCLUST_OK);
    CHECK(synclust_recovery_interval(plain, &lo, &hi, &nonempty) == SYNCLUST_ERR_INVALID);
    synclust_dataset_free(plain);
    synclust_dataset_free(ds);
}
