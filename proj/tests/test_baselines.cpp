#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "synclust/baselines.hpp"
#include "synclust/datagen.hpp"
#include "synclust/esync.hpp"
#include "test_util.hpp"

using namespace synclust;

TEST_CASE("dbscan: too few mutual neighbors means everything is noise") {
    StateVector s = StateVector::from_rows({{0, 0}, {1, 0}, {0, 1}});
    DbscanResult r = dbscan(s, {.eps = 3.0, .min_pts = 4});
    CHECK(r.cluster_count == 0);
    for (int label : r.labels) CHECK(label == -1);
}

TEST_CASE("dbscan: five coincident points form one cluster at any positive eps") {
    StateVector s = StateVector::from_rows({{2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}});
    DbscanResult r = dbscan(s, {.eps = 0.001, .min_pts = 4});
    CHECK(r.cluster_count == 1);
    for (int label : r.labels) CHECK(label == 0);
}

TEST_CASE("dbscan: blob data matches the synchronization partition on non-noise points") {
    GenSpec spec;
    spec.num_clusters = 5;
    spec.semidiameter = 50;
    spec.n = 400;
    spec.seed = 20;
    LabeledDataSet data = generate_dataset(spec);

    DbscanResult db = dbscan(data.points, {.eps = 18.0, .min_pts = 4});
    CHECK(db.cluster_count == 5);

    RunReport sync = esync_run(data.points, {.delta = 18.0}, {});
    // Same-cluster relations must agree wherever dbscan assigned a cluster.
    for (Index a = 0; a < data.points.size(); ++a) {
        for (Index b = a + 1; b < data.points.size(); ++b) {
            if (db.labels[a] < 0 || db.labels[b] < 0) continue;
            CHECK((db.labels[a] == db.labels[b]) ==
                  (sync.labels.labels[a] == sync.labels.labels[b]));
        }
    }
}

TEST_CASE("dbscan: core and noise status ignore the input order") {
    std::mt19937 rng(73);
    GenSpec spec;
    spec.num_clusters = 3;
    spec.with_noise = true;
    spec.n = 150;
    spec.seed = 21;
    LabeledDataSet data = generate_dataset(spec);
    DbscanResult base = dbscan(data.points, {.eps = 18.0, .min_pts = 4});

    std::vector<Index> perm(data.points.size());
    std::iota(perm.begin(), perm.end(), Index{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    StateVector shuffled(data.points.size(), data.points.dim());
    for (Index i = 0; i < data.points.size(); ++i) {
        auto src = data.points.point(perm[i]);
        std::copy(src.begin(), src.end(), shuffled.point_mut(i).begin());
    }
    DbscanResult mixed = dbscan(shuffled, {.eps = 18.0, .min_pts = 4});
    CHECK(mixed.cluster_count == base.cluster_count);
    for (Index i = 0; i < data.points.size(); ++i)
        CHECK((mixed.labels[i] == -1) == (base.labels[perm[i]] == -1));
}

TEST_CASE("kmeans: k=1 returns the mean, k=n isolates every distinct point") {
    std::mt19937 rng(79);
    StateVector s = testutil::random_state(rng, 30, 2, 0, 50);
    ClusterLabels one = kmeans(s, 1, 5);
    CHECK(one.cluster_count() == 1);
    auto mean = testutil::kahan_mean(s);
    CHECK(one.centers[0][0] == doctest::Approx(mean[0]).epsilon(1e-10));
    CHECK(one.centers[0][1] == doctest::Approx(mean[1]).epsilon(1e-10));

    ClusterLabels all = kmeans(s, s.size(), 5);
    std::vector<int> sizes(s.size(), 0);
    for (Index label : all.labels) ++sizes[label];
    for (int size : sizes) CHECK(size == 1);
    for (Index i = 0; i < s.size(); ++i)
        CHECK(testutil::oracle_distance(s.point(i), all.centers[all.labels[i]]) == 0.0);
}

TEST_CASE("kmeans: well-separated blobs are recovered by the best of ten seeds") {
    GenSpec spec;
    spec.num_clusters = 5;
    spec.semidiameter = 50;
    spec.n = 400;
    spec.seed = 22;
    LabeledDataSet data = generate_dataset(spec);

    bool recovered = false;
    for (std::uint64_t seed = 1; seed <= 10 && !recovered; ++seed) {
        ClusterLabels labels = kmeans(data.points, 5, seed);
        recovered = testutil::canonical_partition(std::span<const Index>(labels.labels)) ==
                    testutil::canonical_partition(std::span<const int>(data.truth));
    }
    CHECK(recovered);
}

TEST_CASE("kmeans: deterministic under the seed; cost never increases with more iterations") {
    GenSpec spec;
    spec.num_clusters = 4;
    spec.n = 120;
    spec.seed = 23;
    LabeledDataSet data = generate_dataset(spec);

    ClusterLabels a = kmeans(data.points, 4, 9);
    ClusterLabels b = kmeans(data.points, 4, 9);
    CHECK(a.labels == b.labels);

    auto cost = [&](const ClusterLabels& labels) {
        double total = 0.0;
        for (Index i = 0; i < data.points.size(); ++i) {
            double d = testutil::oracle_distance(data.points.point(i),
                                                 labels.centers[labels.labels[i]]);
            total += d * d;
        }
        return total;
    };
    double prev = std::numeric_limits<double>::infinity();
    for (int iters = 1; iters <= 8; ++iters) {
        double c = cost(kmeans(data.points, 4, 9, iters));
        CHECK(c <= prev + 1e-9);
        prev = c;
    }
}
