#include <doctest.h>

#include <cmath>

#include "synclust/model.hpp"
#include "test_util.hpp"

using namespace synclust;
using testutil::oracle_distance;

TEST_CASE("euclidean distance basics") {
    StateVector s = StateVector::from_rows({{0, 0}, {3, 4}});
    CHECK(euclidean_distance(s, 0, 1) == 5.0);
    CHECK(euclidean_distance(s, 0, 0) == 0.0);
    CHECK(euclidean_distance(s, 1, 1) == 0.0);

    std::vector<double> a{1, 2};
    std::vector<double> b{1, 2, 3};
    CHECK_THROWS_AS(euclidean_distance(std::span<const double>(a), std::span<const double>(b)),
                    InvalidInput);
}

TEST_CASE("euclidean distance matches the scalar oracle in d=6") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        StateVector s = testutil::random_state(rng, 2, 6);
        double got = euclidean_distance(s, 0, 1);
        double want = oracle_distance(s.point(0), s.point(1));
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("delta neighbors: hand-computed 1-D case") {
    StateVector s = StateVector::from_rows({{0.0}, {10.0}, {25.0}});
    CHECK(delta_neighbors(s, 0, 12.0) == std::vector<Index>{1});
    CHECK(delta_neighbors(s, 1, 12.0) == std::vector<Index>{0});
    CHECK(delta_neighbors(s, 2, 12.0).empty());
}

TEST_CASE("delta neighbors: extreme radii") {
    std::mt19937 rng(7);
    StateVector s = testutil::random_state(rng, 30, 3);
    double lo = testutil::min_pairwise(s);
    double hi = testutil::max_pairwise(s);
    for (Index i = 0; i < s.size(); ++i) {
        CHECK(delta_neighbors(s, i, lo * 0.5).empty());
        CHECK(delta_neighbors(s, i, hi * 1.01).size() == static_cast<std::size_t>(s.size() - 1));
    }
}

TEST_CASE("delta neighbors: symmetry on random states") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        StateVector s = testutil::random_state(rng, 40, 2, 0, 100);
        double delta = 5.0 + 30.0 * (rep + 1);
        std::vector<std::vector<Index>> nb(s.size());
        for (Index i = 0; i < s.size(); ++i) nb[i] = delta_neighbors(s, i, delta);
        for (Index i = 0; i < s.size(); ++i)
            for (Index j : nb[i])
                CHECK(std::find(nb[j].begin(), nb[j].end(), i) != nb[j].end());
    }
}

TEST_CASE("lv update: two points within delta meet at the exact midpoint") {
    StateVector s = StateVector::from_rows({{0, 0}, {6, 0}});
    StateVector next = lv_update(s, {.delta = 18.0});
    CHECK(next.point(0)[0] == 3.0);
    CHECK(next.point(0)[1] == 0.0);
    CHECK(next.point(1)[0] == 3.0);
    CHECK(next.point(1)[1] == 0.0);
    CHECK(next.step() == 1);
}

TEST_CASE("lv update: far pair stays put") {
    StateVector s = StateVector::from_rows({{0, 0}, {100, 100}});
    StateVector next = lv_update(s, {.delta = 18.0});
    CHECK(next.same_coords(s));
}

TEST_CASE("lv update: complete triple collapses to the mean in one step") {
    StateVector s = StateVector::from_rows({{0, 0}, {6, 0}, {0, 6}});
    StateVector next = lv_update(s, {.delta = 100.0});
    for (Index i = 0; i < 3; ++i) {
        CHECK(next.point(i)[0] == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(next.point(i)[1] == doctest::Approx(2.0).epsilon(1e-15));
    }
}

TEST_CASE("lv update: fixed point when all distinct locations exceed delta") {
    StateVector s = StateVector::from_rows({{0, 0}, {50, 0}, {0, 50}, {80, 80}});
    StateVector next = lv_update(s, {.delta = 10.0});
    CHECK(next.same_coords(s));
}

TEST_CASE("lv update commutes with translation and rotation") {
    std::mt19937 rng(5);
    StateVector s = testutil::random_state(rng, 25, 2, 0, 60);
    const double delta = 15.0;
    StateVector moved = lv_update(s, {.delta = delta});

    const double tx = 13.25, ty = -4.5;
    const double theta = 0.7;
    const double c = std::cos(theta), sn = std::sin(theta);
    StateVector transformed(s.size(), 2);
    for (Index i = 0; i < s.size(); ++i) {
        double x = s.point(i)[0], y = s.point(i)[1];
        transformed.point_mut(i)[0] = c * x - sn * y + tx;
        transformed.point_mut(i)[1] = sn * x + c * y + ty;
    }
    StateVector moved_t = lv_update(transformed, {.delta = delta});
    for (Index i = 0; i < s.size(); ++i) {
        double x = moved.point(i)[0], y = moved.point(i)[1];
        CHECK(moved_t.point(i)[0] == doctest::Approx(c * x - sn * y + tx).epsilon(1e-10));
        CHECK(moved_t.point(i)[1] == doctest::Approx(sn * x + c * y + ty).epsilon(1e-10));
    }
}

TEST_CASE("lv update keeps an isolated clique inside its bounding box") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        StateVector s = testutil::random_state(rng, 8, 3, 0, 5);  // mutual neighbors at delta=20
        StateVector next = lv_update(s, {.delta = 20.0});
        for (int k = 0; k < 3; ++k) {
            double lo = 1e9, hi = -1e9;
            for (Index i = 0; i < s.size(); ++i) {
                lo = std::min(lo, s.point(i)[k]);
                hi = std::max(hi, s.point(i)[k]);
            }
            for (Index i = 0; i < s.size(); ++i) {
                CHECK(next.point(i)[k] >= lo - 1e-12);
                CHECK(next.point(i)[k] <= hi + 1e-12);
            }
        }
    }
}

TEST_CASE("ek update: frozen 1-D value") {
    StateVector s = StateVector::from_rows({{0.0}, {0.5}});
    StateVector next = ek_update(s, {.delta = 1.0});
    CHECK(next.point(0)[0] == doctest::Approx(0.479425538604203).epsilon(1e-12));
    CHECK(next.point(1)[0] == doctest::Approx(0.020574461395797).epsilon(1e-12));
}

TEST_CASE("ek update: isolates and coincident pairs stay put") {
    StateVector iso = StateVector::from_rows({{1, 2}, {200, 200}});
    CHECK(ek_update(iso, {.delta = 5.0}).same_coords(iso));

    StateVector co = StateVector::from_rows({{7, 7}, {7, 7}});
    CHECK(ek_update(co, {.delta = 5.0}).same_coords(co));
}

TEST_CASE("ov update: lone point keeps moving along its own direction") {
    StateVector s = StateVector::from_rows({{3, 4}});
    OvResult r = ov_update(s, {.delta = 5.0, .v_dt = 1.0});
    CHECK(r.degenerate.empty());
    CHECK(r.state.point(0)[0] == doctest::Approx(3.6).epsilon(1e-14));
    CHECK(r.state.point(0)[1] == doctest::Approx(4.8).epsilon(1e-14));
}

TEST_CASE("ov update: neighbor pulls the origin point one unit along x") {
    StateVector s = StateVector::from_rows({{0, 0}, {2, 0}});
    OvResult r = ov_update(s, {.delta = 5.0, .v_dt = 1.0});
    CHECK(r.state.point(0)[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.state.point(0)[1] == 0.0);
}

TEST_CASE("ov update: cancelled direction leaves the point flagged in place") {
    StateVector s = StateVector::from_rows({{1, 0}, {-1, 0}});
    OvResult r = ov_update(s, {.delta = 5.0, .v_dt = 1.0});
    CHECK(r.state.same_coords(s));
    CHECK(r.degenerate == std::vector<Index>{0, 1});
}

TEST_CASE("weighted core update with unit counts reproduces lv bit for bit") {
    std::mt19937 rng(21);
    StateVector s = testutil::random_state(rng, 30, 2, 0, 80);
    const double delta = 25.0;
    StateVector lv = lv_update(s, {.delta = delta});

    std::vector<Core> cores(s.size());
    for (Index i = 0; i < s.size(); ++i) {
        cores[i] = {i, {s.point(i)[0], s.point(i)[1]}, i, 1, true};
    }
    auto locations = weighted_core_update(cores, delta);
    for (Index i = 0; i < s.size(); ++i) {
        CHECK(locations[i][0] == lv.point(i)[0]);
        CHECK(locations[i][1] == lv.point(i)[1]);
    }
}

TEST_CASE("weighted core update: counts weight the meeting point") {
    std::vector<Core> cores{
        {0, {0.0}, 0, 3, true},
        {1, {4.0}, 1, 1, true},
    };
    auto locations = weighted_core_update(cores, 5.0);
    CHECK(locations[0][0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(locations[1][0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("weighted core update: a core with no neighbors keeps its location") {
    std::vector<Core> cores{
        {0, {0.0, 0.0}, 0, 5, true},
        {1, {100.0, 100.0}, 1, 2, true},
    };
    auto locations = weighted_core_update(cores, 5.0);
    CHECK(locations[0] == std::vector<double>{0.0, 0.0});
    CHECK(locations[1] == std::vector<double>{100.0, 100.0});
}
