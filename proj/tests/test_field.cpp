#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lpp/field.hpp"
#include "lpp/oracle.hpp"

using namespace lpp;

namespace {

// omega(0,0)=1, omega(1,0)=2, omega(0,1)=3, omega(1,1)=1
TimeGrid fixture_2x2() {
    return TimeGrid::from_rows({{1.0, 2.0}, {3.0, 1.0}});
}

double g_at(const PassageField& f, Site z) {
    const int k = static_cast<int>(z.l1());
    return f.diagonal(k)[static_cast<std::size_t>(z.x - f.diagonal_xmin(k))];
}

}  // namespace

TEST_CASE("2x2 fixture: hand DP values and parent choice") {
    const PassageField f = compute_field(TimeSource(fixture_2x2(), EnvSpec{1, 1.0}), 2,
                                         FieldOptions{GridMode::Square, 2, 1});
    CHECK(g_at(f, {0, 0}) == 1.0);
    CHECK(g_at(f, {1, 0}) == 3.0);
    CHECK(g_at(f, {0, 1}) == 4.0);
    CHECK(g_at(f, {1, 1}) == 5.0);
    // parent of (1,1) is (0,1): G(z-(0,1)) = 3 < G(z-(1,0)) = 4 -> bit 0
    CHECK_FALSE(f.parent_bit({1, 1}));
}

TEST_CASE("axis values are prefix sums of axis times") {
    const EnvSpec spec{42, 1.0};
    const PassageField f = compute_field(spec, 12, 12);
    double sum = 0.0;
    for (int k = 0; k <= 12; ++k) {
        sum += sample_time(spec, {k, 0});
        CHECK(g_at(f, {k, 0}) == doctest::Approx(sum).epsilon(1e-15));
        if (k > 0) CHECK_FALSE(f.parent_bit({k, 0}));
    }
    sum = 0.0;
    for (int k = 0; k <= 12; ++k) {
        sum += sample_time(spec, {0, k});
        CHECK(g_at(f, {0, k}) == doctest::Approx(sum).epsilon(1e-15));
        if (k > 0) CHECK(f.parent_bit({0, k}));
    }
}

TEST_CASE("brute force enumerates C(x+y,x) paths; fixture agrees") {
    const auto res = brute_force_g(fixture_2x2());
    CHECK(res.g_at(0, 0) == 1.0);
    CHECK(res.g_at(1, 0) == 3.0);
    CHECK(res.g_at(0, 1) == 4.0);
    CHECK(res.g_at(1, 1) == 5.0);

    TimeGrid g3(3, 3);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) g3.set(x, y, 1.0);
    const auto res3 = brute_force_g(g3);
    CHECK(res3.paths_at(2, 2) == 6);  // C(4,2)
    CHECK(res3.paths_at(2, 1) == 3);
    CHECK(res3.max_paths_at(2, 2) == 6);  // constant grid: every path maximizes
}

TEST_CASE("brute force rejects grids larger than 8x8") {
    CHECK_THROWS_AS(brute_force_g(TimeGrid(9, 3)), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_g(TimeGrid(3, 9)), std::invalid_argument);
}

TEST_CASE("DP equals exhaustive-path oracle on random grids, 100 seeds") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const EnvSpec spec{seed, 1.0};
        TimeGrid grid(6, 6);
        for (int y = 0; y < 6; ++y)
            for (int x = 0; x < 6; ++x) grid.set(x, y, sample_time(spec, {x, y}));
        const auto oracle = brute_force_g(grid);
        const PassageField f = compute_field(spec, 5, 10, FieldOptions{GridMode::Square, 10, 1});
        for (int y = 0; y < 6; ++y) {
            for (int x = 0; x < 6; ++x) {
                const double got = g_at(f, {x, y});
                CHECK(got == doctest::Approx(oracle.g_at(x, y)).epsilon(1e-12));
                CHECK(oracle.max_paths_at(x, y) == 1);
            }
        }
    }
}

TEST_CASE("monotonicity: G strictly increases from parent to child") {
    const PassageField f = compute_field(EnvSpec{5, 1.0}, 24, 24);
    for (int k = 1; k <= 24; ++k) {
        for (int x = 0; x <= k; ++x) {
            const Site z{x, k - x};
            const Site parent = f.parent_bit(z) ? Site{z.x, z.y - 1} : Site{z.x - 1, z.y};
            CHECK(g_at(f, z) > g_at(f, parent));
        }
    }
}

TEST_CASE("power-of-two scaling keeps the parent map bit-identical") {
    for (std::uint64_t seed : {3ull, 17ull, 1234ull}) {
        const PassageField a = compute_field(EnvSpec{seed, 1.0}, 48, -1);
        const PassageField b = compute_field(EnvSpec{seed, 4.0}, 48, -1);
        CHECK(a.parents() == b.parents());
        CHECK(a.interface_x() == b.interface_x());
    }
}

TEST_CASE("worker count does not change the parent map") {
    const TimeSource ts(EnvSpec{99, 1.0});
    const PassageField one = compute_field(ts, 300, FieldOptions{GridMode::Diagonal, -1, 1});
    const PassageField four = compute_field(ts, 300, FieldOptions{GridMode::Diagonal, -1, 4});
    CHECK(one.parents() == four.parents());
    CHECK(one.far_wavefront().size() == four.far_wavefront().size());
    for (std::size_t i = 0; i < one.far_wavefront().size(); ++i)
        CHECK(one.far_wavefront()[i] == four.far_wavefront()[i]);

    const PassageField sq1 = compute_field(ts, 200, FieldOptions{GridMode::Square, -1, 1});
    const PassageField sq4 = compute_field(ts, 200, FieldOptions{GridMode::Square, -1, 4});
    CHECK(sq1.parents() == sq4.parents());
    CHECK(sq1.far_wavefront()[0] == sq4.far_wavefront()[0]);
}

TEST_CASE("diagonal vectors: fixture, identity, and Y_1") {
    const TimeSource ts(fixture_2x2(), EnvSpec{1, 1.0});
    const PassageField f = compute_field(ts, 2, FieldOptions{GridMode::Diagonal, 2, 1});
    const DiagonalVectors v = diagonal_vectors(f, 1);
    CHECK(v.g == std::vector<double>{3.0, 4.0});
    CHECK(v.x == std::vector<double>{2.0, 3.0});
    CHECK(v.y == std::vector<double>{1.0, 1.0});

    // G - X - Y == 0 exactly, for every retained diagonal of a random field
    const PassageField r = compute_field(EnvSpec{8, 1.0}, 20, 20);
    for (int m = 1; m <= 20; ++m) {
        const DiagonalVectors d = diagonal_vectors(r, m);
        for (int i = 0; i <= m; ++i)
            CHECK(d.g[static_cast<std::size_t>(i)] - d.x[static_cast<std::size_t>(i)] -
                      d.y[static_cast<std::size_t>(i)] ==
                  0.0);
    }
    // Y_1 = (omega(0,0), omega(0,0)) up to one rounding
    const DiagonalVectors d1 = diagonal_vectors(r, 1);
    const double w00 = sample_time(EnvSpec{8, 1.0}, {0, 0});
    CHECK(d1.y[0] == doctest::Approx(w00).epsilon(1e-14));
    CHECK(d1.y[1] == doctest::Approx(w00).epsilon(1e-14));
}

TEST_CASE("errors: keep_m > N, unkept diagonal, oversized parent map") {
    CHECK_THROWS_AS(compute_field(EnvSpec{1, 1.0}, 4, 5), std::invalid_argument);
    const PassageField f = compute_field(EnvSpec{1, 1.0}, 8, 2);
    CHECK_THROWS_WITH_AS(static_cast<void>(diagonal_vectors(f, 3)), "diagonal not kept",
                         std::out_of_range);
    CHECK_THROWS_AS(compute_field(EnvSpec{1, 1.0}, 400000, -1,
                                  FieldOptions{GridMode::Square, -1, 1}),
                    std::length_error);
}

TEST_CASE("square mode covers [0,N]^2 and far wavefront is the corner") {
    const PassageField f = compute_field(EnvSpec{21, 1.0}, 6, -1, FieldOptions{GridMode::Square, -1, 1});
    CHECK(f.contains({6, 6}));
    CHECK_FALSE(f.contains({7, 0}));
    CHECK(f.far_wavefront().size() == 1);
    CHECK(f.far_xmin() == 6);
    // cross-check the corner against the oracle
    TimeGrid grid(7, 7);
    for (int y = 0; y < 7; ++y)
        for (int x = 0; x < 7; ++x) grid.set(x, y, sample_time(EnvSpec{21, 1.0}, {x, y}));
    const auto oracle = brute_force_g(grid);
    CHECK(f.far_wavefront()[0] == doctest::Approx(oracle.g_at(6, 6)).epsilon(1e-12));
}
