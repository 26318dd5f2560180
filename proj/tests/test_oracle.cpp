#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cubezeta/oracle.hpp>
#include <cubezeta/zeta.hpp>

using namespace cubezeta;

namespace {
LatticeSpec L(std::initializer_list<u64> ns) { return LatticeSpec(std::vector<u64>(ns)); }
}  // namespace

TEST_CASE("bipartite incidence structure of the cycle graph") {
    auto bh = build_bh(L({5}), 1);
    CHECK(bh.num_v == 5);
    CHECK(bh.num_e == 5);
    CHECK(bh.incidence_count() == 10);
    CHECK(bh.euler_characteristic() == 0);
}

TEST_CASE("bipartite incidence degrees for the torus") {
    auto bh = build_bh(L({3, 3}), 1);
    CHECK(bh.num_v == 9);        // vertices
    CHECK(bh.num_e == 18);       // edges
    CHECK(bh.incidence_count() == 36);
    auto bh2 = build_bh(L({3, 3}), 2);
    CHECK(bh2.num_v == 18);      // edges
    CHECK(bh2.num_e == 9);       // squares, each with 4 sides
    CHECK(bh2.incidence_count() == 36);
}

TEST_CASE("Bass determinant matches the cycle-graph closed form") {
    for (u64 n : {u64{3}, u64{4}, u64{5}}) {
        IntPoly expected = (IntPoly::constant(1) - IntPoly::monomial(n)) *
                           (IntPoly::constant(1) - IntPoly::monomial(n));
        CHECK(bass_zeta(L({n}), 1) == expected);
    }
}

TEST_CASE("Bass determinant matches the symbolic routes on small tori") {
    for (auto spec : {L({2, 2}), L({2, 3}), L({3, 3})}) {
        CHECK(bass_zeta(spec, 1) == zeta_general_d(spec, 1).poly);
        CHECK(bass_zeta(spec, 2) == zeta_general_d(spec, 2).poly);
        CHECK(bass_zeta(spec, 2) == zeta_top(spec).poly);
    }
    CHECK(bass_zeta(L({2, 2, 2}), 2) == zeta_general_d(L({2, 2, 2}), 2).poly);
}

TEST_CASE("geodesic counts on the triangle") {
    // C_3 as a 1-dimensional lattice: two primitive oriented 3-cycles, so
    // N_3 = 6 based closed geodesics; no geodesics of length 1, 2, 4, 5
    auto counts = geodesic_counts(L({3}), 1, 6);
    REQUIRE(counts.size() == 6);
    CHECK(counts[0] == 0);
    CHECK(counts[1] == 0);
    CHECK(counts[2] == 6);
    CHECK(counts[3] == 0);
    CHECK(counts[4] == 0);
    CHECK(counts[5] == 6);  // double wrap of each orientation, all 3 base points
}

TEST_CASE("three independent geodesic counters agree") {
    for (auto spec : {L({2, 2}), L({3, 3})}) {
        for (u64 d : {u64{1}, u64{2}}) {
            auto traces = geodesic_counts(spec, d, 6);
            auto dfs = dfs_geodesic_counts(spec, d, 6);
            auto series = log_derivative_series(bass_zeta(spec, d), 6);
            REQUIRE(traces.size() == 6);
            REQUIRE(dfs.size() == 6);
            REQUIRE(series.size() == 6);
            for (std::size_t m = 0; m < 6; ++m) {
                CHECK(traces[m] == dfs[m]);
                CHECK(traces[m] == series[m]);
            }
        }
    }
}

TEST_CASE("log_derivative_series pinned: (1 - u^n)^2 counts the two orientations") {
    // u d/du log zeta = sum_m N_m u^m with N_m = 2n when n | m
    IntPoly zinv = (IntPoly::constant(1) - IntPoly::monomial(4)) *
                   (IntPoly::constant(1) - IntPoly::monomial(4));
    auto series = log_derivative_series(zinv, 9);
    for (std::size_t m = 1; m <= 9; ++m)
        CHECK(series[m - 1] == (m % 4 == 0 ? 8 : 0));
}

TEST_CASE("odd coefficients of the Bass variable vanish") {
    // indirect check: bass_zeta would throw if an odd-power coefficient of v
    // survived; also 1/zeta must be even-free only in the sense of v, so
    // evaluating both routes at u confirms stability
    CHECK(bass_zeta(L({2, 4}), 1) == zeta_general_d(L({2, 4}), 1).poly);
}

TEST_CASE("oracle resource and domain errors") {
    CHECK_THROWS_AS(build_bh(L({60, 60}), 1), ResourceError);
    CHECK_THROWS_AS(build_bh(L({3, 3}), 0), std::domain_error);
    CHECK_THROWS_AS(build_bh(L({3, 3}), 3), std::domain_error);
    CHECK_THROWS_AS(geodesic_counts(L({3}), 1, 13), ResourceError);
    CHECK_THROWS_AS(dfs_geodesic_counts(L({3}), 1, 7), ResourceError);
}
