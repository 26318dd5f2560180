#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cubezeta/orbits.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

using namespace cubezeta;

namespace {
DVec D(std::initializer_list<u64> ds) { return DVec(std::vector<u64>(ds)); }
}  // namespace

TEST_CASE("gcd_graph pinned values") {
    CHECK(gcd_graph(D({1, 2})).reduced_betti0() == 0);
    CHECK(gcd_graph(D({5, 7})).reduced_betti0() == 1);

    GcdGraph g = gcd_graph(D({6, 9, 4}));
    CHECK(g.vertices == std::vector<std::size_t>{0, 1, 2});
    CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK(g.reduced_betti0() == 1);
}

TEST_CASE("orbit_decompose pinned values") {
    auto od55 = orbit_decompose(D({5, 5}));
    REQUIRE(od55.orbits.size() == 2);
    std::set<std::vector<JTuple>> got(od55.orbits.begin(), od55.orbits.end());
    std::set<std::vector<JTuple>> want = {
        {JTuple{1, 1}, JTuple{2, 2}},
        {JTuple{1, 2}, JTuple{2, 1}},
    };
    CHECK(got == want);

    auto od35 = orbit_decompose(D({3, 5}));
    REQUIRE(od35.orbits.size() == 1);
    CHECK(od35.orbits[0].size() == 2);

    auto od12 = orbit_decompose(D({1, 2}));
    REQUIRE(od12.orbits.size() == 1);
    CHECK(od12.orbits[0] == std::vector<JTuple>{JTuple{1, 1}});
}

TEST_CASE("orb_count_formula pinned values") {
    CHECK(orb_count_formula(D({8, 12})) == 1);
    CHECK(orb_count_formula(D({7, 7, 7})) == 9);
    CHECK(orb_count_formula(D({9, 18})) == 3);
    CHECK(orb_count_formula(D({5, 5})) == 2);
    CHECK(orb_count_formula(D({1, 2})) == 1);
}

TEST_CASE("formula matches brute-force decomposition for q <= 3, d_i <= 12") {
    for (u64 d1 = 1; d1 <= 12; ++d1)
        for (u64 d2 = d1; d2 <= 12; ++d2) {
            DVec d = D({d1, d2});
            REQUIRE(orbit_decompose(d).orbits.size() == orb_count_formula(d));
        }
    for (u64 d1 = 1; d1 <= 8; ++d1)
        for (u64 d2 = d1; d2 <= 8; ++d2)
            for (u64 d3 = d2; d3 <= 8; ++d3) {
                DVec d = D({d1, d2, d3});
                REQUIRE(orbit_decompose(d).orbits.size() == orb_count_formula(d));
            }
}

TEST_CASE("q=2 orbit count equals phi_tilde(gcd)") {
    for (u64 d1 = 1; d1 <= 20; ++d1)
        for (u64 d2 = 1; d2 <= 20; ++d2)
            REQUIRE(orb_count_formula(D({d1, d2})) == phi_tilde(gcd_u64(d1, d2)));
}

TEST_CASE("equal-sided count is phi_tilde(d)^(q-1)") {
    for (u64 d = 1; d <= 20; ++d) {
        u64 pt = phi_tilde(d);
        CHECK(orb_count_formula(D({d, d})) == pt);
        CHECK(orb_count_formula(D({d, d, d})) == pt * pt);
    }
}

TEST_CASE("orbit sizes and invariance properties") {
    for (u64 d1 = 3; d1 <= 12; ++d1)
        for (u64 d2 = d1; d2 <= 12; ++d2) {
            DVec d = D({d1, d2});
            auto od = orbit_decompose(d);
            u64 expected = phi_tilde(d.lcm());
            for (std::size_t b = 0; b < gcd_graph(d).reduced_betti0(); ++b)
                expected /= 2;
            u64 total = 0;
            for (const auto& o : od.orbits) {
                // all d_i >= 3: every orbit has size phi_tilde(N')/2^{betti}
                REQUIRE(o.size() == expected);
                REQUIRE(std::is_sorted(o.begin(), o.end()));
                total += o.size();
            }
            REQUIRE(total == d.degree_bound());
        }
}

TEST_CASE("stripping entries equal to 1 or 2 preserves the orbit count") {
    for (u64 d1 = 3; d1 <= 15; ++d1)
        for (u64 d2 = d1; d2 <= 15; ++d2) {
            u64 base = orb_count_formula(D({d1, d2}));
            CHECK(orb_count_formula(D({1, d1, d2})) == base);
            CHECK(orb_count_formula(D({2, d1, d2})) == base);
        }
}

TEST_CASE("orbit count is invariant under permutation of the sides") {
    CHECK(orb_count_formula(D({4, 6, 9})) == orb_count_formula(D({9, 4, 6})));
    CHECK(orb_count_formula(D({5, 7, 5})) == orb_count_formula(D({5, 5, 7})));
}

TEST_CASE("pairwise coprime sides >= 3 give a single orbit") {
    CHECK(orbit_decompose(D({5, 7})).orbits.size() == 1);
    CHECK(orbit_decompose(D({3, 5, 7})).orbits.size() == 1);
    CHECK(orbit_decompose(D({4, 9, 5})).orbits.size() == 1);
}

TEST_CASE("subgroup_h pinned values") {
    CHECK(subgroup_h(D({5, 5})).elements == std::vector<u64>{1, 4});
    CHECK(subgroup_h(D({3, 5})).elements.size() == 4);
    CHECK(subgroup_h(D({9, 3})).elements.size() == 2);
}

TEST_CASE("iota analysis pinned values") {
    auto r5 = iota_orbit_analysis(5);
    CHECK(r5.invariant_orbit_count == 2);
    CHECK(r5.formula_applicable);
    CHECK(r5.formula_a == 2);
    auto r8 = iota_orbit_analysis(8);
    CHECK(r8.invariant_orbit_count == 2);
    auto r12 = iota_orbit_analysis(12);
    CHECK(r12.formula_a == 2);
}

TEST_CASE("q2_family_representatives pinned values") {
    std::set<JTuple> r77;
    for (auto& t : q2_family_representatives(7, 7)) r77.insert(t);
    CHECK(r77 == std::set<JTuple>{{1, 1}, {1, 2}, {1, 3}});

    auto r168 = q2_family_representatives(16, 8);
    CHECK(r168.size() == orb_count_formula(D({16, 8})));

    auto r75 = q2_family_representatives(7, 5);
    CHECK(r75.size() == 1);
}

TEST_CASE("q2 family representatives cover the decomposition exactly") {
    auto check_cover = [](u64 d1, u64 d2) {
        auto reps = q2_family_representatives(d1, d2);
        auto od = orbit_decompose(DVec({d1, d2}));
        REQUIRE(reps.size() == od.orbits.size());
        std::set<std::size_t> hit;
        for (const auto& rep : reps) {
            bool found = false;
            for (std::size_t i = 0; i < od.orbits.size(); ++i) {
                const auto& o = od.orbits[i];
                if (std::find(o.begin(), o.end(), rep) != o.end()) {
                    REQUIRE(hit.count(i) == 0);
                    hit.insert(i);
                    found = true;
                    break;
                }
            }
            REQUIRE(found);
        }
    };
    check_cover(7, 14);
    check_cover(9, 9);
    check_cover(12, 12);
    check_cover(16, 8);
    check_cover(11, 5);
}

TEST_CASE("resource bound raises ResourceError and honors the environment") {
    setenv("CUBEZETA_MAX_DEGREE", "10", 1);
    CHECK(orbit_size_bound() == 10);
    CHECK_THROWS_AS(orbit_decompose(D({31, 31})), ResourceError);
    unsetenv("CUBEZETA_MAX_DEGREE");
    CHECK(orbit_size_bound() == 1000000);
}
