#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cubezeta/numtheory.hpp>

#include <set>
#include <stdexcept>

using namespace cubezeta;

TEST_CASE("euler_phi pinned values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(25) == 20);
}

TEST_CASE("phi_tilde pinned values") {
    CHECK(phi_tilde(1) == 1);
    CHECK(phi_tilde(2) == 1);
    CHECK(phi_tilde(5) == 2);
    CHECK(phi_tilde(12) == 2);
}

TEST_CASE("j_set pinned values") {
    CHECK(j_set(5).members == std::vector<u64>{1, 2});
    CHECK(j_set(12).members == std::vector<u64>{1, 5});
    CHECK(j_set(1).members == std::vector<u64>{1});
    CHECK(j_set(2).members == std::vector<u64>{1});
}

TEST_CASE("mobius pinned values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(10) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("unit_group pinned values") {
    CHECK(unit_group(8).elements == std::vector<u64>{1, 3, 5, 7});
    CHECK(unit_group(25).elements.size() == 20);
    CHECK(unit_group(1).elements == std::vector<u64>{1});
}

TEST_CASE("domain errors on zero input") {
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);
    CHECK_THROWS_AS(phi_tilde(0), std::domain_error);
    CHECK_THROWS_AS(j_set(0), std::domain_error);
    CHECK_THROWS_AS(mobius(0), std::domain_error);
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("sum of euler_phi over divisors equals n") {
    for (u64 n = 1; n <= 10000; ++n) {
        u64 total = 0;
        for (u64 d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            total += euler_phi(d);
            if (d != n / d) total += euler_phi(n / d);
        }
        REQUIRE(total == n);
    }
}

TEST_CASE("sum of mobius over divisors is the unit indicator") {
    for (u64 n = 1; n <= 10000; ++n) {
        i64 total = 0;
        for (u64 d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            total += mobius(d);
            if (d != n / d) total += mobius(n / d);
        }
        REQUIRE(total == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("J_d and its mirror partition the coprime residues below d") {
    for (u64 d = 3; d <= 500; ++d) {
        auto js = j_set(d).members;
        CHECK(js.size() == phi_tilde(d));
        std::set<u64> both(js.begin(), js.end());
        REQUIRE(both.size() == js.size());
        for (u64 j : js) {
            CHECK(both.count(d - j) == 0);
            both.insert(d - j);
        }
        std::set<u64> coprime;
        for (u64 a : unit_group(d).elements)
            if (a < d) coprime.insert(a);
        CHECK(both == coprime);
    }
}

TEST_CASE("fold_into_j maps any coprime residue into the j-set") {
    for (u64 d : {u64{5}, u64{12}, u64{30}, u64{97}}) {
        auto js = j_set(d).members;
        std::set<u64> jset(js.begin(), js.end());
        for (u64 a : unit_group(d).elements) {
            u64 f = fold_into_j(a, d);
            CHECK(jset.count(f) == 1);
            CHECK((f == a % d || f == (d - a % d) % d));
        }
    }
}

TEST_CASE("factorize reconstructs the input") {
    for (u64 n : {u64{1}, u64{2}, u64{12}, u64{97}, u64{360}, u64{1024}, u64{9699690}}) {
        u64 prod = 1;
        for (auto [p, e] : factorize(n))
            for (unsigned i = 0; i < e; ++i) prod *= p;
        CHECK(prod == n);
    }
}

TEST_CASE("gcd and lcm helpers") {
    CHECK(gcd_u64(12, 18) == 6);
    CHECK(lcm_u64(4, 6) == 12);
    CHECK(lcm_u64(5, 7) == 35);
    CHECK(gcd_u64(0, 5) == 5);
}
