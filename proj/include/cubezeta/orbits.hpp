#pragma once

#include <stdexcept>
#include <vector>

#include "cubezeta/numtheory.hpp"

// Galois action of (Z/N'Z)^x on J_{d1} x ... x J_{dq}: orbit decomposition,
// the closed-form orbit count, the gcd-graph, and the q=2 orbit families.

namespace cubezeta {

struct DVec {
    std::vector<u64> entries;  // (d1, ..., dq), each >= 1

    DVec() = default;
    explicit DVec(std::vector<u64> d);
    std::size_t q() const { return entries.size(); }
    u64 product() const;      // N = d1 * ... * dq
    u64 lcm() const;          // N' = lcm(d1, ..., dq)
    u64 degree_bound() const; // prod phi_tilde(di)
};

struct GcdGraph {
    std::vector<std::size_t> vertices;                // indices i with d_i >= 3
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // gcd(d_i,d_j) >= 3
    std::vector<std::vector<std::size_t>> components;
    std::size_t betti0() const { return components.size(); }
    std::size_t reduced_betti0() const {
        return components.empty() ? 0 : components.size() - 1;
    }
};

using JTuple = std::vector<u64>;  // one element of J_{d1} x ... x J_{dq}

struct OrbitDecomposition {
    DVec dvec;
    std::vector<std::vector<JTuple>> orbits;  // each sorted lexicographically
    std::vector<JTuple> representatives;      // lexicographic minimum per orbit
};

struct SubgroupH {
    DVec dvec;
    std::vector<u64> elements;  // subset of unit_group(N')
};

struct IotaOrbitReport {
    u64 m = 0;
    u64 invariant_orbit_count = 0;  // brute-force count over (m,m)
    u64 formula_a = 0;              // 2^{f1+f2+f3-1}
    unsigned f1 = 0, f2 = 0, f3 = 0;
    bool formula_applicable = false;  // false when phi_tilde(m) is odd
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// resource bound on prod phi_tilde(di) for decompositions, overridable via
// the CUBEZETA_MAX_DEGREE environment variable
u64 orbit_size_bound();

GcdGraph gcd_graph(const DVec& d);

// componentwise action with fold into J_{di}
JTuple act(const DVec& d, u64 a, const JTuple& t);

OrbitDecomposition orbit_decompose(const DVec& d);

u64 orb_count_formula(const DVec& d);

SubgroupH subgroup_h(const DVec& d);  // requires all d_i >= 3

IotaOrbitReport iota_orbit_analysis(u64 m);

// complete orbit representatives for the q=2 families (m,2m), (m,m) and
// phi_tilde(d2)=2; throws std::domain_error outside all three families
std::vector<JTuple> q2_family_representatives(u64 d1, u64 d2);

}  // namespace cubezeta
