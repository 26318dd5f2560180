#pragma once

#include "cubezeta/lattice.hpp"
#include "cubezeta/polydet.hpp"

// Independent brute-force verifiers: the bipartite incidence graph B_H of the
// hypergraph ((d-1)-cubes, d-cubes), its Bass determinant zeta, trace-based
// non-backtracking walk counts, a small DFS enumerator, and the
// logarithmic-derivative cycle-count series.

namespace cubezeta {

struct BipartiteIncidence {
    LatticeSpec spec;
    u64 d = 1;
    u64 num_v = 0;  // (d-1)-cubes
    u64 num_e = 0;  // d-cubes
    std::vector<std::vector<unsigned char>> adj;  // num_v x num_e, 0/1

    u64 incidence_count() const;
    // chi of the bipartite graph: (num_v + num_e) - #incidences
    i64 euler_characteristic() const;
};

// explicit incidence over all cubes (sigma, v); refuses |Y_{d-1}| + |Y_d| > 5000
// and hypervertices of degree < 2
BipartiteIncidence build_bh(const LatticeSpec& spec, u64 d);

// 1/zeta via (1-u)^{-chi(B_H)} det(I - vA + v^2 Q) with v^2 = u, all exact
IntPoly bass_zeta(const LatticeSpec& spec, u64 d);

// N_m = trace(T^{2m})/2 on B_H's non-backtracking operator, m = 1..mmax;
// based oriented closed geodesics of hypergraph length m
std::vector<mpz_class> geodesic_counts(const LatticeSpec& spec, u64 d, u64 mmax);

// third, independent check: explicit depth-first walk enumeration (mmax <= 6)
std::vector<mpz_class> dfs_geodesic_counts(const LatticeSpec& spec, u64 d, u64 mmax);

// coefficients N_m of u (log zeta)'(u) = sum N_m u^m from 1/zeta; requires
// zinv(0) = 1
std::vector<mpz_class> log_derivative_series(const IntPoly& zinv, u64 mmax);

}  // namespace cubezeta
