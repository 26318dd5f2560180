#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cubezeta/cyclotomic.hpp"
#include "cubezeta/orbits.hpp"

// Combinatorics and spectra of the periodic q-cubical lattice: cube
// enumeration, twisted incidence/adjacency/Laplacian blocks per character,
// their closed-form eigenvalues, and the assembled untwisted matrices used
// as oracles for small sizes.

namespace cubezeta {

u64 binomial(u64 n, u64 k);

struct LatticeSpec {
    std::vector<u64> sides;  // (n_1, ..., n_q), each >= 2

    LatticeSpec() = default;
    explicit LatticeSpec(std::vector<u64> n);
    std::size_t q() const { return sides.size(); }
    u64 volume() const;  // |n| = prod n_i
};

// a character of Z_{n_1} x ... x Z_{n_q}; z_j = exp(2 pi i k_j / n_j)
struct Character {
    std::vector<u64> k;

    std::complex<double> z(const LatticeSpec& spec, std::size_t j) const;
};

// d-element subsets of {0,...,q-1} in lexicographic order (direction sets)
using Simplex = std::vector<std::size_t>;
std::vector<Simplex> simplices(std::size_t q, std::size_t d);

// (-1)^{j-1} where the removed vertex sits in the j-th position of eta
int simplex_sgn(const Simplex& eta, const Simplex& sigma);

u64 cube_count(const LatticeSpec& spec, u64 d);

using CMatrix = Eigen::MatrixXcd;

// M_d(z): C(q,d+1) x C(q,d), entry (1 + z_{eta minus sigma}) when sigma in eta;
// the dual carries z^{-1} and transposed shape
CMatrix twisted_incidence(const LatticeSpec& spec, u64 d, const Character& chi,
                          bool dual = false);

enum class Direction { up, down };

// A^up_d = M_d^* M_d (d <= q-1), A^down_d = M_{d-1} M_{d-1}^* (d >= 1)
CMatrix twisted_adjacency(const LatticeSpec& spec, u64 d, const Character& chi,
                          Direction dir);

// delta_d(z): C(q,d+1) x C(q,d), entry sgn(eta,sigma)(z_{eta minus sigma} - 1);
// dual transposed with z^{-1} - 1
CMatrix twisted_delta(const LatticeSpec& spec, u64 d, const Character& chi,
                      bool dual = false);

// L^up_d = delta_d^* delta_d (d <= q-1), L^down_d = delta_{d-1} delta_{d-1}^*
CMatrix twisted_laplacian(const LatticeSpec& spec, u64 d, const Character& chi,
                          Direction dir);

// the |n| eigenvalues sum_j 2(1 + cos(2 pi k_j / n_j)), ascending
std::vector<double> spectrum_adown_q(const LatticeSpec& spec);

// closed-form spectrum of the assembled L^up_d: 2q - 2 sum_i cos(2 pi k_i/n_i)
// with multiplicity C(q-1,d) per character, plus 0 with extra multiplicity
// C(q-1,d-1)|n|; ascending, equal values merged
std::vector<std::pair<double, u64>> laplacian_spectrum(const LatticeSpec& spec, u64 d);

// assembled untwisted incidence |Y_{d+1}| x |Y_d| over all cubes (sigma, v);
// refuses |Y_d| + |Y_{d+1}| > 5000
Eigen::MatrixXd assembled_incidence(const LatticeSpec& spec, u64 d);

// assembled untwisted adjacency (through the global incidence product)
Eigen::MatrixXd assembled_adjacency(const LatticeSpec& spec, u64 d, Direction dir);

// largest coefficient discrepancy between det(tI - u A^up_1(z)) and the
// elementary-symmetric closed form sum_k (2-k) 2^{k-1} e_k(w) (t - u e_1(w))^{q-k} u^k
double charpoly_aup1_discrepancy(const LatticeSpec& spec, const Character& chi, double u);

// exact A^up_d(z) over Z[zeta_N], z_i = zeta^{zexp[i]}; size C(q,d)
std::vector<std::vector<CycElem>> exact_adjacency_up(const CycRingPtr& ring, std::size_t q,
                                                     u64 d, const std::vector<u64>& zexp);

// exact A^down_d(z) over Z[zeta_N]; size C(q,d), d >= 1
std::vector<std::vector<CycElem>> exact_adjacency_down(const CycRingPtr& ring, std::size_t q,
                                                       u64 d, const std::vector<u64>& zexp);

}  // namespace cubezeta
