#pragma once

#include "cubezeta/lattice.hpp"
#include "cubezeta/psi.hpp"

// Symbolic assembly of the reciprocal zeta polynomials: the closed product
// form, the codimension-one elementary-symmetric form, the general-d
// determinant form, the divisor-product factorization, and the Mahler
// quadrature for the thermodynamic limit.

namespace cubezeta {

// number of worker threads for per-character sweeps (default: all cores)
void set_thread_count(unsigned n);
unsigned thread_count();

struct PsiFactor {
    DVec dvec;
    u64 exponent = 1;   // 2^{#{d_i >= 3}}
    IntPoly psi;        // the univariate Psi polynomial in x
};

struct ZetaInverse {
    LatticeSpec spec;
    u64 d = 0;               // skeleton dimension
    IntPoly poly;            // 1/zeta as a polynomial in u
    std::vector<PsiFactor> factors;  // divisor-product form (top route only)
    // prefactor exponents, all fully multiplied into poly
    u64 exp_one_minus_u2 = 0;  // (1-u^2)^e
    u64 exp_one_minus_u = 0;   // (1-u)^{kappa |n|}
    i64 linear_b = 0;          // (1+bu)^e; b = beta_d (up form) or alpha_d (down form)
    i64 exp_one_plus_bu = 0;   // may be negative: an exactly cancelling denominator
};

// full lattice: (1-u^2)^{(q-1)|n|} prod_{dvec | n} Psi(1+(2q-1)u^2, u)^{eps}
ZetaInverse zeta_top(const LatticeSpec& spec);

// (q-1)-skeleton via the elementary-symmetric closed form, exact over
// Z[zeta_N'][u]; q >= 2
ZetaInverse zeta_codim1(const LatticeSpec& spec);

// d-skeleton via the determinant form, up or down according to the sign of
// gamma_d; 1 <= d <= q
ZetaInverse zeta_general_d(const LatticeSpec& spec, u64 d);

// int_{[0,1]^q} log(1 - 2u sum cos(2 pi t_i) + (2q-1)u^2) dt by midpoint
// quadrature with Richardson refinement; u = 1 admitted for q >= 2
double mahler_limit_integral(u64 q, double u);

// -log zeta_Y(u) / |n|, from the analytic product; converges to
// (q-1) log(1-u^2) + mahler_limit_integral(q, u)
double free_energy_check(const LatticeSpec& spec, double u);

}  // namespace cubezeta
