#pragma once

#include "cubezeta/cyclotomic.hpp"
#include "cubezeta/orbits.hpp"

// Cyclotomic-like polynomials: the full-box polynomial with roots
// 2*sum_i cos(2*pi*j_i/d_i), its per-orbit factors, irreducible cores with
// multiplicities, the exact irreducibility test and the q=2 linear-case scan.

namespace cubezeta {

struct PsiPolynomial {
    DVec dvec;
    IntPoly poly;  // monic, degree prod phi_tilde(d_i)
};

struct OrbitPolynomial {
    DVec dvec;
    std::vector<JTuple> orbit;
    JTuple representative;
    IntPoly poly;      // prod over the orbit of (x - c(j))
    IntPoly irr_core;  // minimal polynomial of c(representative)
    u64 multiplicity = 1;        // poly == irr_core^multiplicity
    u64 distinct_values = 0;     // |c(orbit)|
};

// homogeneous form: coeffs[k] multiplies x^k y^{degree-k}
struct HomogeneousPsi {
    u64 degree = 0;
    std::vector<mpz_class> coeffs;
};

PsiPolynomial psi_multi(const DVec& dvec);
OrbitPolynomial psi_orbit(const DVec& dvec, const std::vector<JTuple>& orbit);

// injectivity of c on the orbit, equivalently multiplicity one; this is
// exactly irreducibility over Q
bool is_irreducible(const OrbitPolynomial& op);

// exact square root of the orbit polynomial of an iota-invariant,
// non-diagonal orbit of (m,m) other than O_{1,m/2-1}; phi_tilde(m) even
IntPoly half_polynomial(u64 m, const std::vector<JTuple>& orbit);

struct LinearCaseHit {
    u64 d1 = 0, d2 = 0;
    JTuple orbit_rep;
    IntPoly irr_core;  // degree one: x - lambda
    std::string family_tag;  // "integer-pair" | "mm-zero" | "m2m-zero" |
                             // "five-five" | "ten-ten" | "unclassified"
};

// all orbits of (d1,d2) whose irreducible core is linear
std::vector<LinearCaseHit> linear_case_classify(u64 d1, u64 d2);

struct LinearNecessaryReport {
    u64 g = 1, g1 = 1, g2 = 1, m1 = 1, m2 = 1;
    bool passes = false;
};

LinearNecessaryReport check_linear_necessary(u64 d1, u64 d2);

HomogeneousPsi homogenize(const PsiPolynomial& p);

// evaluate the homogeneous form at (x, y) = (subst, u), exactly
IntPoly homogeneous_eval(const HomogeneousPsi& h, const IntPoly& subst);

}  // namespace cubezeta
