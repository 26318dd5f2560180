#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cubezeta/numtheory.hpp"

// Dense univariate polynomials over Z with arbitrary-precision coefficients.
// Storage is low-to-high; the highest-index coefficient is nonzero unless the
// polynomial is zero (empty coefficient list).

namespace cubezeta {

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(std::size_t k, const mpz_class& c = 1);

    bool is_zero() const { return coeffs_.size() == 0; }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(std::size_t k) const;  // 0 beyond the degree
    const mpz_class& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    // quotient of an exact division; throws std::runtime_error on a nonzero
    // remainder (all divisions in this artifact must be remainder-free)
    IntPoly divexact(const IntPoly& divisor) const;

    IntPoly pow(unsigned long e) const;
    IntPoly derivative() const;
    IntPoly compose(const IntPoly& inner) const;  // this(inner), Horner
    mpz_class eval(const mpz_class& x) const;
    double eval_double(double x) const;

    // truncation mod u^n and power-series inverse (requires coeff(0) == +-1)
    IntPoly truncated(std::size_t n) const;
    IntPoly series_inverse(std::size_t n) const;

    // exact square root of a perfect-square polynomial (leading coeff a
    // perfect square); throws if no integer square root exists
    IntPoly sqrt_exact() const;

    // "c0 c1 c2 ..." low-to-high
    std::string to_text() const;
    // human form, e.g. "x^3 - 3x + 1"
    std::string to_pretty(const std::string& var = "x") const;
    static IntPoly from_text(const std::string& s);

  private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

// d-th cyclotomic polynomial, by iterated exact division of x^d - 1 (memoized)
IntPoly cyclotomic_poly(u64 d);

// The minimal-polynomial-of-2cos companion of Phi_d: the unique monic
// P of degree phi_tilde(d) with z^{deg P} P(z + 1/z) = Phi_d (d >= 3)
// or Phi_d^2 (d = 1, 2).
IntPoly psi_univariate(u64 d);

}  // namespace cubezeta
