#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "cubezeta/intpoly.hpp"

// Exact arithmetic in the cyclotomic ring Z[zeta_N] = Z[x]/Phi_N(x),
// represented on the power basis (dense vectors of length phi(N)).

namespace cubezeta {

class CycRing;
using CycRingPtr = std::shared_ptr<const CycRing>;

class CycElem {
  public:
    CycElem() = default;
    CycElem(CycRingPtr ring, std::vector<mpz_class> coeffs);

    const CycRingPtr& ring() const { return ring_; }
    u64 modulus() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // true iff all power-basis coordinates beyond the constant vanish
    bool is_rational_integer() const;
    mpz_class constant_part() const { return coeffs_.empty() ? mpz_class(0) : coeffs_[0]; }

    CycElem operator-() const;
    CycElem operator+(const CycElem& o) const;
    CycElem operator-(const CycElem& o) const;
    CycElem operator*(const CycElem& o) const;
    bool operator==(const CycElem& o) const;
    bool operator!=(const CycElem& o) const { return !(*this == o); }
    bool operator<(const CycElem& o) const;  // lexicographic, for ordered grouping

  private:
    CycRingPtr ring_;
    std::vector<mpz_class> coeffs_;  // length deg(Phi_N)
};

class CycRing : public std::enable_shared_from_this<CycRing> {
  public:
    static CycRingPtr make(u64 N);

    u64 modulus() const { return n_; }
    std::size_t degree() const { return static_cast<std::size_t>(phi_.degree()); }
    const IntPoly& minimal_poly() const { return phi_; }

    CycElem zero() const;
    CycElem from_int(const mpz_class& c) const;
    CycElem zeta_power(i64 e) const;  // zeta_N^e reduced mod Phi_N
    // reduce an arbitrary integer polynomial in zeta_N mod Phi_N
    CycElem reduce(const IntPoly& p) const;

  private:
    explicit CycRing(u64 N);
    u64 n_;
    IntPoly phi_;
    friend class CycElem;
};

// zeta_N^{jN/d} + zeta_N^{-jN/d}, the exact value 2cos(2*pi*j/d); requires d | N
CycElem embed_two_cos(const CycRingPtr& ring, u64 d, u64 j);

// polynomial over Z[zeta_N] with CycElem coefficients, dense low-to-high
class CycPoly {
  public:
    CycPoly() = default;
    CycPoly(CycRingPtr ring, std::vector<CycElem> coeffs);
    static CycPoly constant(const CycRingPtr& ring, const CycElem& c);
    static CycPoly from_int_poly(const CycRingPtr& ring, const IntPoly& p);

    const CycRingPtr& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<CycElem>& coeffs() const { return coeffs_; }
    CycElem coeff(std::size_t k) const;

    CycPoly operator+(const CycPoly& o) const;
    CycPoly operator-(const CycPoly& o) const;
    CycPoly operator*(const CycPoly& o) const;
    CycPoly operator*(const CycElem& c) const;
    CycPoly pow(unsigned long e) const;
    bool operator==(const CycPoly& o) const;

  private:
    void normalize();
    CycRingPtr ring_;
    std::vector<CycElem> coeffs_;
};

// monic product prod_i (x - roots[i]) over Z[zeta_N]; all roots must share a ring
CycPoly product_of_linear_factors(const CycRingPtr& ring, const std::vector<CycElem>& roots);

// thrown when a coefficient fails the rational-integer coordinate check
struct NotGaloisStable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coordinate-wise descent Z[zeta_N][x] -> Z[x]; throws NotGaloisStable
IntPoly descend_to_integers(const CycPoly& p);

}  // namespace cubezeta
