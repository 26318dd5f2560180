#include "cubezeta/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cubezeta {

// ---- CycRing ----

CycRing::CycRing(u64 N) : n_(N), phi_(cyclotomic_poly(N)) {}

CycRingPtr CycRing::make(u64 N) {
    if (N == 0) throw std::domain_error("CycRing: N must be >= 1");
    static std::map<u64, CycRingPtr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    CycRingPtr r(new CycRing(N));
    cache.emplace(N, r);
    return r;
}

CycElem CycRing::zero() const {
    return CycElem(shared_from_this(), std::vector<mpz_class>(degree(), 0));
}

CycElem CycRing::from_int(const mpz_class& c) const {
    std::vector<mpz_class> v(degree(), 0);
    v[0] = c;
    return CycElem(shared_from_this(), std::move(v));
}

CycElem CycRing::zeta_power(i64 e) const {
    i64 n = static_cast<i64>(n_);
    i64 r = ((e % n) + n) % n;
    std::vector<mpz_class> mono(static_cast<std::size_t>(r) + 1, 0);
    mono.back() = 1;
    return reduce(IntPoly(std::move(mono)));
}

CycElem CycRing::reduce(const IntPoly& p) const {
    std::size_t deg = degree();
    std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
    if (v.size() < deg) v.resize(deg, 0);
    // monic remainder mod Phi_N, top down; works for any input degree
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        const mpz_class c = v[i];
        for (std::size_t k = 0; k <= deg; ++k) v[i - deg + k] -= c * phi_.coeff(k);
    }
    v.resize(deg);
    return CycElem(shared_from_this(), std::move(v));
}

// ---- CycElem ----

CycElem::CycElem(CycRingPtr ring, std::vector<mpz_class> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_->degree())
        throw std::logic_error("CycElem: coefficient length mismatch");
}

u64 CycElem::modulus() const { return ring_->modulus(); }

bool CycElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycElem::is_rational_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

static void check_same_ring(const CycElem& a, const CycElem& b) {
    if (!a.ring() || !b.ring() || a.ring()->modulus() != b.ring()->modulus())
        throw std::domain_error("cyclotomic arithmetic: mixed moduli");
}

CycElem CycElem::operator-() const {
    auto v = coeffs_;
    for (auto& c : v) c = -c;
    return CycElem(ring_, std::move(v));
}

CycElem CycElem::operator+(const CycElem& o) const {
    check_same_ring(*this, o);
    auto v = coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coeffs_[i];
    return CycElem(ring_, std::move(v));
}

CycElem CycElem::operator-(const CycElem& o) const { return *this + (-o); }

CycElem CycElem::operator*(const CycElem& o) const {
    check_same_ring(*this, o);
    std::size_t deg = ring_->degree();
    if (deg == 1)
        return CycElem(ring_, {coeffs_[0] * o.coeffs_[0]});
    std::vector<mpz_class> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return ring_->reduce(IntPoly(std::move(prod)));
}

bool CycElem::operator==(const CycElem& o) const {
    check_same_ring(*this, o);
    return coeffs_ == o.coeffs_;
}

bool CycElem::operator<(const CycElem& o) const {
    check_same_ring(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CycElem embed_two_cos(const CycRingPtr& ring, u64 d, u64 j) {
    if (d == 0 || ring->modulus() % d != 0)
        throw std::domain_error("embed_two_cos: d must divide N");
    i64 e = static_cast<i64>(j % d) * static_cast<i64>(ring->modulus() / d);
    return ring->zeta_power(e) + ring->zeta_power(-e);
}

// ---- CycPoly ----

CycPoly::CycPoly(CycRingPtr ring, std::vector<CycElem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
}

void CycPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycPoly CycPoly::constant(const CycRingPtr& ring, const CycElem& c) {
    return CycPoly(ring, {c});
}

CycPoly CycPoly::from_int_poly(const CycRingPtr& ring, const IntPoly& p) {
    std::vector<CycElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(ring->from_int(c));
    return CycPoly(ring, std::move(v));
}

CycElem CycPoly::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return ring_->zero();
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
    // a default-constructed (ring-less) polynomial acts as zero
    if (!ring_) return o;
    if (!o.ring_) return *this;
    std::vector<CycElem> v(std::max(coeffs_.size(), o.coeffs_.size()), ring_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return CycPoly(ring_, std::move(v));
}

CycPoly CycPoly::operator-(const CycPoly& o) const {
    if (!ring_ && !o.ring_) return CycPoly();
    if (!ring_) return CycPoly(o.ring_, {}) - o;
    std::vector<CycElem> v(std::max(coeffs_.size(), o.coeffs_.size()), ring_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] - o.coeffs_[i];
    return CycPoly(ring_, std::move(v));
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
    if (is_zero() || o.is_zero()) return CycPoly(ring_, {});
    std::vector<CycElem> v(coeffs_.size() + o.coeffs_.size() - 1, ring_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return CycPoly(ring_, std::move(v));
}

CycPoly CycPoly::operator*(const CycElem& c) const {
    std::vector<CycElem> v = coeffs_;
    for (auto& x : v) x = x * c;
    return CycPoly(ring_, std::move(v));
}

CycPoly CycPoly::pow(unsigned long e) const {
    CycPoly r = CycPoly::constant(ring_, ring_->from_int(1));
    CycPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool CycPoly::operator==(const CycPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

CycPoly product_of_linear_factors(const CycRingPtr& ring, const std::vector<CycElem>& roots) {
    for (const auto& r : roots)
        if (r.ring()->modulus() != ring->modulus())
            throw std::domain_error("product_of_linear_factors: mixed moduli");
    CycPoly acc = CycPoly::constant(ring, ring->from_int(1));
    for (const auto& r : roots) {
        CycPoly lin(ring, {-r, ring->from_int(1)});
        acc = acc * lin;
    }
    return acc;
}

IntPoly descend_to_integers(const CycPoly& p) {
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational_integer())
            throw NotGaloisStable("descend_to_integers: not Galois-stable");
        v.push_back(c.constant_part());
    }
    return IntPoly(std::move(v));
}

}  // namespace cubezeta
