#include "cubezeta/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cubezeta {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(std::size_t k, const mpz_class& c) {
    std::vector<mpz_class> v(k + 1, 0);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
    static const mpz_class zero = 0;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    auto v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& c) const {
    auto v = coeffs_;
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divexact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("divexact: division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree())
        throw std::runtime_error("divexact: nonzero remainder (degree too small)");
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quo(coeffs_.size() - divisor.coeffs_.size() + 1, 0);
    const auto& d = divisor.coeffs_;
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k + d.size() - 1].get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw std::runtime_error("divexact: nonzero remainder");
        quo[k] = q;
        if (q != 0)
            for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::runtime_error("divexact: nonzero remainder");
    return IntPoly(std::move(quo));
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly r = IntPoly::constant(1);
    IntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<mpz_class> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * mpz_class(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly r;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        r = r * inner + IntPoly::constant(coeffs_[i]);
    return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

double IntPoly::eval_double(double x) const {
    double r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i].get_d();
    return r;
}

IntPoly IntPoly::truncated(std::size_t n) const {
    std::vector<mpz_class> v(coeffs_.begin(),
                             coeffs_.begin() + std::min(n, coeffs_.size()));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::series_inverse(std::size_t n) const {
    if (is_zero() || (coeff(0) != 1 && coeff(0) != -1))
        throw std::domain_error("series_inverse: constant term must be a unit");
    std::vector<mpz_class> inv(n, 0);
    mpz_class c0 = coeff(0);  // +-1, its own inverse
    inv[0] = c0;
    for (std::size_t k = 1; k < n; ++k) {
        mpz_class s = 0;
        for (std::size_t i = 1; i <= k; ++i) s += coeff(i) * inv[k - i];
        inv[k] = -c0 * s;
    }
    return IntPoly(std::move(inv));
}

IntPoly IntPoly::sqrt_exact() const {
    if (is_zero()) return IntPoly();
    if (degree() % 2 != 0) throw std::runtime_error("sqrt_exact: odd degree");
    mpz_class lead_root;
    if (mpz_root(lead_root.get_mpz_t(), leading().get_mpz_t(), 2) == 0 &&
        lead_root * lead_root != leading())
        throw std::runtime_error("sqrt_exact: leading coefficient not a square");
    std::size_t m = static_cast<std::size_t>(degree()) / 2;
    std::vector<mpz_class> r(m + 1, 0);
    r[m] = lead_root;
    // coefficient recursion from the top: coeff of x^{m+k} in r^2 pins r[k]
    for (std::size_t k = m; k-- > 0;) {
        mpz_class s = 0;
        for (std::size_t i = k + 1; i < m; ++i)
            if (m + k >= i && m + k - i <= m) s += r[i] * r[m + k - i];
        mpz_class num = coeff(m + k) - s;
        mpz_class den = 2 * r[m];
        mpz_class q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (rr != 0) throw std::runtime_error("sqrt_exact: not a perfect square");
        r[k] = q;
    }
    IntPoly root{std::move(r)};
    if (root * root != *this) throw std::runtime_error("sqrt_exact: not a perfect square");
    return root;
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ' ';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

std::string IntPoly::to_pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        mpz_class a = coeffs_[i];
        if (first) {
            if (a < 0) os << '-';
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        mpz_class mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << '^' << i;
        }
    }
    return os.str();
}

IntPoly IntPoly::from_text(const std::string& s) {
    std::istringstream is(s);
    std::vector<mpz_class> v;
    std::string tok;
    while (is >> tok) v.emplace_back(tok);
    return IntPoly(std::move(v));
}

IntPoly cyclotomic_poly(u64 d) {
    if (d == 0) throw std::domain_error("cyclotomic_poly: d must be >= 1");
    static std::map<u64, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    // x^d - 1 divided by Phi_e over proper divisors e | d
    std::vector<mpz_class> xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    IntPoly p{std::move(xd)};
    for (u64 e = 1; e < d; ++e)
        if (d % e == 0) p = p.divexact(cyclotomic_poly(e));
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(d, p);
    return p;
}

IntPoly psi_univariate(u64 d) {
    if (d == 0) throw std::domain_error("psi_univariate: d must be >= 1");
    IntPoly target = cyclotomic_poly(d);
    if (d <= 2) target = target * target;
    // target is palindromic of degree 2n; peel off a_k z^{n-k} (z^2+1)^k
    std::size_t n = static_cast<std::size_t>(target.degree()) / 2;
    std::vector<mpz_class> rem = target.coeffs();
    std::vector<mpz_class> psi(n + 1, 0);
    IntPoly z2p1 = IntPoly::from_text("1 0 1");
    for (std::size_t k = n + 1; k-- > 0;) {
        psi[k] = rem[n + k];
        if (psi[k] != 0) {
            IntPoly sub = IntPoly::monomial(n - k, psi[k]) * z2p1.pow(k);
            for (std::size_t i = 0; i < sub.coeffs().size(); ++i) rem[i] -= sub.coeff(i);
        }
    }
    for (const auto& c : rem)
        if (c != 0) throw std::runtime_error("psi_univariate: basis change did not close");
    return IntPoly(std::move(psi));
}

}  // namespace cubezeta
