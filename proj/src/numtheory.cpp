#include "cubezeta/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace cubezeta {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be >= 1");
    u64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

u64 phi_tilde(u64 d) {
    if (d == 0) throw std::domain_error("phi_tilde: d must be >= 1");
    if (d <= 2) return 1;
    return euler_phi(d) / 2;
}

JSet j_set(u64 d) {
    if (d == 0) throw std::domain_error("j_set: d must be >= 1");
    JSet s;
    s.d = d;
    if (d <= 2) {
        s.members = {1};
        return s;
    }
    for (u64 j = 1; 2 * j < d; ++j)
        if (std::gcd(j, d) == 1) s.members.push_back(j);
    return s;
}

int mobius(u64 d) {
    if (d == 0) throw std::domain_error("mobius: d must be >= 1");
    int sign = 1;
    for (auto [p, e] : factorize(d)) {
        if (e >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

UnitGroup unit_group(u64 n) {
    if (n == 0) throw std::domain_error("unit_group: N must be >= 1");
    UnitGroup g;
    g.modulus = n;
    for (u64 a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) g.elements.push_back(a);
    return g;
}

u64 fold_into_j(u64 k, u64 d) {
    if (d <= 2) return 1;
    u64 r = k % d;
    return std::min(r, d - r);
}

}  // namespace cubezeta
