#include "cubezeta/zeta.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace cubezeta {

namespace {

std::atomic<unsigned> g_threads{0};  // 0 = all cores

unsigned effective_threads() {
    unsigned n = g_threads.load();
    if (n == 0) n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

// evaluate fn(i) for i = 0..count-1 into a vector, in parallel, with a
// deterministic (index-ordered) result layout
template <typename F>
auto parallel_transform(std::size_t count, F fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    unsigned nt = std::min<std::size_t>(effective_threads(), count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < nt; ++t)
        futs.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                out[i] = fn(i);
        }));
    for (auto& f : futs) f.get();
    return out;
}

// all k in Z_{n_1} x ... x Z_{n_q}, lexicographic
std::vector<std::vector<u64>> character_box(const LatticeSpec& spec) {
    std::vector<std::vector<u64>> ks;
    ks.reserve(spec.volume());
    std::vector<u64> k(spec.q(), 0);
    while (true) {
        ks.push_back(k);
        std::size_t pos = spec.q();
        while (pos-- > 0) {
            if (++k[pos] < spec.sides[pos]) break;
            k[pos] = 0;
            if (pos == 0) return ks;
        }
    }
}

std::vector<u64> divisor_list(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

u64 epsilon_exponent(const DVec& d) {
    u64 count = 0;
    for (u64 e : d.entries)
        if (e >= 3) ++count;
    if (count >= 63) throw ResourceError("epsilon exponent overflows");
    return u64{1} << count;
}

CycPoly cyc_monomial(const CycRingPtr& ring, std::size_t k, const CycElem& c) {
    std::vector<CycElem> coeffs(k + 1, ring->zero());
    coeffs[k] = c;
    return CycPoly(ring, std::move(coeffs));
}

// cofactor-expansion determinant of a small matrix over Z[zeta][u]
CycPoly cyc_matrix_det(const CycRingPtr& ring, const std::vector<std::vector<CycPoly>>& m,
                       std::vector<std::size_t> cols, std::size_t row) {
    if (cols.size() == 1) return m[row][cols[0]];
    CycPoly det(ring, {});
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const CycPoly& pivot = m[row][cols[i]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest.push_back(cols[j]);
        CycPoly minor = pivot * cyc_matrix_det(ring, m, rest, row + 1);
        det = (i % 2 == 0) ? det + minor : det - minor;
    }
    return det;
}

CycPoly cyc_matrix_det(const CycRingPtr& ring, const std::vector<std::vector<CycPoly>>& m) {
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cyc_matrix_det(ring, m, cols, 0);
}

// zeta exponents e_i with z_i = zeta_{N'}^{e_i} for the character k
std::vector<u64> character_exponents(const LatticeSpec& spec, u64 nprime,
                                     const std::vector<u64>& k) {
    std::vector<u64> e(spec.q());
    for (std::size_t i = 0; i < spec.q(); ++i)
        e[i] = (k[i] % spec.sides[i]) * (nprime / spec.sides[i]) % nprime;
    return e;
}

IntPoly sequential_product_descend(const std::vector<CycPoly>& factors) {
    if (factors.empty()) throw std::logic_error("empty factor list");
    CycPoly prod = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) prod = prod * factors[i];
    return descend_to_integers(prod);
}

constexpr double kTau = 2.0 * std::numbers::pi;

double midpoint_integral(u64 q, double u, std::size_t m) {
    // per-axis cosine table at midpoints (j + 1/2)/m
    std::vector<double> ctab(m);
    for (std::size_t j = 0; j < m; ++j)
        ctab[j] = std::cos(kTau * (static_cast<double>(j) + 0.5) / static_cast<double>(m));
    double c = (2.0 * static_cast<double>(q) - 1.0) * u * u + 1.0;

    std::vector<std::size_t> idx(q, 0);
    double sum = 0.0;
    while (true) {
        double s = 0.0;
        for (std::size_t i = 0; i < q; ++i) s += ctab[idx[i]];
        sum += std::log(c - 2.0 * u * s);
        std::size_t pos = q;
        while (pos-- > 0) {
            if (++idx[pos] < m) break;
            idx[pos] = 0;
            if (pos == 0) return sum / std::pow(static_cast<double>(m), static_cast<double>(q));
        }
    }
}

}  // namespace

void set_thread_count(unsigned n) { g_threads.store(n); }
unsigned thread_count() { return effective_threads(); }

ZetaInverse zeta_top(const LatticeSpec& spec) {
    std::size_t q = spec.q();
    u64 vol = spec.volume();

    ZetaInverse z;
    z.spec = spec;
    z.d = q;
    z.exp_one_minus_u2 = (q - 1) * vol;
    z.poly = IntPoly({1, 0, -1}).pow(z.exp_one_minus_u2);

    IntPoly subst({1, 0, mpz_class(2 * static_cast<unsigned long>(q) - 1)});
    std::vector<std::vector<u64>> divs;
    for (u64 n : spec.sides) divs.push_back(divisor_list(n));

    std::vector<std::size_t> idx(q, 0);
    while (true) {
        std::vector<u64> d(q);
        for (std::size_t i = 0; i < q; ++i) d[i] = divs[i][idx[i]];
        DVec dvec(d);
        PsiFactor f;
        f.dvec = dvec;
        f.exponent = epsilon_exponent(dvec);
        f.psi = psi_multi(dvec).poly;
        PsiPolynomial pp{dvec, f.psi};
        z.poly = z.poly * homogeneous_eval(homogenize(pp), subst).pow(f.exponent);
        z.factors.push_back(std::move(f));
        std::size_t pos = q;
        bool done = false;
        while (pos-- > 0) {
            if (++idx[pos] < divs[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return z;
}

ZetaInverse zeta_codim1(const LatticeSpec& spec) {
    std::size_t q = spec.q();
    if (q < 2) throw std::domain_error("zeta_codim1: q >= 2 required");
    u64 vol = spec.volume();
    u64 nprime = 1;
    for (u64 n : spec.sides) nprime = lcm_u64(nprime, n);
    CycRingPtr ring = CycRing::make(nprime);

    i64 kappa = static_cast<i64>(q) * (3 * static_cast<i64>(q) - 5) / 2;
    i64 gamma = static_cast<i64>(q) * (static_cast<i64>(q) - 3) / 2;

    auto box = character_box(spec);
    auto factors = parallel_transform(box.size(), [&](std::size_t bi) {
        auto e = character_exponents(spec, nprime, box[bi]);
        CycElem one = ring->from_int(1), two = ring->from_int(2);
        std::vector<CycElem> w(q), zsum(q);
        for (std::size_t i = 0; i < q; ++i) {
            zsum[i] = ring->zeta_power(static_cast<i64>(e[i])) +
                      ring->zeta_power(-static_cast<i64>(e[i]));
            w[i] = two + zsum[i];
        }
        // elementary symmetric polynomials e_0..e_q of w
        std::vector<CycElem> sym(q + 1, ring->zero());
        sym[0] = one;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t k = std::min(i + 1, q); k >= 1; --k)
                sym[k] = sym[k] + w[i] * sym[k - 1];

        CycElem zsum_all = ring->zero();
        for (std::size_t i = 0; i < q; ++i) zsum_all = zsum_all + zsum[i];
        CycPoly base(ring, {one, -zsum_all,
                            ring->from_int(3 * (2 * static_cast<long>(q) - 3))});

        CycPoly f;
        for (std::size_t l = 0; l <= q; ++l) {
            mpz_class c = (l == 0) ? mpz_class(1)
                                   : mpz_class(mpz_class(2 - static_cast<long>(l)) << (l - 1));
            if (c == 0) continue;
            CycElem coef = ring->from_int(c) * sym[l];
            f = f + base.pow(static_cast<unsigned long>(q - l)) * cyc_monomial(ring, l, coef);
        }
        return f;
    });

    ZetaInverse z;
    z.spec = spec;
    z.d = q - 1;
    z.poly = sequential_product_descend(factors);
    z.exp_one_minus_u = static_cast<u64>(kappa) * vol;
    z.poly = z.poly * IntPoly({1, -1}).pow(z.exp_one_minus_u);
    z.linear_b = 3;
    z.exp_one_plus_bu = gamma * static_cast<i64>(vol);
    IntPoly lin({1, 3});
    if (z.exp_one_plus_bu >= 0)
        z.poly = z.poly * lin.pow(static_cast<unsigned long>(z.exp_one_plus_bu));
    else
        z.poly = z.poly.divexact(lin.pow(static_cast<unsigned long>(-z.exp_one_plus_bu)));
    return z;
}

ZetaInverse zeta_general_d(const LatticeSpec& spec, u64 d) {
    std::size_t q = spec.q();
    if (d < 1 || d > q) throw std::domain_error("zeta_general_d: need 1 <= d <= q");
    u64 vol = spec.volume();
    u64 nprime = 1;
    for (u64 n : spec.sides) nprime = lcm_u64(nprime, n);
    CycRingPtr ring = CycRing::make(nprime);

    i64 alpha = 2 * static_cast<i64>(q) - 2 * static_cast<i64>(d) + 1;
    i64 beta = 2 * static_cast<i64>(d) - 1;
    i64 gamma = static_cast<i64>(binomial(q, d)) - static_cast<i64>(binomial(q, d - 1));
    u64 kappa = (q - d) * binomial(q, d - 1) + (d - 1) * binomial(q, d);
    bool up = gamma >= 0;

    auto box = character_box(spec);
    auto factors = parallel_transform(box.size(), [&](std::size_t bi) {
        auto e = character_exponents(spec, nprime, box[bi]);
        auto a = up ? exact_adjacency_up(ring, q, d - 1, e)
                    : exact_adjacency_down(ring, q, d, e);
        CycPoly base(ring, {ring->from_int(1), ring->from_int(alpha + beta),
                            ring->from_int(alpha * beta)});
        std::size_t n = a.size();
        std::vector<std::vector<CycPoly>> m(n, std::vector<CycPoly>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] = cyc_monomial(ring, 1, -a[r][c]);
                if (r == c) m[r][c] = m[r][c] + base;
            }
        return cyc_matrix_det(ring, m);
    });

    ZetaInverse z;
    z.spec = spec;
    z.d = d;
    z.poly = sequential_product_descend(factors);
    z.exp_one_minus_u = kappa * vol;
    z.poly = z.poly * IntPoly({1, -1}).pow(z.exp_one_minus_u);
    z.linear_b = up ? beta : alpha;
    z.exp_one_plus_bu = (up ? gamma : -gamma) * static_cast<i64>(vol);
    z.poly = z.poly * IntPoly({1, z.linear_b}).pow(static_cast<unsigned long>(z.exp_one_plus_bu));
    return z;
}

double mahler_limit_integral(u64 q, double u) {
    if (q < 1) throw std::domain_error("mahler_limit_integral: q >= 1");
    if (u < 0.0 || u > 1.0) throw std::domain_error("mahler_limit_integral: u in [0,1]");
    double qq = static_cast<double>(q);
    // the integrand's minimum over the torus is (1-u)(1-(2q-1)u); a negative
    // minimum means log of a negative number on a positive-measure set
    bool at_one = (u == 1.0);
    if (at_one) {
        if (q < 2) throw std::domain_error("mahler_limit_integral: u = 1 needs q >= 2");
    } else if ((1.0 - u) * (1.0 - (2.0 * qq - 1.0) * u) < 0.0) {
        throw std::domain_error("mahler_limit_integral: integrand changes sign");
    }
    if (u == 0.0) return 0.0;
    int kmax = (q == 1) ? 14 : (q == 2) ? 10 : 6;
    double coarse = midpoint_integral(q, u, std::size_t{1} << (kmax - 1));
    double fine = midpoint_integral(q, u, std::size_t{1} << kmax);
    return fine + (fine - coarse) / 3.0;  // Richardson, midpoint error ~ h^2
}

double free_energy_check(const LatticeSpec& spec, double u) {
    if (std::abs(u) >= 1.0) throw std::domain_error("free_energy_check: |u| < 1 required");
    std::size_t q = spec.q();
    u64 vol = spec.volume();
    double total = 0.0;
    for (const auto& k : character_box(spec)) {
        double s = 0.0;
        for (std::size_t i = 0; i < q; ++i)
            s += std::cos(kTau * static_cast<double>(k[i]) / static_cast<double>(spec.sides[i]));
        double f = 1.0 - 2.0 * u * s + (2.0 * static_cast<double>(q) - 1.0) * u * u;
        if (f <= 0.0) throw std::domain_error("free_energy_check: nonpositive factor");
        total += std::log(f);
    }
    return (static_cast<double>(q) - 1.0) * std::log(1.0 - u * u) +
           total / static_cast<double>(vol);
}

}  // namespace cubezeta
