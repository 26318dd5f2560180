#include "cubezeta/psi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace cubezeta {

namespace {

u64 psi_degree_bound() {
    if (const char* env = std::getenv("CUBEZETA_MAX_DEGREE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000;
}

// c(j1,...,jq) = sum_i 2cos(2*pi*j_i/d_i) as an element of Z[zeta_N']
CycElem root_value(const CycRingPtr& ring, const DVec& d, const JTuple& t) {
    CycElem v = ring->zero();
    for (std::size_t i = 0; i < t.size(); ++i)
        v = v + embed_two_cos(ring, d.entries[i], t[i]);
    return v;
}

// trace of zeta_N^a over Q(zeta_N)/Q
mpz_class zeta_trace(u64 N, u64 a) {
    u64 g = gcd_u64(a % N, N);
    u64 n_over_g = N / g;
    int mu = mobius(n_over_g);
    if (mu == 0) return 0;
    return mpz_class(mu) * mpz_class(euler_phi(N) / euler_phi(n_over_g));
}

// group-algebra representation of sum_i (zeta^{e_i} + zeta^{-e_i})
std::vector<mpz_class> exponent_vector(u64 N, const DVec& d, const JTuple& t) {
    std::vector<mpz_class> v(N, 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        u64 e = (t[i] % d.entries[i]) * (N / d.entries[i]) % N;
        v[e] += 1;
        v[(N - e) % N] += 1;
    }
    return v;
}

// power sums sum_{j in O} c(j)^k for k = 1..kmax, via Galois traces in the
// group algebra Z[C_N']; exact, no reduction mod Phi needed
std::vector<mpz_class> orbit_power_sums(u64 N, const DVec& d, const JTuple& rep,
                                        u64 orbit_size, std::size_t kmax) {
    std::vector<mpz_class> y = exponent_vector(N, d, rep);
    // sparse support of y for fast repeated convolution
    std::vector<std::pair<u64, mpz_class>> support;
    for (u64 e = 0; e < N; ++e)
        if (y[e] != 0) support.emplace_back(e, y[e]);

    u64 stab = euler_phi(N);  // |G| / |O|
    if (stab % orbit_size != 0)
        throw std::logic_error("orbit_power_sums: orbit size does not divide |G|");
    stab /= orbit_size;

    std::vector<mpz_class> traces(N);
    for (u64 e = 0; e < N; ++e) traces[e] = zeta_trace(N, e);

    std::vector<mpz_class> sums(kmax + 1, 0);
    std::vector<mpz_class> cur(N, 0);
    cur[0] = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<mpz_class> nxt(N, 0);
        for (u64 e = 0; e < N; ++e) {
            if (cur[e] == 0) continue;
            for (const auto& [f, c] : support) nxt[(e + f) % N] += cur[e] * c;
        }
        cur = std::move(nxt);
        mpz_class tr = 0;
        for (u64 e = 0; e < N; ++e)
            if (cur[e] != 0) tr += cur[e] * traces[e];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(),
                    mpz_class(stab).get_mpz_t());
        if (r != 0) throw std::logic_error("orbit_power_sums: trace not divisible by |S|");
        sums[k] = q;
    }
    return sums;
}

// monic polynomial from its power sums p_1..p_r (Newton's identities)
IntPoly poly_from_power_sums(const std::vector<mpz_class>& p, std::size_t r) {
    std::vector<mpz_class> e(r + 1, 0);
    e[0] = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        mpz_class s = 0;
        for (std::size_t i = 1; i <= k; ++i)
            s += ((i % 2 == 1) ? 1 : -1) * e[k - i] * p[i];
        mpz_class q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), s.get_mpz_t(),
                    mpz_class(k).get_mpz_t());
        if (rr != 0) throw std::logic_error("poly_from_power_sums: Newton division failed");
        e[k] = q;
    }
    std::vector<mpz_class> coeffs(r + 1);
    for (std::size_t k = 0; k <= r; ++k)
        coeffs[r - k] = (k % 2 == 0) ? e[k] : mpz_class(-e[k]);
    return IntPoly(std::move(coeffs));
}

// small-case cost heuristic: the explicit linear-factor product over the
// cyclotomic ring is quadratic in the orbit size times ring degree squared
bool ring_route_affordable(u64 size, u64 ring_degree) {
    return size * size * ring_degree * ring_degree <= 40'000'000ULL;
}

}  // namespace

OrbitPolynomial psi_orbit(const DVec& dvec, const std::vector<JTuple>& orbit) {
    if (orbit.empty()) throw std::domain_error("psi_orbit: empty orbit");
    u64 nprime = dvec.lcm();
    CycRingPtr ring = CycRing::make(nprime);

    OrbitPolynomial op;
    op.dvec = dvec;
    op.orbit = orbit;
    op.representative = *std::min_element(orbit.begin(), orbit.end());

    // fiber structure of c: group exactly equal values in Z[zeta_N']
    std::map<std::vector<mpz_class>, u64> fibers;
    for (const auto& t : orbit) fibers[root_value(ring, dvec, t).coeffs()] += 1;
    op.distinct_values = fibers.size();
    u64 fiber_size = fibers.begin()->second;
    for (const auto& [v, cnt] : fibers)
        if (cnt != fiber_size)
            throw NotGaloisStable("psi_orbit: fibers of unequal cardinality (input not an orbit)");
    if (orbit.size() != op.distinct_values * fiber_size)
        throw std::logic_error("psi_orbit: fiber bookkeeping failed");
    op.multiplicity = fiber_size;

    u64 r = orbit.size();
    if (ring_route_affordable(r, ring->degree())) {
        std::vector<CycElem> roots;
        roots.reserve(r);
        for (const auto& t : orbit) roots.push_back(root_value(ring, dvec, t));
        op.poly = descend_to_integers(product_of_linear_factors(ring, roots));
        std::vector<CycElem> distinct;
        for (const auto& [v, cnt] : fibers) distinct.emplace_back(ring, v);
        op.irr_core = descend_to_integers(product_of_linear_factors(ring, distinct));
    } else {
        auto p = orbit_power_sums(nprime, dvec, op.representative, r, r);
        op.poly = poly_from_power_sums(p, r);
        // distinct values carry power sums p_k / multiplicity
        std::vector<mpz_class> pd(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), p[k].get_mpz_t(),
                        mpz_class(op.multiplicity).get_mpz_t());
            if (rem != 0) throw std::logic_error("psi_orbit: power sums not divisible by m_O");
            pd[k] = q;
        }
        op.irr_core = poly_from_power_sums(pd, op.distinct_values);
    }
    if (op.irr_core.pow(op.multiplicity) != op.poly)
        throw std::logic_error("psi_orbit: poly != irr_core^multiplicity");
    return op;
}

PsiPolynomial psi_multi(const DVec& dvec) {
    if (dvec.degree_bound() > psi_degree_bound())
        throw ResourceError("psi_multi: degree exceeds the resource bound");
    u64 nprime = dvec.lcm();
    CycRingPtr ring = CycRing::make(nprime);
    u64 deg = dvec.degree_bound();

    PsiPolynomial out;
    out.dvec = dvec;

    if (ring_route_affordable(deg, ring->degree())) {
        // walk the whole index box and multiply the linear factors exactly
        std::vector<JSet> jsets;
        for (u64 e : dvec.entries) jsets.push_back(j_set(e));
        std::vector<CycElem> roots;
        std::vector<std::size_t> idx(dvec.q(), 0);
        JTuple cur(dvec.q());
        bool done = false;
        while (!done) {
            for (std::size_t i = 0; i < dvec.q(); ++i) cur[i] = jsets[i].members[idx[i]];
            roots.push_back(root_value(ring, dvec, cur));
            std::size_t pos = dvec.q();
            while (pos-- > 0) {
                if (++idx[pos] < jsets[pos].members.size()) break;
                idx[pos] = 0;
                if (pos == 0) done = true;
            }
        }
        out.poly = descend_to_integers(product_of_linear_factors(ring, roots));
    } else {
        // sum per-orbit Galois-trace power sums, one Newton pass for the box
        auto dec = orbit_decompose(dvec);
        std::vector<mpz_class> p(deg + 1, 0);
        for (std::size_t oi = 0; oi < dec.orbits.size(); ++oi) {
            auto po = orbit_power_sums(nprime, dvec, dec.representatives[oi],
                                       dec.orbits[oi].size(), deg);
            for (std::size_t k = 1; k <= deg; ++k) p[k] += po[k];
        }
        out.poly = poly_from_power_sums(p, deg);
    }
    return out;
}

bool is_irreducible(const OrbitPolynomial& op) {
    return op.multiplicity == 1 && op.distinct_values == op.orbit.size();
}

IntPoly half_polynomial(u64 m, const std::vector<JTuple>& orbit) {
    if (m < 3 || phi_tilde(m) % 2 != 0)
        throw std::domain_error("half_polynomial: phi_tilde(m) must be even");
    std::set<JTuple> as_set(orbit.begin(), orbit.end());
    bool diagonal = true, invariant = true;
    for (const auto& t : orbit) {
        if (t.size() != 2) throw std::domain_error("half_polynomial: orbit must be 2-dimensional");
        if (t[0] != t[1]) diagonal = false;
        if (!as_set.count(JTuple{t[1], t[0]})) invariant = false;
    }
    if (diagonal || !invariant)
        throw std::domain_error("half_polynomial: orbit must be iota-invariant and non-diagonal");
    // O_{1,m/2-1} for 4 | m is covered as well: its polynomial is x^{phi_tilde(m)}
    // with an even exponent, so the exact square root below still exists.
    OrbitPolynomial op = psi_orbit(DVec({m, m}), orbit);
    return op.poly.sqrt_exact();
}

std::vector<LinearCaseHit> linear_case_classify(u64 d1, u64 d2) {
    DVec d({d1, d2});
    auto dec = orbit_decompose(d);

    auto small = [](u64 x) { return x == 1 || x == 2 || x == 3 || x == 4 || x == 6; };
    auto approx_root = [&](const JTuple& t) {
        double s = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            s += 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(t[i]) /
                                static_cast<double>(d.entries[i]));
        return s;
    };

    CycRingPtr ring;  // built lazily: most orbits fail the cheap filter
    std::vector<LinearCaseHit> hits;
    for (std::size_t oi = 0; oi < dec.orbits.size(); ++oi) {
        const auto& orbit = dec.orbits[oi];
        // double-precision prefilter: a constant c-image forces equal values
        bool maybe_singleton = true;
        double v0d = approx_root(orbit[0]);
        for (std::size_t i = 1; i < orbit.size() && maybe_singleton; ++i)
            if (std::abs(approx_root(orbit[i]) - v0d) > 1e-6) maybe_singleton = false;
        if (!maybe_singleton) continue;
        // exact confirmation in the cyclotomic ring
        if (!ring) ring = CycRing::make(d.lcm());
        CycElem v0 = root_value(ring, d, orbit[0]);
        bool singleton = true;
        for (std::size_t i = 1; i < orbit.size() && singleton; ++i)
            if (!(root_value(ring, d, orbit[i]) == v0)) singleton = false;
        if (!singleton) continue;
        if (!v0.is_rational_integer())
            throw std::logic_error("linear_case_classify: constant c-image is irrational");
        LinearCaseHit hit;
        hit.d1 = d1;
        hit.d2 = d2;
        hit.orbit_rep = dec.representatives[oi];
        hit.irr_core = IntPoly({-v0.constant_part(), 1});
        std::set<JTuple> as_set(orbit.begin(), orbit.end());
        if (small(d1) && small(d2)) {
            hit.family_tag = "integer-pair";
        } else if (d1 == d2 && d1 % 4 == 0 && as_set.count(JTuple{1, d1 / 2 - 1})) {
            hit.family_tag = "mm-zero";
        } else if (d2 == 2 * d1 && d1 % 2 == 1 && as_set.count(JTuple{1, d1 - 2})) {
            hit.family_tag = "m2m-zero";
        } else if (d1 == 2 * d2 && d2 % 2 == 1 && as_set.count(JTuple{d2 - 2, 1})) {
            hit.family_tag = "m2m-zero";
        } else if (d1 == 5 && d2 == 5 && as_set.count(JTuple{1, 2})) {
            hit.family_tag = "five-five";
        } else if (d1 == 10 && d2 == 10 && as_set.count(JTuple{1, 3})) {
            hit.family_tag = "ten-ten";
        } else {
            hit.family_tag = "unclassified";
        }
        hits.push_back(std::move(hit));
    }
    return hits;
}

LinearNecessaryReport check_linear_necessary(u64 d1, u64 d2) {
    LinearNecessaryReport r;
    r.g = gcd_u64(d1, d2);
    auto part = [&](u64 di) {
        u64 gi = 1;
        for (auto [p, e] : factorize(r.g)) {
            (void)e;
            u64 q = 1;
            u64 x = di;
            while (x % p == 0) { q *= p; x /= p; }
            gi *= q;
        }
        return gi;
    };
    r.g1 = part(d1);
    r.g2 = part(d2);
    r.m1 = d1 / r.g1;
    r.m2 = d2 / r.g2;
    auto in_set = [](u64 m) { return m == 1 || m == 2 || m == 3 || m == 4 || m == 6; };
    bool cond1 = (r.g1 <= 2 || r.m1 <= 2) && (r.g2 <= 2 || r.m2 <= 2);
    bool cond2 = in_set(r.m1) && in_set(r.m2);
    bool cond3 = (r.g1 == r.g2) || (r.g1 == 2 && r.g2 == 4) || (r.g1 == 4 && r.g2 == 2);
    r.passes = cond1 && cond2 && cond3;
    return r;
}

HomogeneousPsi homogenize(const PsiPolynomial& p) {
    HomogeneousPsi h;
    h.degree = static_cast<u64>(std::max(p.poly.degree(), 0L));
    h.coeffs.resize(h.degree + 1);
    for (u64 k = 0; k <= h.degree; ++k) h.coeffs[k] = p.poly.coeff(k);
    return h;
}

IntPoly homogeneous_eval(const HomogeneousPsi& h, const IntPoly& subst) {
    IntPoly result;
    IntPoly power = IntPoly::constant(1);  // subst^k
    for (u64 k = 0; k <= h.degree; ++k) {
        if (h.coeffs[k] != 0)
            result = result + IntPoly::monomial(h.degree - k, h.coeffs[k]) * power;
        if (k < h.degree) power = power * subst;
    }
    return result;
}

}  // namespace cubezeta
