#include "cubezeta/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubezeta {

namespace {

struct Cube {
    Simplex sigma;
    std::vector<u64> v;
    bool operator<(const Cube& o) const {
        return sigma != o.sigma ? sigma < o.sigma : v < o.v;
    }
};

std::vector<Cube> enumerate_cubes(const LatticeSpec& spec, u64 d) {
    std::vector<Cube> cubes;
    for (const auto& sigma : simplices(spec.q(), d)) {
        std::vector<u64> v(spec.q(), 0);
        while (true) {
            cubes.push_back({sigma, v});
            std::size_t pos = spec.q();
            bool done = false;
            while (pos-- > 0) {
                if (++v[pos] < spec.sides[pos]) break;
                v[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    return cubes;
}

// dense big-integer matrix product, for exact trace powers
using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix zmul(const ZMatrix& a, const ZMatrix& b) {
    std::size_t n = a.size();
    ZMatrix c(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// directed-edge structure of B_H; vertices 0..num_v-1, then e-side shifted
struct DirectedEdges {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;  // (tail, head)
    std::vector<std::vector<std::size_t>> out;               // arcs leaving a node
};

DirectedEdges directed_edges(const BipartiteIncidence& bh) {
    DirectedEdges de;
    std::size_t total = bh.num_v + bh.num_e;
    de.out.resize(total);
    for (std::size_t v = 0; v < bh.num_v; ++v)
        for (std::size_t e = 0; e < bh.num_e; ++e) {
            if (!bh.adj[v][e]) continue;
            std::size_t en = bh.num_v + e;
            de.out[v].push_back(de.arcs.size());
            de.arcs.emplace_back(v, en);
            de.out[en].push_back(de.arcs.size());
            de.arcs.emplace_back(en, v);
        }
    return de;
}

// Hashimoto operator: arc a -> arc b allowed iff head(a) = tail(b) and b is
// not the reversal of a
ZMatrix hashimoto(const DirectedEdges& de) {
    std::size_t n = de.arcs.size();
    ZMatrix t(n, std::vector<mpz_class>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : de.out[de.arcs[a].second])
            if (!(de.arcs[b].second == de.arcs[a].first &&
                  de.arcs[b].first == de.arcs[a].second))
                t[a][b] = 1;
    return t;
}

}  // namespace

u64 BipartiteIncidence::incidence_count() const {
    u64 c = 0;
    for (const auto& row : adj)
        for (unsigned char x : row) c += x;
    return c;
}

i64 BipartiteIncidence::euler_characteristic() const {
    return static_cast<i64>(num_v + num_e) - static_cast<i64>(incidence_count());
}

BipartiteIncidence build_bh(const LatticeSpec& spec, u64 d) {
    if (d < 1 || d > spec.q()) throw std::domain_error("build_bh: need 1 <= d <= q");
    if (cube_count(spec, d - 1) + cube_count(spec, d) > 5000)
        throw ResourceError("build_bh: |Y_{d-1}| + |Y_d| > 5000");

    BipartiteIncidence bh;
    bh.spec = spec;
    bh.d = d;
    auto vs = enumerate_cubes(spec, d - 1);
    auto es = enumerate_cubes(spec, d);
    bh.num_v = vs.size();
    bh.num_e = es.size();
    std::map<Cube, std::size_t> vidx;
    for (std::size_t i = 0; i < vs.size(); ++i) vidx[vs[i]] = i;

    bh.adj.assign(bh.num_v, std::vector<unsigned char>(bh.num_e, 0));
    for (std::size_t e = 0; e < es.size(); ++e) {
        const Cube& cube = es[e];
        for (std::size_t jpos = 0; jpos < cube.sigma.size(); ++jpos) {
            Cube face{cube.sigma, cube.v};
            std::size_t j = face.sigma[jpos];
            face.sigma.erase(face.sigma.begin() + static_cast<long>(jpos));
            bh.adj[vidx.at(face)][e] = 1;
            face.v[j] = (face.v[j] + 1) % spec.sides[j];
            bh.adj[vidx.at(face)][e] = 1;
        }
    }
    for (std::size_t v = 0; v < bh.num_v; ++v) {
        u64 deg = 0;
        for (unsigned char x : bh.adj[v]) deg += x;
        if (deg < 2) throw std::domain_error("build_bh: hypervertex of degree < 2");
    }
    return bh;
}

IntPoly bass_zeta(const LatticeSpec& spec, u64 d) {
    BipartiteIncidence bh = build_bh(spec, d);
    std::size_t n = bh.num_v + bh.num_e;

    std::vector<u64> deg(n, 0);
    for (std::size_t v = 0; v < bh.num_v; ++v)
        for (std::size_t e = 0; e < bh.num_e; ++e)
            if (bh.adj[v][e]) { ++deg[v]; ++deg[bh.num_v + e]; }

    // I - vA + v^2 Q over Z[v], Q = D - I
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = IntPoly({1, 0, mpz_class(deg[i]) - 1});
    for (std::size_t v = 0; v < bh.num_v; ++v)
        for (std::size_t e = 0; e < bh.num_e; ++e)
            if (bh.adj[v][e]) {
                m[v][bh.num_v + e] = IntPoly({0, -1});
                m[bh.num_v + e][v] = IntPoly({0, -1});
            }
    IntPoly det_v = poly_matrix_det(m);

    // every odd coefficient must vanish before the v^2 = u substitution
    std::vector<mpz_class> even;
    for (long k = 0; k <= det_v.degree(); ++k) {
        if (k % 2 == 1) {
            if (det_v.coeff(static_cast<std::size_t>(k)) != 0)
                throw std::logic_error("bass_zeta: odd coefficient survives");
        } else {
            even.push_back(det_v.coeff(static_cast<std::size_t>(k)));
        }
    }
    IntPoly det_u{std::move(even)};

    i64 chi = bh.euler_characteristic();
    IntPoly one_minus_u({1, -1});
    if (chi <= 0) return det_u * one_minus_u.pow(static_cast<unsigned long>(-chi));
    return det_u.divexact(one_minus_u.pow(static_cast<unsigned long>(chi)));
}

std::vector<mpz_class> geodesic_counts(const LatticeSpec& spec, u64 d, u64 mmax) {
    if (mmax > 12) throw ResourceError("geodesic_counts: mmax <= 12");
    BipartiteIncidence bh = build_bh(spec, d);
    DirectedEdges de = directed_edges(bh);
    ZMatrix t = hashimoto(de);
    ZMatrix step = zmul(t, t);  // one hypergraph step = two B_H steps

    std::vector<mpz_class> n;
    ZMatrix power = step;
    for (u64 m = 1; m <= mmax; ++m) {
        if (m > 1) power = zmul(power, step);
        mpz_class tr = 0;
        for (std::size_t i = 0; i < power.size(); ++i) tr += power[i][i];
        // each based geodesic is hit once per B_H arc of its base cell pair
        if (tr % 2 != 0) throw std::logic_error("geodesic_counts: odd trace");
        n.push_back(tr / 2);
    }
    return n;
}

std::vector<mpz_class> dfs_geodesic_counts(const LatticeSpec& spec, u64 d, u64 mmax) {
    if (mmax > 6) throw ResourceError("dfs_geodesic_counts: mmax <= 6");
    BipartiteIncidence bh = build_bh(spec, d);
    DirectedEdges de = directed_edges(bh);
    std::size_t narcs = de.arcs.size();

    auto allowed = [&](std::size_t a, std::size_t b) {
        return de.arcs[a].second == de.arcs[b].first &&
               !(de.arcs[b].second == de.arcs[a].first && de.arcs[b].first == de.arcs[a].second);
    };

    std::vector<mpz_class> n(mmax, 0);
    for (u64 m = 1; m <= mmax; ++m) {
        u64 len = 2 * m;  // B_H length of a hypergraph m-geodesic
        mpz_class count = 0;
        for (std::size_t start = 0; start < narcs; ++start) {
            // iterative DFS over arc sequences of the cyclic walk
            std::vector<std::size_t> path{start};
            std::vector<std::size_t> next_try{0};
            while (!path.empty()) {
                if (path.size() == len) {
                    if (allowed(path.back(), start)) ++count;
                    path.pop_back();
                    next_try.pop_back();
                    continue;
                }
                std::size_t from = path.back();
                const auto& cand = de.out[de.arcs[from].second];
                bool advanced = false;
                for (std::size_t& i = next_try.back(); i < cand.size(); ++i) {
                    if (allowed(from, cand[i])) {
                        std::size_t nxt = cand[i];
                        ++i;
                        path.push_back(nxt);
                        next_try.push_back(0);
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) {
                    path.pop_back();
                    next_try.pop_back();
                }
            }
        }
        if (count % 2 != 0) throw std::logic_error("dfs_geodesic_counts: odd walk count");
        n[m - 1] = count / 2;
    }
    return n;
}

std::vector<mpz_class> log_derivative_series(const IntPoly& zinv, u64 mmax) {
    if (zinv.is_zero() || zinv.coeff(0) != 1)
        throw std::domain_error("log_derivative_series: constant term must be 1");
    // u (log zeta)' = -u zinv' / zinv
    IntPoly series = (zinv.derivative().truncated(mmax) * zinv.series_inverse(mmax)).truncated(mmax);
    std::vector<mpz_class> n(mmax, 0);
    for (u64 m = 1; m <= mmax; ++m) n[m - 1] = -series.coeff(m - 1);
    return n;
}

}  // namespace cubezeta
