#include "cubezeta/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace cubezeta {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// position of sigma within the lex-ordered simplex list
std::map<Simplex, std::size_t> index_of(const std::vector<Simplex>& list) {
    std::map<Simplex, std::size_t> idx;
    for (std::size_t i = 0; i < list.size(); ++i) idx[list[i]] = i;
    return idx;
}

// the unique element of eta not in sigma, for |eta| = |sigma| + 1
std::size_t removed_vertex(const Simplex& eta, const Simplex& sigma) {
    for (std::size_t j = 0, i = 0; j < eta.size(); ++j) {
        if (i < sigma.size() && sigma[i] == eta[j]) { ++i; continue; }
        return eta[j];
    }
    throw std::logic_error("removed_vertex: sigma not contained in eta");
}

bool contains(const Simplex& eta, const Simplex& sigma) {
    return std::includes(eta.begin(), eta.end(), sigma.begin(), sigma.end());
}

void check_sides(const LatticeSpec& spec) {
    if (spec.sides.empty()) throw std::domain_error("lattice: q must be >= 1");
    for (u64 n : spec.sides)
        if (n < 2) throw std::domain_error("lattice: side lengths must be >= 2");
}

// all v in Z_{n_1} x ... x Z_{n_q}, lexicographic
std::vector<std::vector<u64>> torus_points(const LatticeSpec& spec) {
    std::vector<std::vector<u64>> pts;
    pts.reserve(spec.volume());
    std::vector<u64> v(spec.q(), 0);
    while (true) {
        pts.push_back(v);
        std::size_t pos = spec.q();
        while (pos-- > 0) {
            if (++v[pos] < spec.sides[pos]) break;
            v[pos] = 0;
            if (pos == 0) return pts;
        }
    }
}

}  // namespace

u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

LatticeSpec::LatticeSpec(std::vector<u64> n) : sides(std::move(n)) { check_sides(*this); }

u64 LatticeSpec::volume() const {
    u64 v = 1;
    for (u64 n : sides) v *= n;
    return v;
}

std::complex<double> Character::z(const LatticeSpec& spec, std::size_t j) const {
    double theta = kTau * static_cast<double>(k[j]) / static_cast<double>(spec.sides[j]);
    return {std::cos(theta), std::sin(theta)};
}

std::vector<Simplex> simplices(std::size_t q, std::size_t d) {
    std::vector<Simplex> out;
    if (d > q) return out;
    Simplex cur(d);
    for (std::size_t i = 0; i < d; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (d == 0) return out;
        std::size_t pos = d;
        while (pos-- > 0) {
            if (++cur[pos] <= q - (d - pos)) {
                for (std::size_t j = pos + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (pos == 0) return out;
        }
    }
}

int simplex_sgn(const Simplex& eta, const Simplex& sigma) {
    std::size_t r = removed_vertex(eta, sigma);
    for (std::size_t j = 0; j < eta.size(); ++j)
        if (eta[j] == r) return (j % 2 == 0) ? 1 : -1;
    throw std::logic_error("simplex_sgn: removed vertex not in eta");
}

u64 cube_count(const LatticeSpec& spec, u64 d) {
    check_sides(spec);
    if (d > spec.q()) throw std::domain_error("cube_count: d > q");
    return binomial(spec.q(), d) * spec.volume();
}

CMatrix twisted_incidence(const LatticeSpec& spec, u64 d, const Character& chi, bool dual) {
    check_sides(spec);
    std::size_t q = spec.q();
    if (d + 1 > q) throw std::domain_error("twisted_incidence: need d <= q-1");
    auto rows = simplices(q, d + 1);
    auto cols = simplices(q, d);
    CMatrix m = CMatrix::Zero(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!contains(rows[r], cols[c])) continue;
            std::complex<double> z = chi.z(spec, removed_vertex(rows[r], cols[c]));
            m(static_cast<long>(r), static_cast<long>(c)) = 1.0 + (dual ? std::conj(z) : z);
        }
    return dual ? CMatrix(m.transpose()) : m;
}

CMatrix twisted_adjacency(const LatticeSpec& spec, u64 d, const Character& chi, Direction dir) {
    if (dir == Direction::up) {
        CMatrix m = twisted_incidence(spec, d, chi);
        return m.adjoint() * m;
    }
    if (d == 0) throw std::domain_error("twisted_adjacency: down requires d >= 1");
    CMatrix m = twisted_incidence(spec, d - 1, chi);
    return m * m.adjoint();
}

CMatrix twisted_delta(const LatticeSpec& spec, u64 d, const Character& chi, bool dual) {
    check_sides(spec);
    std::size_t q = spec.q();
    if (d + 1 > q) throw std::domain_error("twisted_delta: need d <= q-1");
    auto rows = simplices(q, d + 1);
    auto cols = simplices(q, d);
    CMatrix m = CMatrix::Zero(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!contains(rows[r], cols[c])) continue;
            std::complex<double> z = chi.z(spec, removed_vertex(rows[r], cols[c]));
            double s = simplex_sgn(rows[r], cols[c]);
            m(static_cast<long>(r), static_cast<long>(c)) =
                s * ((dual ? std::conj(z) : z) - 1.0);
        }
    return dual ? CMatrix(m.transpose()) : m;
}

CMatrix twisted_laplacian(const LatticeSpec& spec, u64 d, const Character& chi, Direction dir) {
    if (dir == Direction::up) {
        CMatrix m = twisted_delta(spec, d, chi);
        return m.adjoint() * m;
    }
    if (d == 0) throw std::domain_error("twisted_laplacian: down requires d >= 1");
    CMatrix m = twisted_delta(spec, d - 1, chi);
    return m * m.adjoint();
}

std::vector<double> spectrum_adown_q(const LatticeSpec& spec) {
    check_sides(spec);
    std::vector<double> vals;
    vals.reserve(spec.volume());
    for (const auto& k : torus_points(spec)) {
        double s = 0;
        for (std::size_t j = 0; j < spec.q(); ++j)
            s += 2.0 * (1.0 + std::cos(kTau * static_cast<double>(k[j]) /
                                       static_cast<double>(spec.sides[j])));
        vals.push_back(s);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<std::pair<double, u64>> laplacian_spectrum(const LatticeSpec& spec, u64 d) {
    check_sides(spec);
    std::size_t q = spec.q();
    if (d > q) throw std::domain_error("laplacian_spectrum: d > q");
    u64 mult_nonzero = binomial(q - 1, d);
    u64 mult_zero = (d == 0) ? 0 : binomial(q - 1, d - 1) * spec.volume();

    std::vector<std::pair<double, u64>> out;
    if (mult_zero > 0) out.emplace_back(0.0, mult_zero);
    if (mult_nonzero > 0)
        for (const auto& k : torus_points(spec)) {
            double s = 2.0 * static_cast<double>(q);
            for (std::size_t j = 0; j < q; ++j)
                s -= 2.0 * std::cos(kTau * static_cast<double>(k[j]) /
                                    static_cast<double>(spec.sides[j]));
            out.emplace_back(s, mult_nonzero);
        }
    std::sort(out.begin(), out.end());
    std::vector<std::pair<double, u64>> merged;
    for (const auto& [v, m] : out) {
        if (!merged.empty() && std::abs(merged.back().first - v) < 1e-9)
            merged.back().second += m;
        else
            merged.emplace_back(v, m);
    }
    return merged;
}

Eigen::MatrixXd assembled_incidence(const LatticeSpec& spec, u64 d) {
    check_sides(spec);
    std::size_t q = spec.q();
    if (d + 1 > q) throw std::domain_error("assembled_incidence: need d <= q-1");
    u64 total = cube_count(spec, d) + cube_count(spec, d + 1);
    if (total > 5000) throw ResourceError("assembled_incidence: |Y_d| + |Y_{d+1}| > 5000");

    auto rows_s = simplices(q, d + 1);
    auto cols_s = simplices(q, d);
    auto cols_idx = index_of(cols_s);
    auto pts = torus_points(spec);
    std::map<std::vector<u64>, std::size_t> pt_idx;
    for (std::size_t i = 0; i < pts.size(); ++i) pt_idx[pts[i]] = i;

    u64 vol = spec.volume();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
        static_cast<long>(rows_s.size() * vol), static_cast<long>(cols_s.size() * vol));
    // cube (sigma, v) sits in (eta, v) and (eta, v - e_j) for j = eta minus sigma;
    // equivalently (eta, v) contains (sigma, v) and (sigma, S_j v)
    for (std::size_t r = 0; r < rows_s.size(); ++r)
        for (std::size_t p = 0; p < pts.size(); ++p)
            for (std::size_t jpos = 0; jpos < rows_s[r].size(); ++jpos) {
                Simplex sigma = rows_s[r];
                std::size_t j = sigma[jpos];
                sigma.erase(sigma.begin() + static_cast<long>(jpos));
                std::size_t c = cols_idx.at(sigma);
                std::vector<u64> shifted = pts[p];
                shifted[j] = (shifted[j] + 1) % spec.sides[j];
                long row = static_cast<long>(r * vol + p);
                m(row, static_cast<long>(c * vol + p)) = 1.0;
                m(row, static_cast<long>(c * vol + pt_idx.at(shifted))) = 1.0;
            }
    return m;
}

Eigen::MatrixXd assembled_adjacency(const LatticeSpec& spec, u64 d, Direction dir) {
    if (dir == Direction::up) {
        Eigen::MatrixXd m = assembled_incidence(spec, d);
        return m.transpose() * m;
    }
    if (d == 0) throw std::domain_error("assembled_adjacency: down requires d >= 1");
    Eigen::MatrixXd m = assembled_incidence(spec, d - 1);
    return m * m.transpose();
}

double charpoly_aup1_discrepancy(const LatticeSpec& spec, const Character& chi, double u) {
    check_sides(spec);
    std::size_t q = spec.q();
    // for q = 1 there are no squares, so the up-adjacency of edges vanishes
    CMatrix a = (q >= 2) ? twisted_adjacency(spec, 1, chi, Direction::up)
                         : CMatrix::Zero(1, 1);

    // det(tI - uA) = prod (t - u lambda_i), A Hermitian
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    std::vector<std::complex<double>> lhs{1.0};
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        std::vector<std::complex<double>> nxt(lhs.size() + 1, 0.0);
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            nxt[k + 1] += lhs[k];
            nxt[k] -= u * lam * lhs[k];
        }
        lhs = std::move(nxt);
    }

    std::vector<double> w(q);
    for (std::size_t i = 0; i < q; ++i)
        w[i] = 2.0 + 2.0 * std::cos(kTau * static_cast<double>(chi.k[i]) /
                                    static_cast<double>(spec.sides[i]));
    // elementary symmetric polynomials e_0..e_q of w
    std::vector<double> e(q + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = std::min(i + 1, q); k >= 1; --k) e[k] += w[i] * e[k - 1];

    std::vector<std::complex<double>> rhs(q + 1, 0.0);
    double e1 = e[1];
    for (std::size_t k = 0; k <= q; ++k) {
        double coef = (2.0 - static_cast<double>(k)) * std::pow(2.0, static_cast<double>(k) - 1.0) *
                      e[k] * std::pow(u, static_cast<double>(k));
        if (coef == 0.0) continue;
        // (t - u e1)^{q-k} expanded into powers of t
        std::size_t p = q - k;
        double binom = 1.0;
        for (std::size_t j = 0; j <= p; ++j) {
            rhs[j] += coef * binom * std::pow(-u * e1, static_cast<double>(p - j));
            binom = binom * static_cast<double>(p - j) / static_cast<double>(j + 1);
        }
    }

    double delta = 0.0;
    for (std::size_t k = 0; k <= q; ++k) delta = std::max(delta, std::abs(lhs[k] - rhs[k]));
    return delta;
}

std::vector<std::vector<CycElem>> exact_adjacency_up(const CycRingPtr& ring, std::size_t q,
                                                     u64 d, const std::vector<u64>& zexp) {
    if (zexp.size() != q) throw std::domain_error("exact_adjacency_up: need one exponent per axis");
    if (d + 1 > q) throw std::domain_error("exact_adjacency_up: need d <= q-1");
    auto sx = simplices(q, d);
    std::size_t n = sx.size();
    std::vector<std::vector<CycElem>> a(n, std::vector<CycElem>(n, ring->zero()));
    CycElem one = ring->from_int(1);
    auto zp = [&](std::size_t i) { return one + ring->zeta_power(static_cast<i64>(zexp[i])); };
    auto zm = [&](std::size_t i) { return one + ring->zeta_power(-static_cast<i64>(zexp[i])); };
    for (std::size_t r = 0; r < n; ++r) {
        CycElem diag = ring->zero();
        for (std::size_t i = 0; i < q; ++i)
            if (!std::binary_search(sx[r].begin(), sx[r].end(), i)) diag = diag + zm(i) * zp(i);
        a[r][r] = diag;
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) continue;
            Simplex diff_rc, diff_cr;
            std::set_difference(sx[r].begin(), sx[r].end(), sx[c].begin(), sx[c].end(),
                                std::back_inserter(diff_rc));
            std::set_difference(sx[c].begin(), sx[c].end(), sx[r].begin(), sx[r].end(),
                                std::back_inserter(diff_cr));
            if (diff_rc.size() != 1) continue;  // rho >= 2 entries vanish
            // (sigma, sigma') entry: (1 + z_{sigma' minus sigma}^{-1})(1 + z_{sigma minus sigma'})
            a[r][c] = zm(diff_cr[0]) * zp(diff_rc[0]);
        }
    }
    return a;
}

std::vector<std::vector<CycElem>> exact_adjacency_down(const CycRingPtr& ring, std::size_t q,
                                                       u64 d, const std::vector<u64>& zexp) {
    if (zexp.size() != q) throw std::domain_error("exact_adjacency_down: need one exponent per axis");
    if (d < 1 || d > q) throw std::domain_error("exact_adjacency_down: need 1 <= d <= q");
    auto sx = simplices(q, d);
    std::size_t n = sx.size();
    std::vector<std::vector<CycElem>> a(n, std::vector<CycElem>(n, ring->zero()));
    CycElem one = ring->from_int(1);
    auto zp = [&](std::size_t i) { return one + ring->zeta_power(static_cast<i64>(zexp[i])); };
    auto zm = [&](std::size_t i) { return one + ring->zeta_power(-static_cast<i64>(zexp[i])); };
    for (std::size_t r = 0; r < n; ++r) {
        CycElem diag = ring->zero();
        for (std::size_t i : sx[r]) diag = diag + zp(i) * zm(i);
        a[r][r] = diag;
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) continue;
            Simplex diff_rc, diff_cr;
            std::set_difference(sx[r].begin(), sx[r].end(), sx[c].begin(), sx[c].end(),
                                std::back_inserter(diff_rc));
            std::set_difference(sx[c].begin(), sx[c].end(), sx[r].begin(), sx[r].end(),
                                std::back_inserter(diff_cr));
            if (diff_rc.size() != 1) continue;
            // (sigma, sigma') entry: (1 + z_{sigma minus sigma'})(1 + z_{sigma' minus sigma}^{-1})
            a[r][c] = zp(diff_rc[0]) * zm(diff_cr[0]);
        }
    }
    return a;
}

}  // namespace cubezeta
