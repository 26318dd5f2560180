#include "cubezeta/polydet.hpp"

#include <stdexcept>

namespace cubezeta {

mpz_class int_matrix_det(std::vector<std::vector<mpz_class>> m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("int_matrix_det: matrix not square");
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("int_matrix_det: Bareiss division failed");
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

IntPoly poly_matrix_det(const std::vector<std::vector<IntPoly>>& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("poly_matrix_det: matrix not square");
    if (n == 0) return IntPoly::constant(1);
    // degree bound: sum over rows of the row-max degree
    long bound = 0;
    for (const auto& row : m) {
        long rowmax = 0;
        for (const auto& p : row) rowmax = std::max(rowmax, p.degree());
        bound += std::max(rowmax, 0L);
    }
    std::size_t npts = static_cast<std::size_t>(bound) + 1;
    // sample points 0, 1, -1, 2, -2, ...
    std::vector<mpz_class> xs(npts), ys(npts);
    for (std::size_t t = 0; t < npts; ++t) {
        long x = (t % 2 == 1) ? static_cast<long>((t + 1) / 2) : -static_cast<long>(t / 2);
        xs[t] = x;
        std::vector<std::vector<mpz_class>> mm(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mm[i][j] = m[i][j].eval(xs[t]);
        ys[t] = int_matrix_det(std::move(mm));
    }
    // Newton divided differences with rational intermediates
    std::vector<std::vector<mpq_class>> dd(npts);
    dd[0].assign(ys.begin(), ys.end());
    for (std::size_t lvl = 1; lvl < npts; ++lvl) {
        dd[lvl].resize(npts - lvl);
        for (std::size_t i = 0; i + lvl < npts; ++i) {
            mpq_class num = dd[lvl - 1][i + 1] - dd[lvl - 1][i];
            mpq_class den = mpq_class(xs[i + lvl]) - mpq_class(xs[i]);
            dd[lvl][i] = num / den;
        }
    }
    // expand the Newton form; coefficients must clear to integers
    std::vector<mpq_class> acc(1, dd[npts - 1][0]);
    for (std::size_t lvl = npts - 1; lvl-- > 0;) {
        // acc = acc*(x - xs[lvl]) + dd[lvl][0]
        std::vector<mpq_class> nxt(acc.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            nxt[i + 1] += acc[i];
            nxt[i] -= acc[i] * mpq_class(xs[lvl]);
        }
        nxt[0] += dd[lvl][0];
        acc = std::move(nxt);
    }
    std::vector<mpz_class> coeffs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i].canonicalize();
        if (acc[i].get_den() != 1)
            throw std::logic_error("poly_matrix_det: interpolation did not clear to integers");
        coeffs[i] = acc[i].get_num();
    }
    return IntPoly(std::move(coeffs));
}

IntPoly poly_matrix_det_cofactor(const std::vector<std::vector<IntPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    if (n == 1) return m[0][0];
    IntPoly det;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<IntPoly>> minor(n - 1, std::vector<IntPoly>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        IntPoly term = m[0][j] * poly_matrix_det_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace cubezeta
