#include "toric/intmat.hpp"

#include <algorithm>
#include <tuple>

namespace toric {

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

IntVec mat_apply(const IntMatrix& m, const IntVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
    IntVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

IntMatrix mat_transpose(const IntMatrix& m) {
    IntMatrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

IntMatrix mat_from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix r(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r.rows) throw std::invalid_argument("mat_from_columns: ragged input");
        for (std::size_t i = 0; i < r.rows; ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

IntMatrix mat_from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix r(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != r.cols) throw std::invalid_argument("mat_from_rows: ragged input");
        for (std::size_t j = 0; j < r.cols; ++j) r.at(i, j) = rows[i][j];
    }
    return r;
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = t / prev;  // exact by Bareiss
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

std::size_t mat_rank(const IntMatrix& m) {
    IntMatrix w = m;
    std::size_t r = 0;
    std::size_t col = 0;
    while (r < w.rows && col < w.cols) {
        std::size_t p = r;
        while (p < w.rows && w.at(p, col) == 0) ++p;
        if (p == w.rows) {
            ++col;
            continue;
        }
        if (p != r)
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        for (std::size_t i = r + 1; i < w.rows; ++i) {
            if (w.at(i, col) == 0) continue;
            Int g = gcd(w.at(i, col), w.at(r, col));
            Int cr = w.at(i, col) / g, ci = w.at(r, col) / g;
            for (std::size_t j = col; j < w.cols; ++j)
                w.at(i, j) = w.at(i, j) * ci - w.at(r, j) * cr;
        }
        ++r;
        ++col;
    }
    return r;
}

std::optional<RatVec> solve_rational(const IntMatrix& A, const IntVec& b) {
    if (A.rows != A.cols || b.size() != A.rows)
        throw std::invalid_argument("solve_rational: shape mismatch");
    const std::size_t n = A.rows;
    std::vector<RatVec> w(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(A.at(i, j));
        w[i][n] = Rat(b[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(w[k], w[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w[i][k] == 0) continue;
            Rat f = w[i][k] / w[k][k];
            for (std::size_t j = k; j <= n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
    return x;
}

namespace {

// Elementary operations applied to S while keeping A = U*S*V and the carried
// inverses in sync.
struct SNFWork {
    IntMatrix S, U, V, Uinv, Vinv;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
        for (std::size_t r = 0; r < U.rows; ++r) std::swap(U.at(r, i), U.at(r, j));
        for (std::size_t c = 0; c < Uinv.cols; ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
        for (std::size_t c = 0; c < V.cols; ++c) std::swap(V.at(i, c), V.at(j, c));
        for (std::size_t r = 0; r < Vinv.rows; ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
    }
    // row i += c * row j
    void row_add(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < S.cols; ++k) S.at(i, k) += c * S.at(j, k);
        for (std::size_t r = 0; r < U.rows; ++r) U.at(r, j) -= c * U.at(r, i);
        for (std::size_t k = 0; k < Uinv.cols; ++k) Uinv.at(i, k) += c * Uinv.at(j, k);
    }
    // col j += c * col i
    void col_add(std::size_t j, std::size_t i, const Int& c) {
        for (std::size_t r = 0; r < S.rows; ++r) S.at(r, j) += c * S.at(r, i);
        for (std::size_t k = 0; k < V.cols; ++k) V.at(i, k) -= c * V.at(j, k);
        for (std::size_t r = 0; r < Vinv.rows; ++r) Vinv.at(r, j) += c * Vinv.at(r, i);
    }
    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < S.cols; ++k) S.at(i, k) = -S.at(i, k);
        for (std::size_t r = 0; r < U.rows; ++r) U.at(r, i) = -U.at(r, i);
        for (std::size_t k = 0; k < Uinv.cols; ++k) Uinv.at(i, k) = -Uinv.at(i, k);
    }
};

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& A) {
    if (A.rows == 0 || A.cols == 0) throw std::invalid_argument("smith_normal_form: empty matrix");
    SNFWork w{A, IntMatrix::identity(A.rows), IntMatrix::identity(A.cols),
              IntMatrix::identity(A.rows), IntMatrix::identity(A.cols)};
    const std::size_t m = A.rows, n = A.cols;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value, ties by row-major position.
            std::size_t pi = m, pj = n;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = w.S.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi == m || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) break;  // all zero; done with this and later steps
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.S.at(i, t) == 0) continue;
                Int q = fdiv(w.S.at(i, t), w.S.at(t, t));
                if (q != 0) w.row_add(i, t, -q);
                if (w.S.at(i, t) != 0) dirty = true;  // remainder became the new smaller entry
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.S.at(t, j) == 0) continue;
                Int q = fdiv(w.S.at(t, j), w.S.at(t, t));
                if (q != 0) w.col_add(j, t, -q);
                if (w.S.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility repair: drag a non-multiple into row t.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (w.S.at(i, j) % w.S.at(t, t) != 0) {
                        w.row_add(t, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t < std::min(m, n) && w.S.at(t, t) < 0) w.row_negate(t);
    }
    return SNFDecomposition{std::move(w.U), std::move(w.S), std::move(w.V),
                            std::move(w.Uinv), std::move(w.Vinv)};
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SNFDecomposition d = smith_normal_form(A);
    std::size_t r = d.rank();
    // A = U S V, so A x = 0 iff (V x) vanishes on the first r coordinates;
    // the kernel lattice is spanned by the trailing columns of V^{-1}.
    IntMatrix k(A.cols, A.cols - r);
    for (std::size_t i = 0; i < A.cols; ++i)
        for (std::size_t j = r; j < A.cols; ++j) k.at(i, j - r) = d.v_inv.at(i, j);
    return k;
}

}  // namespace toric
