#pragma once

#include "toric/bigint.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace toric {

/// Dense matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
        : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count mismatch");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(std::size_t i, std::size_t j) {
        if (i >= rows || j >= cols) throw std::out_of_range("IntMatrix::at");
        return a[i * cols + j];
    }
    const Int& at(std::size_t i, std::size_t j) const {
        if (i >= rows || j >= cols) throw std::out_of_range("IntMatrix::at");
        return a[i * cols + j];
    }

    IntVec row(std::size_t i) const {
        IntVec r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
        return r;
    }
    IntVec col(std::size_t j) const {
        IntVec c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
        return c;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntVec mat_apply(const IntMatrix& m, const IntVec& v);
IntMatrix mat_transpose(const IntMatrix& m);
IntMatrix mat_from_columns(const std::vector<IntVec>& cols);
IntMatrix mat_from_rows(const std::vector<IntVec>& rows);

/// Exact determinant (fraction-free Gaussian elimination).
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t mat_rank(const IntMatrix& m);

/// Solves A*x = b exactly over the rationals; A square. nullopt if singular.
std::optional<RatVec> solve_rational(const IntMatrix& A, const IntVec& b);

/// Smith normal form A = U*S*V with U, V unimodular and S diagonal with a
/// nonnegative divisibility chain. The inverses come along for free from the
/// elimination and are carried so quotient coordinates need no extra solve.
struct SNFDecomposition {
    IntMatrix U, S, V;
    IntMatrix u_inv, v_inv;

    /// Number of nonzero invariant factors.
    std::size_t rank() const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < std::min(S.rows, S.cols); ++i)
            if (S.at(i, i) != 0) ++r;
        return r;
    }
};

SNFDecomposition smith_normal_form(const IntMatrix& A);

/// Basis of the saturated integer kernel {x : A*x = 0}, as matrix columns.
/// Zero-column matrix when the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix& A);

}  // namespace toric
