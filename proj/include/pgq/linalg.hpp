#ifndef PGQ_LINALG_HPP
#define PGQ_LINALG_HPP

#include "pgq/gf.hpp"

#include <cstddef>
#include <vector>

namespace pgq {

/// Dense row-major matrix over a finite field.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Fe> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Fe& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Fe at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator<(const Matrix& x, const Matrix& y);
};

/// In-place Gauss-Jordan reduction to reduced row echelon form; returns the
/// rank. Zero rows end up at the bottom.
int rref(Matrix& mat, const Field& field);

/// Rows of `mat` with zero rows removed; `mat` must already be in RREF.
Matrix drop_zero_rows(const Matrix& mat, int rank);

} // namespace pgq

#endif
