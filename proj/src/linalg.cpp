#include "pgq/linalg.hpp"

namespace pgq {

bool operator<(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows) return x.rows < y.rows;
    if (x.cols != y.cols) return x.cols < y.cols;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
    return false;
}

int rref(Matrix& mat, const Field& field) {
    int pivot_row = 0;
    for (int col = 0; col < mat.cols && pivot_row < mat.rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < mat.rows; ++r)
            if (mat.at(r, col) != field.zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int c = 0; c < mat.cols; ++c)
                std::swap(mat.at(sel, c), mat.at(pivot_row, c));
        const Fe scale = field.inv(mat.at(pivot_row, col));
        for (int c = col; c < mat.cols; ++c)
            mat.at(pivot_row, c) = field.mul(scale, mat.at(pivot_row, c));
        for (int r = 0; r < mat.rows; ++r) {
            if (r == pivot_row) continue;
            const Fe factor = mat.at(r, col);
            if (factor == field.zero()) continue;
            for (int c = col; c < mat.cols; ++c)
                mat.at(r, c) = field.sub(mat.at(r, c), field.mul(factor, mat.at(pivot_row, c)));
        }
        ++pivot_row;
    }
    return pivot_row;
}

Matrix drop_zero_rows(const Matrix& mat, int rank) {
    Matrix out(rank, mat.cols);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < mat.cols; ++c)
            out.at(r, c) = mat.at(r, c);
    return out;
}

} // namespace pgq
