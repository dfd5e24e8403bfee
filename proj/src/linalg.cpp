#include "nsjac/linalg.hpp"

#include <utility>

namespace nsjac {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows * cols), field_.zero()) {}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Fe>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw InvalidInput("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Matrix Matrix::without_column(int col) const {
    Matrix out(field_, rows_, cols_ - 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0, k = 0; c < cols_; ++c) {
            if (c == col) continue;
            out.at(r, k++) = at(r, c);
        }
    }
    return out;
}

void Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Fe determinant(Matrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    const int n = m.rows();
    Fe det = m.field().one();
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return m.field().zero();
        if (pivot != col) {
            m.swap_rows(pivot, col);
            det = -det;
        }
        const Fe inv = m.at(col, col).inverse();
        det *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const Fe factor = m.at(r, col) * inv;
            for (int c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

namespace {

/// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, row);
        const Fe inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const Fe factor = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<std::vector<Fe>> first_column_dependency(const Matrix& input) {
    Matrix m = input;
    const auto pivots = rref(m);
    // The first non-pivot column is the earliest one dependent on its predecessors.
    int free_col = -1;
    for (int c = 0, k = 0; c < m.cols(); ++c) {
        if (k < static_cast<int>(pivots.size()) && pivots[static_cast<std::size_t>(k)] == c) {
            ++k;
            continue;
        }
        free_col = c;
        break;
    }
    if (free_col < 0) return std::nullopt;
    std::vector<Fe> v(static_cast<std::size_t>(m.cols()), m.field().zero());
    v[static_cast<std::size_t>(free_col)] = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] > free_col) break;
        v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free_col);
    }
    return v;
}

}  // namespace nsjac
