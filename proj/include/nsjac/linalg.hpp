#pragma once

#include <optional>
#include <vector>

#include "nsjac/field.hpp"

namespace nsjac {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(Field field, int rows, int cols);
    static Matrix from_rows(const Field& field, const std::vector<std::vector<Fe>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Fe& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Fe& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    /// Copy with column `col` removed.
    Matrix without_column(int col) const;
    void swap_rows(int a, int b);

private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<Fe> data_;
};

Fe determinant(Matrix m);
int rank(Matrix m);

/// Kernel vector whose last nonzero entry has the smallest possible index,
/// normalized so that entry is 1 and later entries are zero. The index is
/// that of the first column lying in the span of the columns before it.
/// nullopt when the columns are linearly independent.
std::optional<std::vector<Fe>> first_column_dependency(const Matrix& m);

}  // namespace nsjac
