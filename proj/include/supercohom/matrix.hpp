#pragma once

#include "supercohom/scalar.hpp"

#include <optional>
#include <vector>

namespace supercohom {

/// Dense row-major matrix over a FieldSpec. Zero entries carry no heap storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);
    /// Columns are the given coordinate vectors, all of length `rows`.
    static Matrix from_columns(FieldSpec field, std::size_t rows,
                               const std::vector<std::vector<Scalar>>& columns);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> column(std::size_t c) const;
    Matrix select_columns(const std::vector<std::size_t>& which) const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    Matrix transpose() const;
    bool is_zero() const;
    Scalar trace() const;

    Matrix operator*(const Matrix& rhs) const;
    std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& factor) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix& other) const = default;

private:
    FieldSpec field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

namespace linalg {

/// Exact rank by fraction-free (Bareiss) elimination on a row-scaled integral copy.
std::size_t rank(const Matrix& m);

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination over the field.
Echelon rref(Matrix m);

/// Basis of the right nullspace, one vector per column, in free-variable order.
Matrix nullspace(const Matrix& m);

/// A maximal independent subset of the columns of m (pivot columns, in order).
Matrix column_space(const Matrix& m);

/// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

bool same_span(const Matrix& a, const Matrix& b);

/// Columns of `ambient` that extend span(base) greedily; span(base) must lie inside span(ambient).
Matrix extend_basis(const Matrix& base, const Matrix& ambient);

} // namespace linalg

} // namespace supercohom
