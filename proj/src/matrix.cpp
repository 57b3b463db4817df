#include "supercohom/matrix.hpp"

#include "supercohom/error.hpp"

namespace supercohom {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field))
{
}

Matrix Matrix::identity(FieldSpec field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows,
                            const std::vector<std::vector<Scalar>>& columns)
{
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const
{
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& which) const
{
    Matrix m(field_, rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < which.size(); ++k)
            m(r, k) = (*this)(r, which[k]);
    return m;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const
{
    Matrix m(field_, rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            m(r, c) = (*this)(rows[r], cols[c]);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero())
                t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

Scalar Matrix::trace() const
{
    if (rows_ != cols_)
        throw DimensionError("trace of a non-square matrix");
    Scalar t(field_);
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs(k, j);
                if (!b.is_zero())
                    out(i, j) += a * b;
            }
        }
    return out;
}

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& v) const
{
    if (cols_ != v.size())
        throw DimensionError("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, Scalar(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (!a.is_zero() && !v[k].is_zero())
                out[i] += a * v[k];
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero())
            out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero())
            out.data_[i] -= rhs.data_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& factor) const
{
    Matrix out = *this;
    for (auto& s : out.data_)
        if (!s.is_zero())
            s *= factor;
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_)
        throw DimensionError("hstack row mismatch");
    Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c)
            m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.cols_)
        throw DimensionError("vstack column mismatch");
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t c = 0; c < a.cols_; ++c) {
        for (std::size_t r = 0; r < a.rows_; ++r)
            m(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            m(a.rows_ + r, c) = b(r, c);
    }
    return m;
}

namespace linalg {

namespace {

/// Multiply a row by the lcm of all coefficient denominators so its entries are integral.
void make_row_integral(Matrix& m, std::size_t r)
{
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& q : m(r, c).coefficients())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    if (l == 1)
        return;
    Rational factor(l);
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero())
            m(r, c) = m(r, c).scaled(factor);
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

} // namespace

std::size_t rank(const Matrix& input)
{
    Matrix m = input;
    for (std::size_t r = 0; r < m.rows(); ++r)
        make_row_integral(m, r);

    const FieldSpec field = m.field();
    Scalar prev = Scalar::one(field);
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t p = pivot_row;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        swap_rows(m, p, pivot_row);
        const Scalar pivot = m(pivot_row, c);
        for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
            const Scalar lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                const bool own = !m(i, j).is_zero();
                const bool cross = !lead.is_zero() && !m(pivot_row, j).is_zero();
                if (!own && !cross)
                    continue;
                Scalar v = own ? pivot * m(i, j) : Scalar(field);
                if (cross)
                    v -= lead * m(pivot_row, j);
                // Sylvester's identity: the division is exact in the ring of integers.
                if (!v.is_zero() && !prev.is_one())
                    v /= prev;
                m(i, j) = std::move(v);
            }
            m(i, c) = Scalar(field);
        }
        prev = pivot;
        ++pivot_row;
    }
    return pivot_row;
}

Echelon rref(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t p = pivot_row;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        swap_rows(m, p, pivot_row);
        const Scalar inv = m(pivot_row, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(pivot_row, j).is_zero())
                m(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, c).is_zero())
                continue;
            const Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(pivot_row, j).is_zero())
                    m(i, j) -= factor * m(pivot_row, j);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return {std::move(m), std::move(pivots)};
}

Matrix nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(m.cols(), Scalar(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            if (!e.reduced(k, free).is_zero())
                v[e.pivots[k]] = -e.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(m.field(), m.cols(), basis);
}

Matrix column_space(const Matrix& m) { return m.select_columns(rref(m).pivots); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("solve: right-hand side has the wrong number of rows");
    Echelon e = rref(Matrix::hstack(a, b));
    for (auto p : e.pivots)
        if (p >= a.cols())
            return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(e.pivots[k], j) = e.reduced(k, a.cols() + j);
    return x;
}

bool same_span(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        return false;
    const std::size_t ra = rank(a);
    const std::size_t rb = rank(b);
    return ra == rb && rank(Matrix::hstack(a, b)) == ra;
}

Matrix extend_basis(const Matrix& base, const Matrix& ambient)
{
    // Pivot columns past the base block pick a complement of span(base) inside span(ambient).
    Echelon e = rref(Matrix::hstack(base, ambient));
    std::vector<std::size_t> extra;
    for (auto p : e.pivots)
        if (p >= base.cols())
            extra.push_back(p - base.cols());
    return ambient.select_columns(extra);
}

} // namespace linalg

} // namespace supercohom
