#include "amen/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace amen {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length does not match column count");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

QVector Matrix::row(std::size_t r) const {
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(k, j);
                if (sgn(b) != 0) p.at(i, j) += a * b;
            }
        }
    return p;
}

QVector Matrix::apply(const QVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = at(i, j);
            if (sgn(a) != 0) out[i] += a * v[j];
        }
    return out;
}

bool RrefAccumulator::add_row(QVector row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    // Reduce against existing pivots.
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Rational& coef = row[pivots_[b]];
        if (sgn(coef) == 0) continue;
        Rational f = coef;  // pivot entries are normalized to 1
        const QVector& brow = basis_[b];
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(brow[c]) != 0) row[c] -= f * brow[c];
    }
    std::size_t lead = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(row[c]) != 0) { lead = c; break; }
    if (lead == cols_) return false;

    Rational inv = 1 / row[lead];
    for (std::size_t c = lead; c < cols_; ++c)
        if (sgn(row[c]) != 0) row[c] *= inv;

    // Back-eliminate the new pivot column from existing rows.
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        Rational f = basis_[b][lead];
        if (sgn(f) == 0) continue;
        for (std::size_t c = lead; c < cols_; ++c)
            if (sgn(row[c]) != 0) basis_[b][c] -= f * row[c];
    }

    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

Matrix RrefAccumulator::to_matrix() const {
    return Matrix::from_rows(basis_, cols_);
}

RrefResult rref(const Matrix& m) {
    RrefAccumulator acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) acc.add_row(m.row(r));
    RrefResult out;
    out.rank = acc.rank();
    out.pivots = acc.pivots();
    out.reduced = Matrix(m.rows(), m.cols());
    Matrix basis = acc.to_matrix();
    for (std::size_t r = 0; r < basis.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.reduced.at(r, c) = basis.at(r, c);
    return out;
}

std::size_t rank(const Matrix& m) {
    RrefAccumulator acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) acc.add_row(m.row(r));
    return acc.rank();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RrefAccumulator acc(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        QVector row = m.row(r);
        row.resize(2 * n, Rational(0));
        row[n + r] = 1;
        acc.add_row(std::move(row));
    }
    const auto& piv = acc.pivots();
    for (std::size_t i = 0; i < n; ++i)
        if (i >= piv.size() || piv[i] != i) return std::nullopt;
    Matrix red = acc.to_matrix();
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
    return inv;
}

std::optional<QVector> solve(const Matrix& m, const QVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    // Reduce the augmented matrix [m | b].
    RrefAccumulator acc(m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        QVector row = m.row(r);
        row.push_back(b[r]);
        acc.add_row(std::move(row));
    }
    Matrix red = acc.to_matrix();
    const auto& piv = acc.pivots();
    for (std::size_t p : piv)
        if (p == m.cols()) return std::nullopt;  // pivot in the rhs column
    // Free variables are 0; in RREF every other nonzero entry of a pivot row
    // sits in a free column, so each pivot variable reads off directly.
    QVector x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < red.rows(); ++r) x[piv[r]] = red.at(r, m.cols());
    return x;
}

}  // namespace amen
