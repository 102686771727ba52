#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "amen/rational.hpp"

namespace amen {

/// Dense row-major matrix over the exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return entries_; }

    QVector row(std::size_t r) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    QVector apply(const QVector& v) const;  // matrix * column vector

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    std::size_t rank = 0;
};

/// Gauss-Jordan reduction to the unique reduced row echelon form.
RrefResult rref(const Matrix& m);

/// Rank without materializing the reduced matrix.
std::size_t rank(const Matrix& m);

/// Any exact solution of m*x = b, or nullopt when the system is inconsistent.
std::optional<QVector> solve(const Matrix& m, const QVector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Incremental RREF accumulator: feed rows one at a time, read the basis off
/// at the end. Used for the big sparse-rows-dense-solve constraint systems.
class RrefAccumulator {
public:
    explicit RrefAccumulator(std::size_t cols) : cols_(cols) {}

    /// Reduces `row` against the current basis; inserts it if independent.
    /// Returns true when the row enlarged the span.
    bool add_row(QVector row);

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }

    /// Rows sorted by pivot column; this is the RREF basis of the row space.
    Matrix to_matrix() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t cols_;
    std::vector<QVector> basis_;          // kept fully reduced (RREF rows)
    std::vector<std::size_t> pivots_;     // pivot column of basis_[i], sorted
};

}  // namespace amen
