#pragma once

#include "amen/matrix.hpp"

namespace amen {

/// A rational subspace in canonical form: the basis matrix is the unique RREF
/// representative (one vector per row, no zero rows), so equality of spaces
/// is entry-wise equality of bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(const std::vector<QVector>& vectors, std::size_t ambient_dim);
    /// Row space of m (rows as generators).
    static Subspace row_space(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool contains(const QVector& v) const;
    bool contains(const Subspace& inner) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;  // RREF, dim x ambient
};

/// Null space {v : m*v = 0}, as a canonical subspace of dimension
/// cols - rank(m).
Subspace kernel(const Matrix& m);

}  // namespace amen
