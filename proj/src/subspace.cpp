#include "amen/subspace.hpp"

#include <stdexcept>

namespace amen {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    return s;
}

Subspace Subspace::span(const std::vector<QVector>& vectors, std::size_t ambient_dim) {
    RrefAccumulator acc(ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim)
            throw std::invalid_argument("vector length does not match ambient dimension");
        acc.add_row(v);
    }
    Subspace s(ambient_dim);
    s.basis_ = acc.to_matrix();
    return s;
}

Subspace Subspace::row_space(const Matrix& m) {
    RrefAccumulator acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) acc.add_row(m.row(r));
    Subspace s(m.cols());
    s.basis_ = acc.to_matrix();
    return s;
}

bool Subspace::contains(const QVector& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("vector length does not match ambient dimension");
    // Reduce v against the RREF basis; membership iff it reduces to zero.
    QVector w = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < ambient_ && sgn(basis_.at(r, lead)) == 0) ++lead;
        if (lead == ambient_) continue;
        if (sgn(w[lead]) == 0) continue;
        Rational f = w[lead];  // basis pivot is 1
        for (std::size_t c = lead; c < ambient_; ++c)
            if (sgn(basis_.at(r, c)) != 0) w[c] -= f * basis_.at(r, c);
    }
    return is_zero_vector(w);
}

bool Subspace::contains(const Subspace& inner) const {
    require_same_ambient(*this, inner);
    for (std::size_t r = 0; r < inner.basis_.rows(); ++r)
        if (!contains(inner.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    require_same_ambient(*this, other);
    RrefAccumulator acc(ambient_);
    for (std::size_t r = 0; r < basis_.rows(); ++r) acc.add_row(basis_.row(r));
    for (std::size_t r = 0; r < other.basis_.rows(); ++r) acc.add_row(other.basis_.row(r));
    Subspace s(ambient_);
    s.basis_ = acc.to_matrix();
    return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
    require_same_ambient(*this, other);
    // x in S cap T  <=>  x = a*S = b*T.  Null vectors (a, b) of the
    // (s+t) x n stacked system [S; -T]^T give the intersection as a*S.
    const std::size_t s = dim(), t = other.dim();
    if (s == 0 || t == 0) return Subspace::zero(ambient_);
    Matrix stacked(ambient_, s + t);
    for (std::size_t c = 0; c < s; ++c)
        for (std::size_t r = 0; r < ambient_; ++r) stacked.at(r, c) = basis_.at(c, r);
    for (std::size_t c = 0; c < t; ++c)
        for (std::size_t r = 0; r < ambient_; ++r) stacked.at(r, s + c) = -other.basis_.at(c, r);
    Subspace nul = kernel(stacked);
    std::vector<QVector> gens;
    gens.reserve(nul.dim());
    for (std::size_t r = 0; r < nul.dim(); ++r) {
        QVector x(ambient_, Rational(0));
        for (std::size_t i = 0; i < s; ++i) {
            const Rational& a = nul.basis().at(r, i);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < ambient_; ++c)
                if (sgn(basis_.at(i, c)) != 0) x[c] += a * basis_.at(i, c);
        }
        gens.push_back(std::move(x));
    }
    return Subspace::span(gens, ambient_);
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<QVector> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t row = 0; row < r.rank; ++row)
            v[r.pivots[row]] = -r.reduced.at(row, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

}  // namespace amen
