#pragma once

#include <array>
#include <optional>
#include <string>

#include "amen/subspace.hpp"

namespace amen {

/// Characters supplied by an input file, before verification.
struct DeclaredCharacters {
    std::vector<QVector> values;
    bool complete = false;
};

/// Finite-dimensional associative algebra over Q, given by its structure
/// constants: e_i * e_j = sum_k table(i,j,k) e_k.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string label, std::size_t dim, std::vector<Rational> table);

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    std::size_t dim() const { return n_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * n_ + j) * n_ + k];
    }
    Rational& c(std::size_t i, std::size_t j, std::size_t k) {
        return table_[(i * n_ + j) * n_ + k];
    }
    const std::vector<Rational>& table() const { return table_; }

    const std::optional<QVector>& unit() const { return unit_; }
    void set_unit(QVector u);
    bool is_unital() const { return unit_.has_value(); }

    const std::optional<DeclaredCharacters>& declared_characters() const { return declared_; }
    void set_declared_characters(DeclaredCharacters d) { declared_ = std::move(d); }

    /// Bilinear product of coordinate vectors.
    QVector multiply(const QVector& x, const QVector& y) const;

    /// Matrix of left multiplication by x: column j holds x * e_j.
    Matrix left_multiplication(const QVector& x) const;

private:
    std::string label_;
    std::size_t n_ = 0;
    std::vector<Rational> table_;  // row-major (i, j, k)
    std::optional<QVector> unit_;
    std::optional<DeclaredCharacters> declared_;
};

struct ValidationReport {
    bool valid = true;
    std::string message;  // empty when valid
    // first violated associativity quadruple, when applicable
    std::optional<std::array<std::size_t, 4>> assoc_violation;
};

ValidationReport validate(const Algebra& a);

/// Linear map between algebras, as a target.dim x source.dim coordinate matrix.
struct Morphism {
    Algebra source;
    Algebra target;
    Matrix matrix;

    QVector apply(const QVector& x) const { return matrix.apply(x); }
};

bool check_homomorphism(const Morphism& phi);
bool is_surjective(const Morphism& phi);
/// The transpose map target* -> source* is onto, i.e. phi is injective.
bool dual_composition_full(const Morphism& phi);
bool is_retraction(const Morphism& phi, const Morphism& psi);

struct IdealSubspace {
    Subspace space;  // inside the parent algebra
};

bool is_two_sided_ideal(const Algebra& a, const Subspace& space);

// Constructions.

/// theta-Lau product: A-block first, B-block second;
/// (a1,a2)(x1,x2) = (a1 x1 + theta(x2) a1 + theta(a2) x1, a2 x2).
Algebra lau_product(const Algebra& a, const Algebra& b, const QVector& theta);
Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra unitize(const Algebra& a);
/// Algebraic tensor product; basis e_i (x) f_j ordered lexicographically.
Algebra tensor(const Algebra& a, const Algebra& b);
Algebra opposite(const Algebra& a);

/// The one-dimensional algebra Q (unital).
Algebra scalar_algebra();

Subspace square(const Algebra& a);
bool is_essential(const Algebra& a);
bool is_commutative(const Algebra& a);

IdealSubspace ideal_generated_by(const Algebra& a, const std::vector<QVector>& seeds);

struct QuotientResult {
    Algebra quotient;
    Morphism projection;
};

/// Quotient by a verified two-sided ideal; representatives are the non-pivot
/// coordinates of the ideal's canonical basis.
QuotientResult quotient(const Algebra& a, const IdealSubspace& ideal);

/// Jacobson radical via the characteristic-zero trace criterion, computed in
/// the unitization so non-unital inputs need no special case.
Subspace radical(const Algebra& a);
bool is_semisimple(const Algebra& a);

}  // namespace amen
