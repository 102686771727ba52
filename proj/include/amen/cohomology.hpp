#pragma once

#include "amen/characters.hpp"

namespace amen {

/// Verdicts quantified over the character space are tri-state: a single
/// witnessing character falsifies unconditionally, but a "true" obtained from
/// an incomplete character list is only conditional.
enum class Tri { False, True, Conditional };

inline Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }
inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Conditional || b == Tri::Conditional) return Tri::Conditional;
    return Tri::True;
}
inline Tri tri_iff(Tri a, Tri b) {
    if (a == Tri::Conditional || b == Tri::Conditional) return Tri::Conditional;
    return tri_of(a == b);
}
std::string to_string(Tri t);
Tri tri_from_string(const std::string& s);

// Maps A -> A* are n x n matrices against the dual basis, flattened row-major
// into vectors of length n^2; all spaces below live in that ambient space.

/// Solutions of the derivation identity D(ab) = D(a).b + a.D(b).
Subspace derivation_space(const Algebra& a);
/// Image of F |-> ad_F, i.e. matrices M[i][j] = F(e_i e_j - e_j e_i).
Subspace inner_space(const Algebra& a);
/// Derivations with <D(a), a> = 0; equals derivations cap antisymmetric.
Subspace cyclic_derivation_space(const Algebra& a);

/// Antisymmetric matrices in the flattened n x n space.
Subspace antisymmetric_space(std::size_t n);

/// Bilinear functionals p with p(ax (x) b) = p(a (x) xb) + p(x (x) ba);
/// the independent dual route for the derivation-side computations.
Subspace quasi_additive_space(const Algebra& a);
Subspace inner_qa_space(const Algebra& a);
Subspace cyclic_qa_space(const Algebra& a);

/// Point derivations at phi (a character or the zero functional), inside A*.
Subspace point_derivation_space(const Algebra& a, const QVector& phi);

struct PointDerivationEntry {
    QVector character;
    std::size_t dim = 0;
};

struct AmenabilityReport {
    std::size_t dim = 0;
    std::size_t der_dim = 0, inner_dim = 0, cyclic_dim = 0;
    std::size_t qa_dim = 0, inner_qa_dim = 0, cyclic_qa_dim = 0;
    std::vector<PointDerivationEntry> point_dims;  // one per listed character
    std::size_t point_dim_at_zero = 0;

    Tri weakly_amenable = Tri::False;
    Tri cyclically_amenable = Tri::False;
    Tri cyclically_weakly_amenable = Tri::False;
    Tri point_amenable = Tri::False;
    Tri zero_point_amenable = Tri::False;

    // Same verdicts derived from the quasi-additive route; must agree.
    Tri wa_via_qa = Tri::False;
    Tri ca_via_qa = Tri::False;
    Tri cwa_via_qa = Tri::False;
    bool routes_agree = false;

    bool essential = false;
    bool semisimple = false;
    bool commutative = false;
    bool unital = false;
    bool character_set_complete = false;
    std::size_t character_count = 0;
    std::string field = "Q";
};

AmenabilityReport classify(const Algebra& a, const CharacterSet& chars);

}  // namespace amen
