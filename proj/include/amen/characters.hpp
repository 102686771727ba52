#pragma once

#include <stdexcept>

#include "amen/algebra.hpp"

namespace amen {

/// Multiplicative linear functional, stored by its values on the basis.
/// The zero vector is admitted as the "0" element of Delta_0.
struct Character {
    std::size_t parent_dim = 0;
    QVector values;

    bool is_zero() const { return is_zero_vector(values); }
    bool operator==(const Character& rhs) const = default;
};

struct CharacterSet {
    std::vector<Character> characters;  // nonzero, pairwise distinct, sorted
    /// True when provably every character over any extension of Q is listed.
    bool complete = false;
};

/// Candidate tuple enumeration exceeded the cap; the search refuses to
/// truncate silently.
class CharacterOverflowError : public std::runtime_error {
public:
    explicit CharacterOverflowError(std::size_t cap)
        : std::runtime_error("character candidate enumeration exceeded cap of " +
                             std::to_string(cap)),
          cap(cap) {}
    std::size_t cap;
};

/// True iff phi(e_i e_j) = phi(e_i) phi(e_j) for all basis pairs. The zero
/// vector passes (Delta_0 membership).
bool is_character(const Algebra& a, const QVector& phi);

inline Rational evaluate(const QVector& phi, const QVector& x) {
    Rational s(0);
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (sgn(phi[i]) != 0) s += phi[i] * x[i];
    return s;
}

constexpr std::size_t kDefaultCandidateCap = 1000000;

/// Exhaustive search for all-rational characters. Runs on the commutative
/// quotient; candidate values are the rational eigenvalues of the left
/// multiplications, found via the rational-root theorem. complete = true when
/// every characteristic polynomial splits into rational linear factors, which
/// proves no character with irrational values exists either.
CharacterSet find_rational_characters(const Algebra& a,
                                      std::size_t candidate_cap = kDefaultCandidateCap);

/// Union of found and file-declared characters. Throws std::invalid_argument
/// when a declared character fails verification.
CharacterSet merge_declared(const Algebra& a, const CharacterSet& found);

/// Canonical sort order for character lists (lexicographic on values).
void sort_characters(std::vector<Character>& chars);

}  // namespace amen
