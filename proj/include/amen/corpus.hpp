#pragma once

#include "amen/cohomology.hpp"

namespace amen {

/// Expected report fragments frozen for a corpus member; only the populated
/// fields are asserted.
struct ExpectedFragments {
    std::optional<std::size_t> der, inner, cyclic;
    std::optional<Tri> wa, ca, cwa, pa, zpa;
    std::optional<bool> essential, semisimple, commutative;
    std::optional<std::size_t> character_count;
    std::optional<bool> character_complete;
};

struct CorpusEntry {
    Algebra algebra;
    std::string recipe;
    ExpectedFragments expected;
};

/// The built-in instance library: Q, pointwise Q^n, zero algebras, truncated
/// polynomial algebras, triangular and full matrix algebras, and the group
/// algebra of the two-element group.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpus_entry(const std::string& recipe);

// Named builders, also used directly by tests.
Algebra pointwise_algebra(std::size_t n);        // Q^n with coordinatewise product
Algebra zero_algebra(std::size_t n);             // Z_n, all products vanish
Algebra truncated_polynomial_algebra(std::size_t n);  // Q[x]/(x^n), basis 1..x^{n-1}
Algebra nonunital_truncated_cube();              // span{x, x^2} inside Q[x]/(x^3)
Algebra upper_triangular_algebra(std::size_t n); // T_n(Q)
Algebra full_matrix_algebra(std::size_t n);      // M_n(Q)
Algebra group_algebra_c2();                      // Q[Z/2]

}  // namespace amen
