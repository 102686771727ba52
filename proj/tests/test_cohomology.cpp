#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amen/corpus.hpp"

using namespace amen;

namespace {

AmenabilityReport report_of(const Algebra& a) {
    CharacterSet cs = merge_declared(a, find_rational_characters(a));
    return classify(a, cs);
}

}  // namespace

TEST_CASE("dual numbers: frozen dimensions and verdicts") {
    Algebra a = truncated_polynomial_algebra(2);
    AmenabilityReport r = report_of(a);
    CHECK(r.der_dim == 1);
    CHECK(r.inner_dim == 0);
    CHECK(r.cyclic_dim == 0);
    CHECK(r.weakly_amenable == Tri::False);
    CHECK(r.cyclically_amenable == Tri::True);
    CHECK(r.cyclically_weakly_amenable == Tri::False);
    CHECK(r.point_amenable == Tri::False);
    CHECK(r.zero_point_amenable == Tri::False);
    // point derivations at the evaluation character chi(p) = p(0)
    REQUIRE(r.point_dims.size() == 1);
    CHECK(r.point_dims[0].dim == 1);
    CHECK(r.character_set_complete);
}

TEST_CASE("2-dim zero algebra: frozen dimensions and verdicts") {
    AmenabilityReport r = report_of(zero_algebra(2));
    CHECK(r.der_dim == 4);
    CHECK(r.inner_dim == 0);
    CHECK(r.cyclic_dim == 1);
    CHECK(r.weakly_amenable == Tri::False);
    CHECK(r.cyclically_amenable == Tri::False);
    CHECK(r.cyclically_weakly_amenable == Tri::False);
    CHECK(r.point_amenable == Tri::True);  // no characters at all
    CHECK(r.zero_point_amenable == Tri::False);
    // at the zero functional every linear functional is a point derivation
    CHECK(r.point_dim_at_zero == 2);
}

TEST_CASE("2x2 matrices: frozen dimensions and verdicts") {
    AmenabilityReport r = report_of(full_matrix_algebra(2));
    CHECK(r.der_dim == 3);
    CHECK(r.inner_dim == 3);
    CHECK(r.weakly_amenable == Tri::True);
    CHECK(r.cyclically_amenable == Tri::True);
    CHECK(r.cyclically_weakly_amenable == Tri::True);
    CHECK(r.semisimple);
    CHECK(r.character_count == 0);
    CHECK(r.character_set_complete);
    CHECK(r.point_amenable == Tri::True);
    CHECK(r.zero_point_amenable == Tri::True);
}

TEST_CASE("scalars: everything trivial, everything true") {
    AmenabilityReport r = report_of(scalar_algebra());
    CHECK(r.der_dim == 0);
    CHECK(r.inner_dim == 0);
    CHECK(r.cyclic_dim == 0);
    CHECK(r.point_dim_at_zero == 0);
    CHECK(r.weakly_amenable == Tri::True);
    CHECK(r.cyclically_amenable == Tri::True);
    CHECK(r.cyclically_weakly_amenable == Tri::True);
    CHECK(r.point_amenable == Tri::True);
    CHECK(r.zero_point_amenable == Tri::True);
}

TEST_CASE("corpus expectations all hold") {
    for (const auto& e : corpus()) {
        AmenabilityReport r = report_of(e.algebra);
        const auto& x = e.expected;
        INFO(e.recipe);
        if (x.der) CHECK(r.der_dim == *x.der);
        if (x.inner) CHECK(r.inner_dim == *x.inner);
        if (x.cyclic) CHECK(r.cyclic_dim == *x.cyclic);
        if (x.wa) CHECK(r.weakly_amenable == *x.wa);
        if (x.ca) CHECK(r.cyclically_amenable == *x.ca);
        if (x.cwa) CHECK(r.cyclically_weakly_amenable == *x.cwa);
        if (x.pa) CHECK(r.point_amenable == *x.pa);
        if (x.zpa) CHECK(r.zero_point_amenable == *x.zpa);
        if (x.essential) CHECK(r.essential == *x.essential);
        if (x.semisimple) CHECK(r.semisimple == *x.semisimple);
        if (x.commutative) CHECK(r.commutative == *x.commutative);
        if (x.character_count) CHECK(r.character_count == *x.character_count);
    }
}

TEST_CASE("the two computation routes agree on the whole corpus") {
    for (const auto& e : corpus()) {
        AmenabilityReport r = report_of(e.algebra);
        INFO(e.recipe);
        CHECK(r.routes_agree);
        CHECK(r.qa_dim == r.der_dim);
        CHECK(r.inner_qa_dim == r.inner_dim);
        CHECK(r.cyclic_qa_dim == r.cyclic_dim);
        CHECK(r.wa_via_qa == r.weakly_amenable);
        CHECK(r.ca_via_qa == r.cyclically_amenable);
        CHECK(r.cwa_via_qa == r.cyclically_weakly_amenable);
    }
}

TEST_CASE("chain inclusions inner <= cyclic <= derivations") {
    for (const auto& e : corpus()) {
        INFO(e.recipe);
        Subspace der = derivation_space(e.algebra);
        Subspace inn = inner_space(e.algebra);
        Subspace cyc = cyclic_derivation_space(e.algebra);
        CHECK(cyc.contains(inn));
        CHECK(der.contains(cyc));
    }
}

TEST_CASE("cyclic = derivations meet antisymmetric") {
    for (const auto& e : corpus()) {
        INFO(e.recipe);
        Subspace der = derivation_space(e.algebra);
        Subspace anti = antisymmetric_space(e.algebra.dim());
        CHECK(cyclic_derivation_space(e.algebra) == der.intersect(anti));
    }
}

TEST_CASE("every derivation of a commutative algebra kills the unit") {
    // spot check: on Q[x]/(x^3), D(1) pairs to zero against everything
    Algebra a = truncated_polynomial_algebra(3);
    Subspace der = derivation_space(a);
    for (std::size_t r = 0; r < der.basis().rows(); ++r) {
        QVector flat = der.basis().row(r);
        // row 0 of the matrix D: the functional D(e_0) = D(1)
        for (std::size_t k = 0; k < 3; ++k) CHECK(flat[0 * 3 + k] == 0);
    }
}

TEST_CASE("point derivations need a character or zero") {
    Algebra a = pointwise_algebra(2);
    CHECK(point_derivation_space(a, QVector(2, Rational(0))).dim() == 0);
    CHECK(point_derivation_space(a, {Rational(1), Rational(0)}).dim() == 0);
    CHECK_THROWS(point_derivation_space(a, {Rational(2), Rational(5)}));
}

TEST_CASE("point derivation at the cube-root character is nonzero") {
    Algebra a = truncated_polynomial_algebra(3);
    // chi(1)=1, chi(x)=0, chi(x^2)=0 is the only character
    Subspace pd = point_derivation_space(a, {Rational(1), Rational(0), Rational(0)});
    CHECK(pd.dim() == 1);
}

TEST_CASE("conditional verdicts on incomplete character sets") {
    // Q[x]/(x^2 - 2): no rational characters, provably incomplete search
    std::vector<Rational> t(8, Rational(0));
    t[(0 * 2 + 0) * 2 + 0] = 1;
    t[(0 * 2 + 1) * 2 + 1] = 1;
    t[(1 * 2 + 0) * 2 + 1] = 1;
    t[(1 * 2 + 1) * 2 + 0] = 2;
    Algebra a("Q[sqrt2]", 2, std::move(t));
    a.set_unit({Rational(1), Rational(0)});
    CharacterSet cs = find_rational_characters(a);
    REQUIRE(!cs.complete);
    AmenabilityReport r = classify(a, cs);
    // no witness found, no proof of exhaustion: the verdict stays open
    CHECK(r.point_amenable == Tri::Conditional);
    CHECK(r.zero_point_amenable == Tri::Conditional);
    // WA/CA/CWA never depend on the character list
    CHECK(r.weakly_amenable != Tri::Conditional);
}

TEST_CASE("tri-state algebra") {
    CHECK(tri_and(Tri::True, Tri::Conditional) == Tri::Conditional);
    CHECK(tri_and(Tri::False, Tri::Conditional) == Tri::False);
    CHECK(tri_iff(Tri::True, Tri::True) == Tri::True);
    CHECK(tri_iff(Tri::True, Tri::False) == Tri::False);
    CHECK(tri_iff(Tri::Conditional, Tri::False) == Tri::Conditional);
    CHECK(tri_from_string(to_string(Tri::Conditional)) == Tri::Conditional);
}
