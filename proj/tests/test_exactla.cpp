#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amen/subspace.hpp"

using namespace amen;

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_to_string(parse_rational("3/6")) == "1/2");
    CHECK(rational_to_string(parse_rational("-4/2")) == "-2");
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));

    Rational big = parse_rational("123456789012345678901234567890/7");
    Rational x = big * 7;
    CHECK(rational_to_string(x) == "123456789012345678901234567890");
}

TEST_CASE("rref canonical form") {
    // rows (2,4,6), (1,2,3), (0,0,5)
    Matrix m(3, 3, {Rational(2), Rational(4), Rational(6), Rational(1), Rational(2), Rational(3),
                    Rational(0), Rational(0), Rational(5)});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    REQUIRE(r.pivots.size() == 2);
    CHECK(r.pivots[0] == 0);
    CHECK(r.pivots[1] == 2);
    CHECK(r.reduced.at(0, 0) == 1);
    CHECK(r.reduced.at(0, 1) == 2);
    CHECK(r.reduced.at(0, 2) == 0);
    CHECK(r.reduced.at(1, 2) == 1);
}

TEST_CASE("rref is basis-order independent") {
    RrefAccumulator a(3), b(3);
    QVector r1{Rational(1), Rational(2), Rational(3)};
    QVector r2{Rational(0), Rational(1), Rational(1)};
    a.add_row(r1);
    a.add_row(r2);
    b.add_row(r2);
    b.add_row(r1);
    CHECK(a.to_matrix() == b.to_matrix());
}

TEST_CASE("solve and inverse") {
    Matrix m(2, 2, {Rational(1), Rational(2), Rational(3), Rational(4)});
    auto x = solve(m, {Rational(5), Rational(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);

    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == Matrix::identity(2));

    Matrix sing(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK(!inverse(sing).has_value());
    CHECK(!solve(sing, {Rational(0), Rational(1)}).has_value());
    // consistent underdetermined system still solves
    auto y = solve(sing, {Rational(1), Rational(2)});
    REQUIRE(y.has_value());
    CHECK(sing.apply(*y) == QVector{Rational(1), Rational(2)});
}

TEST_CASE("kernel") {
    Matrix m(1, 3, {Rational(1), Rational(1), Rational(1)});
    Subspace k = kernel(m);
    CHECK(k.dim() == 2);
    for (std::size_t r = 0; r < k.basis().rows(); ++r)
        CHECK(is_zero_vector(m.apply(k.basis().row(r))));
}

TEST_CASE("subspace lattice") {
    auto e = [](int i) {
        QVector v(3, Rational(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    Subspace xy = Subspace::span({e(0), e(1)}, 3);
    Subspace yz = Subspace::span({e(1), e(2)}, 3);
    Subspace meet = xy.intersect(yz);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(e(1)));
    CHECK(!meet.contains(e(0)));

    Subspace join = xy.sum(yz);
    CHECK(join == Subspace::full(3));
    CHECK(Subspace::span({e(0)}, 3).dim() == 1);

    // spans are canonical: different generating sets, equal objects
    QVector w{Rational(1), Rational(1), Rational(0)};
    Subspace s1 = Subspace::span({e(0), w}, 3);
    CHECK(s1 == xy);
}

TEST_CASE("containment of subspaces") {
    auto e = [](int i) {
        QVector v(4, Rational(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    Subspace small = Subspace::span({e(0)}, 4);
    Subspace bigger = Subspace::span({e(0), e(2)}, 4);
    CHECK(bigger.contains(small));
    CHECK(!small.contains(bigger));
    CHECK(bigger.contains(bigger));
    CHECK(small.contains(Subspace::zero(4)));
}
