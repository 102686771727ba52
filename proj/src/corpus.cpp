#include "amen/corpus.hpp"

#include <stdexcept>

namespace amen {

namespace {

std::vector<Rational> empty_table(std::size_t n) {
    return std::vector<Rational>(n * n * n, Rational(0));
}

}  // namespace

Algebra pointwise_algebra(std::size_t n) {
    auto t = empty_table(n);
    for (std::size_t i = 0; i < n; ++i) t[(i * n + i) * n + i] = 1;
    Algebra a("Q^" + std::to_string(n), n, std::move(t));
    a.set_unit(QVector(n, Rational(1)));
    return a;
}

Algebra zero_algebra(std::size_t n) {
    return Algebra("Z" + std::to_string(n), n, empty_table(n));
}

Algebra truncated_polynomial_algebra(std::size_t n) {
    auto t = empty_table(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + i < n; ++j) t[(i * n + j) * n + (i + j)] = 1;
    Algebra a("Q[x]/(x^" + std::to_string(n) + ")", n, std::move(t));
    QVector u(n, Rational(0));
    u[0] = 1;
    a.set_unit(std::move(u));
    return a;
}

Algebra nonunital_truncated_cube() {
    // basis {x, x^2} in Q[x]/(x^3): x*x = x^2, everything else vanishes
    auto t = empty_table(2);
    t[(0 * 2 + 0) * 2 + 1] = 1;
    return Algebra("Q[x]/(x^3) sans 1", 2, std::move(t));
}

namespace {

Algebra matrix_unit_algebra(std::string label, const std::vector<std::pair<std::size_t, std::size_t>>& units,
                            std::size_t msize) {
    const std::size_t n = units.size();
    auto t = std::vector<Rational>(n * n * n, Rational(0));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (units[p].second != units[q].first) continue;
            auto target = std::make_pair(units[p].first, units[q].second);
            for (std::size_t r = 0; r < n; ++r)
                if (units[r] == target) t[(p * n + q) * n + r] = 1;
        }
    Algebra a(std::move(label), n, std::move(t));
    QVector u(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
        if (units[r].first == units[r].second) u[r] = 1;
    // only a unit if every diagonal unit is present
    std::size_t diag = 0;
    for (std::size_t r = 0; r < n; ++r)
        if (units[r].first == units[r].second) ++diag;
    if (diag == msize) a.set_unit(std::move(u));
    return a;
}

}  // namespace

Algebra upper_triangular_algebra(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
    return matrix_unit_algebra("T" + std::to_string(n), units, n);
}

Algebra full_matrix_algebra(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) units.emplace_back(i, j);
    return matrix_unit_algebra("M" + std::to_string(n), units, n);
}

Algebra group_algebra_c2() {
    auto t = empty_table(2);
    t[(0 * 2 + 0) * 2 + 0] = 1;  // 1*1 = 1
    t[(0 * 2 + 1) * 2 + 1] = 1;  // 1*g = g
    t[(1 * 2 + 0) * 2 + 1] = 1;  // g*1 = g
    t[(1 * 2 + 1) * 2 + 0] = 1;  // g*g = 1
    Algebra a("Q[C2]", 2, std::move(t));
    a.set_unit({Rational(1), Rational(0)});
    return a;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        const Tri T = Tri::True, F = Tri::False;

        {
            ExpectedFragments e;
            e.der = 0; e.inner = 0; e.cyclic = 0;
            e.wa = T; e.ca = T; e.cwa = T; e.pa = T; e.zpa = T;
            e.essential = true; e.semisimple = true; e.commutative = true;
            e.character_count = 1; e.character_complete = true;
            v.push_back({scalar_algebra(), "Q", e});
        }
        for (std::size_t n : {2u, 3u}) {
            ExpectedFragments e;
            e.der = 0; e.inner = 0; e.cyclic = 0;
            e.wa = T; e.ca = T; e.cwa = T; e.pa = T; e.zpa = T;
            e.essential = true; e.semisimple = true; e.commutative = true;
            e.character_count = n; e.character_complete = true;
            v.push_back({pointwise_algebra(n), "Q^" + std::to_string(n), e});
        }
        for (std::size_t n : {1u, 2u, 3u, 4u}) {
            ExpectedFragments e;
            e.der = n * n; e.inner = 0; e.cyclic = n * (n - 1) / 2;
            e.wa = F; e.ca = (n == 1) ? T : F; e.cwa = F;
            e.pa = T; e.zpa = F;
            e.essential = false; e.semisimple = false; e.commutative = true;
            e.character_count = 0; e.character_complete = true;
            v.push_back({zero_algebra(n), "Z" + std::to_string(n), e});
        }
        {
            ExpectedFragments e;
            e.der = 1; e.inner = 0; e.cyclic = 0;
            e.wa = F; e.ca = T; e.cwa = F; e.pa = F; e.zpa = F;
            e.essential = true; e.semisimple = false; e.commutative = true;
            e.character_count = 1; e.character_complete = true;
            v.push_back({truncated_polynomial_algebra(2), "Q[x]/(x^2)", e});
        }
        for (std::size_t n : {3u, 4u}) {
            ExpectedFragments e;
            e.pa = F;  // d(x) is always free at the evaluation character
            e.essential = true; e.semisimple = false; e.commutative = true;
            e.character_count = 1; e.character_complete = true;
            v.push_back({truncated_polynomial_algebra(n),
                         "Q[x]/(x^" + std::to_string(n) + ")", e});
        }
        {
            ExpectedFragments e;
            e.essential = false; e.commutative = true; e.semisimple = false;
            e.pa = T; e.zpa = F;
            e.character_count = 0; e.character_complete = true;
            v.push_back({nonunital_truncated_cube(), "Q[x]/(x^3)-nounit", e});
        }
        {
            ExpectedFragments e;
            e.commutative = false; e.semisimple = false; e.essential = true;
            e.character_count = 2; e.character_complete = true;
            v.push_back({upper_triangular_algebra(2), "T2", e});
        }
        {
            ExpectedFragments e;
            e.commutative = false; e.semisimple = false; e.essential = true;
            e.character_count = 3; e.character_complete = true;
            v.push_back({upper_triangular_algebra(3), "T3", e});
        }
        {
            ExpectedFragments e;
            e.der = 3; e.inner = 3;
            e.wa = T; e.ca = T; e.cwa = T; e.pa = T; e.zpa = T;
            e.essential = true; e.semisimple = true; e.commutative = false;
            e.character_count = 0; e.character_complete = true;
            v.push_back({full_matrix_algebra(2), "M2", e});
        }
        {
            ExpectedFragments e;
            e.der = 0; e.inner = 0; e.cyclic = 0;
            e.wa = T; e.ca = T; e.cwa = T; e.pa = T; e.zpa = T;
            e.essential = true; e.semisimple = true; e.commutative = true;
            e.character_count = 2; e.character_complete = true;
            v.push_back({group_algebra_c2(), "Q[C2]", e});
        }
        return v;
    }();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& recipe) {
    for (const auto& e : corpus())
        if (e.recipe == recipe) return e;
    throw std::invalid_argument("no corpus entry named " + recipe);
}

}  // namespace amen
