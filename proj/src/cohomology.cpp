#include "amen/cohomology.hpp"

#include <stdexcept>

namespace amen {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        case Tri::Conditional: return "conditional";
    }
    return "false";
}

Tri tri_from_string(const std::string& s) {
    if (s == "true") return Tri::True;
    if (s == "false") return Tri::False;
    if (s == "conditional") return Tri::Conditional;
    throw std::invalid_argument("bad tri-state value: " + s);
}

namespace {

// Kernel of a constraint system assembled row by row in n^2 variables.
Subspace constraint_kernel(std::size_t vars, const std::vector<QVector>& rows) {
    RrefAccumulator acc(vars);
    for (const auto& r : rows) acc.add_row(r);
    return kernel(acc.to_matrix());
}

}  // namespace

Subspace derivation_space(const Algebra& a) {
    const std::size_t n = a.dim();
    RrefAccumulator acc(n * n);
    QVector row(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(row.begin(), row.end(), Rational(0));
                // <D(e_i e_j), e_k> = <D(e_i), e_j e_k> + <D(e_j), e_k e_i>
                for (std::size_t m = 0; m < n; ++m) {
                    if (sgn(a.c(i, j, m)) != 0) row[m * n + k] += a.c(i, j, m);
                    if (sgn(a.c(j, k, m)) != 0) row[i * n + m] -= a.c(j, k, m);
                    if (sgn(a.c(k, i, m)) != 0) row[j * n + m] -= a.c(k, i, m);
                }
                acc.add_row(row);
            }
    return kernel(acc.to_matrix());
}

Subspace inner_space(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<QVector> gens;
    gens.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        QVector m(n * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.c(i, j, k) - a.c(j, i, k);
        gens.push_back(std::move(m));
    }
    return Subspace::span(gens, n * n);
}

Subspace antisymmetric_space(std::size_t n) {
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QVector m(n * n, Rational(0));
            m[i * n + j] = 1;
            m[j * n + i] = -1;
            gens.push_back(std::move(m));
        }
    return Subspace::span(gens, n * n);
}

Subspace cyclic_derivation_space(const Algebra& a) {
    return derivation_space(a).intersect(antisymmetric_space(a.dim()));
}

Subspace quasi_additive_space(const Algebra& a) {
    const std::size_t n = a.dim();
    RrefAccumulator acc(n * n);
    QVector row(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(row.begin(), row.end(), Rational(0));
                // p(e_i e_j (x) e_k) = p(e_i (x) e_j e_k) + p(e_j (x) e_k e_i)
                for (std::size_t m = 0; m < n; ++m) {
                    if (sgn(a.c(i, j, m)) != 0) row[m * n + k] += a.c(i, j, m);
                    if (sgn(a.c(j, k, m)) != 0) row[i * n + m] -= a.c(j, k, m);
                    if (sgn(a.c(k, i, m)) != 0) row[j * n + m] -= a.c(k, i, m);
                }
                acc.add_row(row);
            }
    return kernel(acc.to_matrix());
}

Subspace inner_qa_space(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<QVector> gens;
    gens.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        QVector p(n * n, Rational(0));
        // p(e_i (x) e_j) = F(e_i e_j - e_j e_i) with F the k-th dual vector
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p[i * n + j] = a.c(i, j, k) - a.c(j, i, k);
        gens.push_back(std::move(p));
    }
    return Subspace::span(gens, n * n);
}

Subspace cyclic_qa_space(const Algebra& a) {
    return quasi_additive_space(a).intersect(antisymmetric_space(a.dim()));
}

Subspace point_derivation_space(const Algebra& a, const QVector& phi) {
    const std::size_t n = a.dim();
    if (phi.size() != n) throw std::invalid_argument("character length mismatch");
    if (!is_character(a, phi))
        throw std::invalid_argument("phi is not in Delta_0 of the algebra");
    std::vector<QVector> rows;
    rows.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector row(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) row[k] = a.c(i, j, k);
            row[i] -= phi[j];
            row[j] -= phi[i];
            rows.push_back(std::move(row));
        }
    return constraint_kernel(n, rows);
}

AmenabilityReport classify(const Algebra& a, const CharacterSet& chars) {
    AmenabilityReport r;
    const std::size_t n = a.dim();
    r.dim = n;

    Subspace der = derivation_space(a);
    Subspace inn = inner_space(a);
    Subspace antisym = antisymmetric_space(n);
    Subspace cyc = der.intersect(antisym);
    r.der_dim = der.dim();
    r.inner_dim = inn.dim();
    r.cyclic_dim = cyc.dim();

    Subspace qa = quasi_additive_space(a);
    Subspace iqa = inner_qa_space(a);
    Subspace cqa = qa.intersect(antisym);
    r.qa_dim = qa.dim();
    r.inner_qa_dim = iqa.dim();
    r.cyclic_qa_dim = cqa.dim();

    r.weakly_amenable = tri_of(der == inn);
    r.cyclically_amenable = tri_of(inn.contains(cyc));
    r.cyclically_weakly_amenable = tri_of(antisym.contains(der));

    r.wa_via_qa = tri_of(qa == iqa);
    r.ca_via_qa = tri_of(iqa.contains(cqa));
    r.cwa_via_qa = tri_of(antisym.contains(qa));
    r.routes_agree = r.weakly_amenable == r.wa_via_qa &&
                     r.cyclically_amenable == r.ca_via_qa &&
                     r.cyclically_weakly_amenable == r.cwa_via_qa;

    bool witness_nonzero_pd = false;
    for (const Character& ch : chars.characters) {
        Subspace pd = point_derivation_space(a, ch.values);
        r.point_dims.push_back({ch.values, pd.dim()});
        if (pd.dim() > 0) witness_nonzero_pd = true;
    }
    r.point_dim_at_zero = point_derivation_space(a, QVector(n, Rational(0))).dim();

    if (witness_nonzero_pd)
        r.point_amenable = Tri::False;
    else
        r.point_amenable = chars.complete ? Tri::True : Tri::Conditional;
    if (r.point_dim_at_zero > 0)
        r.zero_point_amenable = Tri::False;
    else
        r.zero_point_amenable = r.point_amenable;

    r.essential = is_essential(a);
    r.semisimple = is_semisimple(a);
    r.commutative = is_commutative(a);
    r.unital = a.is_unital();
    r.character_set_complete = chars.complete;
    r.character_count = chars.characters.size();
    return r;
}

}  // namespace amen
