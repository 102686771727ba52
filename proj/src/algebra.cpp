#include "amen/algebra.hpp"

#include <array>
#include <stdexcept>

namespace amen {

namespace {

bool multiplicative_on_basis(const Algebra& a, const QVector& phi) {
    const std::size_t n = a.dim();
    if (phi.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs(0);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(a.c(i, j, k)) != 0) lhs += a.c(i, j, k) * phi[k];
            if (lhs != phi[i] * phi[j]) return false;
        }
    return true;
}

QVector basis_vector(std::size_t n, std::size_t i) {
    QVector v(n, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

Algebra::Algebra(std::string label, std::size_t dim, std::vector<Rational> table)
    : label_(std::move(label)), n_(dim), table_(std::move(table)) {
    if (table_.size() != n_ * n_ * n_)
        throw std::invalid_argument("structure tensor has wrong size");
}

void Algebra::set_unit(QVector u) {
    if (u.size() != n_) throw std::invalid_argument("unit vector has wrong length");
    unit_ = std::move(u);
}

QVector Algebra::multiply(const QVector& x, const QVector& y) const {
    if (x.size() != n_ || y.size() != n_)
        throw std::invalid_argument("vector length does not match algebra dimension");
    QVector out(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(c(i, j, k)) != 0) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

Matrix Algebra::left_multiplication(const QVector& x) const {
    if (x.size() != n_) throw std::invalid_argument("vector length mismatch");
    Matrix L(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        QVector col = multiply(x, basis_vector(n_, j));
        for (std::size_t m = 0; m < n_; ++m) L.at(m, j) = col[m];
    }
    return L;
}

ValidationReport validate(const Algebra& a) {
    ValidationReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational lhs(0), rhs(0);
                    for (std::size_t m = 0; m < n; ++m) {
                        if (sgn(a.c(i, j, m)) != 0) lhs += a.c(i, j, m) * a.c(m, k, l);
                        if (sgn(a.c(j, k, m)) != 0) rhs += a.c(j, k, m) * a.c(i, m, l);
                    }
                    if (lhs != rhs) {
                        rep.valid = false;
                        rep.assoc_violation = std::array<std::size_t, 4>{i, j, k, l};
                        rep.message = "associativity fails at (i,j,k,l) = (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + "," + std::to_string(l) + ")";
                        return rep;
                    }
                }
    if (a.unit()) {
        const QVector& u = *a.unit();
        for (std::size_t i = 0; i < n; ++i) {
            QVector e = basis_vector(n, i);
            if (a.multiply(u, e) != e || a.multiply(e, u) != e) {
                rep.valid = false;
                rep.message = "unit axiom fails on basis element " + std::to_string(i);
                return rep;
            }
        }
    }
    return rep;
}

bool check_homomorphism(const Morphism& phi) {
    const std::size_t n = phi.source.dim();
    if (phi.matrix.rows() != phi.target.dim() || phi.matrix.cols() != n)
        throw std::invalid_argument("morphism matrix shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector prod = phi.source.multiply(basis_vector(n, i), basis_vector(n, j));
            QVector lhs = phi.apply(prod);
            QVector rhs = phi.target.multiply(phi.apply(basis_vector(n, i)),
                                              phi.apply(basis_vector(n, j)));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_surjective(const Morphism& phi) {
    return rank(phi.matrix) == phi.target.dim();
}

bool dual_composition_full(const Morphism& phi) {
    return rank(phi.matrix) == phi.source.dim();
}

bool is_retraction(const Morphism& phi, const Morphism& psi) {
    if (psi.source.dim() != phi.target.dim() || psi.target.dim() != phi.source.dim())
        return false;
    if (!check_homomorphism(phi) || !check_homomorphism(psi)) return false;
    return phi.matrix * psi.matrix == Matrix::identity(phi.target.dim());
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& space) {
    if (space.ambient_dim() != a.dim()) return false;
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < space.dim(); ++r) {
        QVector v = space.basis().row(r);
        for (std::size_t i = 0; i < n; ++i) {
            QVector e = basis_vector(n, i);
            if (!space.contains(a.multiply(e, v))) return false;
            if (!space.contains(a.multiply(v, e))) return false;
        }
    }
    return true;
}

Algebra scalar_algebra() {
    Algebra q("Q", 1, {Rational(1)});
    q.set_unit({Rational(1)});
    DeclaredCharacters d;
    d.values = {{Rational(1)}};
    d.complete = true;
    q.set_declared_characters(d);
    return q;
}

Algebra lau_product(const Algebra& a, const Algebra& b, const QVector& theta) {
    if (theta.size() != b.dim())
        throw std::invalid_argument("theta length does not match second factor");
    if (!is_zero_vector(theta) && !multiplicative_on_basis(b, theta))
        throw std::invalid_argument("theta is not a character of the second factor");
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<Rational> table(n * n * n, Rational(0));
    auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return table[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) C(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) C(i, na + j, i) = theta[j];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < na; ++j) C(na + i, j, j) = theta[i];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) C(na + i, na + j, na + k) = b.c(i, j, k);
    Algebra out("lau(" + a.label() + "," + b.label() + ")", n, std::move(table));
    if (is_zero_vector(theta)) {
        if (a.is_unital() && b.is_unital()) {
            QVector u(n, Rational(0));
            for (std::size_t i = 0; i < na; ++i) u[i] = (*a.unit())[i];
            for (std::size_t i = 0; i < nb; ++i) u[na + i] = (*b.unit())[i];
            out.set_unit(std::move(u));
        }
    } else if (b.is_unital()) {
        // (0, u_b) is the unit when theta(u_b) = 1.
        Rational t(0);
        for (std::size_t i = 0; i < nb; ++i) t += theta[i] * (*b.unit())[i];
        if (t == 1) {
            QVector u(n, Rational(0));
            for (std::size_t i = 0; i < nb; ++i) u[na + i] = (*b.unit())[i];
            out.set_unit(std::move(u));
        }
    }
    return out;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    Algebra out = lau_product(a, b, QVector(b.dim(), Rational(0)));
    out.set_label("sum(" + a.label() + "," + b.label() + ")");
    return out;
}

Algebra unitize(const Algebra& a) {
    Algebra out = lau_product(a, scalar_algebra(), {Rational(1)});
    out.set_label("unitize(" + a.label() + ")");
    QVector u(a.dim() + 1, Rational(0));
    u[a.dim()] = 1;
    out.set_unit(std::move(u));
    return out;
}

Algebra tensor(const Algebra& a, const Algebra& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<Rational> table(n * n * n, Rational(0));
    auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
    auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return table[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    for (std::size_t m = 0; m < na; ++m) {
                        if (sgn(a.c(i, k, m)) == 0) continue;
                        for (std::size_t p = 0; p < nb; ++p)
                            if (sgn(b.c(j, l, p)) != 0)
                                C(idx(i, j), idx(k, l), idx(m, p)) = a.c(i, k, m) * b.c(j, l, p);
                    }
    Algebra out("tensor(" + a.label() + "," + b.label() + ")", n, std::move(table));
    if (a.is_unital() && b.is_unital()) {
        QVector u(n, Rational(0));
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) u[idx(i, j)] = (*a.unit())[i] * (*b.unit())[j];
        out.set_unit(std::move(u));
    }
    return out;
}

Algebra opposite(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Rational> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = a.c(j, i, k);
    Algebra out("op(" + a.label() + ")", n, std::move(table));
    if (a.unit()) out.set_unit(*a.unit());
    // Characters are insensitive to the order of multiplication.
    if (a.declared_characters()) out.set_declared_characters(*a.declared_characters());
    return out;
}

Subspace square(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<QVector> gens;
    gens.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector v(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) v[k] = a.c(i, j, k);
            gens.push_back(std::move(v));
        }
    return Subspace::span(gens, n);
}

bool is_essential(const Algebra& a) { return square(a).dim() == a.dim(); }

bool is_commutative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) return false;
    return true;
}

IdealSubspace ideal_generated_by(const Algebra& a, const std::vector<QVector>& seeds) {
    const std::size_t n = a.dim();
    Subspace space = Subspace::span(seeds, n);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QVector> next;
        for (std::size_t r = 0; r < space.dim(); ++r) {
            QVector v = space.basis().row(r);
            for (std::size_t i = 0; i < n; ++i) {
                QVector e = basis_vector(n, i);
                next.push_back(a.multiply(e, v));
                next.push_back(a.multiply(v, e));
            }
        }
        Subspace enlarged = space.sum(Subspace::span(next, n));
        if (enlarged.dim() > space.dim()) {
            space = enlarged;
            grew = true;
        }
    }
    return IdealSubspace{space};
}

QuotientResult quotient(const Algebra& a, const IdealSubspace& ideal) {
    const std::size_t n = a.dim();
    if (!is_two_sided_ideal(a, ideal.space))
        throw std::invalid_argument("subspace is not a two-sided ideal");
    const Matrix& ib = ideal.space.basis();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < ib.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < n && sgn(ib.at(r, lead)) == 0) ++lead;
        is_pivot[lead] = true;
    }
    std::vector<std::size_t> reps;  // non-pivot coordinates, the complement basis
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) reps.push_back(i);
    const std::size_t q = reps.size();

    // Reduce x modulo the ideal, then read the non-pivot coordinates.
    auto project = [&](QVector x) {
        for (std::size_t r = 0; r < ib.rows(); ++r) {
            std::size_t lead = 0;
            while (lead < n && sgn(ib.at(r, lead)) == 0) ++lead;
            if (sgn(x[lead]) == 0) continue;
            Rational f = x[lead];
            for (std::size_t c = lead; c < n; ++c)
                if (sgn(ib.at(r, c)) != 0) x[c] -= f * ib.at(r, c);
        }
        QVector out(q);
        for (std::size_t t = 0; t < q; ++t) out[t] = x[reps[t]];
        return out;
    };

    std::vector<Rational> table(q * q * q, Rational(0));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            QVector prod = project(a.multiply(basis_vector(n, reps[i]), basis_vector(n, reps[j])));
            for (std::size_t k = 0; k < q; ++k) table[(i * q + j) * q + k] = prod[k];
        }
    Algebra quot("quotient(" + a.label() + ")", q, std::move(table));
    if (a.unit()) {
        QVector u = project(*a.unit());
        if (q > 0) quot.set_unit(std::move(u));
    }

    Matrix pm(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        QVector col = project(basis_vector(n, j));
        for (std::size_t i = 0; i < q; ++i) pm.at(i, j) = col[i];
    }
    return QuotientResult{quot, Morphism{a, quot, std::move(pm)}};
}

Subspace radical(const Algebra& a) {
    const std::size_t n = a.dim();
    if (n == 0) return Subspace::zero(0);
    Algebra u = unitize(a);
    const std::size_t m = n + 1;
    // trace of left multiplication by w in the unitization is linear in w
    QVector tr(m, Rational(0));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t s = 0; s < m; ++s) tr[k] += u.c(k, s, s);
    Matrix sys(m, n);
    for (std::size_t t = 0; t < m; ++t) {
        QVector xt(m, Rational(0));
        xt[t] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            QVector ei(m, Rational(0));
            ei[i] = 1;  // embedding of e_i into the unitization
            QVector w = u.multiply(ei, xt);
            Rational s(0);
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(w[k]) != 0) s += w[k] * tr[k];
            sys.at(t, i) = s;
        }
    }
    return kernel(sys);
}

bool is_semisimple(const Algebra& a) { return radical(a).is_zero(); }

}  // namespace amen
