#include "amen/characters.hpp"

#include <algorithm>
#include <map>

namespace amen {

namespace {

// ---- integer factorization (trial division + Brent's rho) ----

mpz_class pollard_brent(const mpz_class& n, unsigned long c, gmp_randstate_t rng) {
    mpz_class y, x, ys, q(1), g(1);
    mpz_urandomm(y.get_mpz_t(), rng, n.get_mpz_t());
    unsigned long r = 1, m = 128;
    auto f = [&](mpz_class& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                f(y);
                mpz_class d = x - y;
                if (sgn(d) < 0) d = -d;
                q = q * d % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            f(ys);
            mpz_class d = x - ys;
            if (sgn(d) < 0) d = -d;
            g = gcd(d, n);
        } while (g == 1);
    }
    return g;
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= static_cast<unsigned long>(p);
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    gmp_randstate_t rng;
    gmp_randinit_mt(rng);
    gmp_randseed_ui(rng, 0x5eedul);
    mpz_class d = n;
    for (unsigned long c = 1; d == n && c < 64; ++c) d = pollard_brent(n, c, rng);
    gmp_randclear(rng);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::map<mpz_class, unsigned> fac;
    factor_into(n, fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// ---- polynomials over Q, coefficients ascending ----

using QPoly = std::vector<Rational>;

Rational poly_eval(const QPoly& p, const Rational& x) {
    Rational v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

/// Deflate by the root r (assumes p(r) = 0): p(x) = (x - r) q(x).
QPoly deflate(const QPoly& p, const Rational& r) {
    QPoly q(p.size() - 1);
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + r * carry;
    }
    return q;
}

/// Characteristic polynomial of a square matrix via Faddeev-LeVerrier.
QPoly charpoly(const Matrix& L) {
    const std::size_t n = L.rows();
    QPoly p(n + 1, Rational(0));
    p[n] = 1;
    Matrix M = Matrix::identity(n);  // M_0 = I
    Rational ck;
    for (std::size_t k = 1; k <= n; ++k) {
        M = L * M;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += M.at(i, i);
        ck = -tr / Rational(static_cast<long>(k));
        p[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return p;
}

struct RootSearch {
    std::vector<Rational> roots;  // distinct
    bool splits = false;          // all linear rational factors (w/ multiplicity)
};

RootSearch rational_roots(QPoly p) {
    RootSearch out;
    // Strip zero roots.
    std::size_t zeros = 0;
    while (p.size() > 1 && sgn(p[0]) == 0) {
        p.erase(p.begin());
        ++zeros;
    }
    if (zeros > 0) out.roots.push_back(Rational(0));
    while (p.size() > 1) {
        // Clear denominators to a primitive integer polynomial.
        mpz_class den(1);
        for (const auto& c : p) den = lcm(den, c.get_den());
        std::vector<mpz_class> ip(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            ip[i] = mpz_class(p[i].get_num() * den / p[i].get_den());
        mpz_class g(0);
        for (const auto& c : ip) g = gcd(g, c);
        if (g > 1)
            for (auto& c : ip) c /= g;
        Rational found;
        bool hit = false;
        for (const mpz_class& num : positive_divisors(ip.front())) {
            for (const mpz_class& d : positive_divisors(ip.back())) {
                for (int s : {1, -1}) {
                    Rational cand(s > 0 ? num : mpz_class(-num), d);
                    cand.canonicalize();
                    if (sgn(poly_eval(p, cand)) == 0) {
                        found = cand;
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) return out;  // splits stays false
        if (std::find(out.roots.begin(), out.roots.end(), found) == out.roots.end())
            out.roots.push_back(found);
        p = deflate(p, found);
    }
    out.splits = true;
    return out;
}

}  // namespace

bool is_character(const Algebra& a, const QVector& phi) {
    const std::size_t n = a.dim();
    if (phi.size() != n) throw std::invalid_argument("character length mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs(0);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(a.c(i, j, k)) != 0) lhs += a.c(i, j, k) * phi[k];
            if (lhs != phi[i] * phi[j]) return false;
        }
    return true;
}

void sort_characters(std::vector<Character>& chars) {
    std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
        return std::lexicographical_compare(
            a.values.begin(), a.values.end(), b.values.begin(), b.values.end(),
            [](const Rational& x, const Rational& y) { return x < y; });
    });
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
}

CharacterSet find_rational_characters(const Algebra& a, std::size_t candidate_cap) {
    const std::size_t n = a.dim();
    CharacterSet out;
    if (n == 0) {
        out.complete = true;
        return out;
    }
    // Characters kill commutators, so search on the commutative quotient.
    std::vector<QVector> comms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QVector ei(n, Rational(0)), ej(n, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            QVector com = a.multiply(ei, ej);
            QVector rev = a.multiply(ej, ei);
            for (std::size_t k = 0; k < n; ++k) com[k] -= rev[k];
            comms.push_back(std::move(com));
        }
    IdealSubspace comm_ideal = ideal_generated_by(a, comms);
    QuotientResult qr = quotient(a, comm_ideal);
    const Algebra& cq = qr.quotient;
    const std::size_t q = cq.dim();
    if (q == 0) {
        out.complete = true;  // only the zero functional factors through
        return out;
    }

    std::vector<std::vector<Rational>> candidates(q);
    bool all_split = true;
    for (std::size_t i = 0; i < q; ++i) {
        QVector ei(q, Rational(0));
        ei[i] = 1;
        RootSearch rs = rational_roots(charpoly(cq.left_multiplication(ei)));
        candidates[i] = std::move(rs.roots);
        all_split = all_split && rs.splits;
    }

    std::size_t total = 1;
    for (const auto& c : candidates) {
        if (c.empty()) {
            total = 0;
            break;
        }
        if (total > candidate_cap / c.size()) throw CharacterOverflowError(candidate_cap);
        total *= c.size();
    }

    for (std::size_t t = 0; t < total; ++t) {
        QVector phi(q);
        std::size_t rem = t;
        for (std::size_t i = 0; i < q; ++i) {
            phi[i] = candidates[i][rem % candidates[i].size()];
            rem /= candidates[i].size();
        }
        if (is_zero_vector(phi)) continue;
        if (!is_character(cq, phi)) continue;
        // Pull back along the quotient map.
        QVector pulled(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < q; ++i)
                if (sgn(qr.projection.matrix.at(i, j)) != 0)
                    pulled[j] += phi[i] * qr.projection.matrix.at(i, j);
        out.characters.push_back(Character{n, std::move(pulled)});
    }
    sort_characters(out.characters);
    out.complete = all_split;
    return out;
}

CharacterSet merge_declared(const Algebra& a, const CharacterSet& found) {
    CharacterSet out = found;
    if (a.declared_characters()) {
        const auto& decl = *a.declared_characters();
        for (std::size_t i = 0; i < decl.values.size(); ++i) {
            const QVector& v = decl.values[i];
            if (v.size() != a.dim() || is_zero_vector(v) || !is_character(a, v))
                throw std::invalid_argument("declared character " + std::to_string(i) +
                                            " fails verification");
            out.characters.push_back(Character{a.dim(), v});
        }
        out.complete = out.complete || decl.complete;
    }
    sort_characters(out.characters);
    return out;
}

}  // namespace amen
