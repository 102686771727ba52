#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace amen {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
using Rational = mpq_class;

using QVector = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p". Rejects q = 0 and malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_zero_vector(const QVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace amen
