// Exact rational scalars for all linear algebra in this library.
//
// Rationals are GMP mpq_class values kept in canonical form: lowest terms,
// positive denominator. Every operation in the library is exact; there is
// no floating-point mode.

#ifndef COSEGAL_RATIONAL_HPP
#define COSEGAL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cosegal {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational_of: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p" (q > 0 enforced by canonicalization).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

/// Formats in lowest terms as "p/q", omitting "/q" when q = 1.
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

}  // namespace cosegal

#endif
