#ifndef CALOGERO_RATIONAL_HPP
#define CALOGERO_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace calogero {

// Exact scalar field for all coefficients and coupling parameters.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or a plain integer string. Throws std::invalid_argument on
// malformed input or zero denominator.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational pow_rational(const Rational& base, long e) {
    Rational r = 1;
    Rational b = e >= 0 ? base : Rational(1) / base;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace calogero

#endif
