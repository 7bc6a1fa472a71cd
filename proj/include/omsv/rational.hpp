#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace omsv {

/// Exact rational scalar. Canonical form throughout: gcd(|num|, den) = 1,
/// den > 0. GMP keeps arithmetic results canonical; every entry point that
/// builds a Rational from raw parts must canonicalize.
using Rational = mpq_class;

[[nodiscard]] inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws on malformed
/// input or zero denominator.
[[nodiscard]] inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

/// -1, 0 or +1.
[[nodiscard]] inline int sign_of(const Rational& r) { return sgn(r); }

/// "p" or "p/q", lowest terms, denominator positive.
[[nodiscard]] inline std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace omsv
