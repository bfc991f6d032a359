#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lietower {

/// Exact rational scalar used throughout the toolkit. Always kept canonical.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_str();
}

}  // namespace lietower
