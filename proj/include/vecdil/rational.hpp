#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "vecdil/errors.hpp"

namespace vecdil {

// Exact scalar types. Everything in the computational core runs on these;
// there is no floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Floor division t/a for a >= 1: the greatest integer <= t/a. Plain integer
// division truncates toward zero, which differs for negative t.
inline Int floor_div(const Int& t, const Int& a) {
    if (a <= 0)
        fail(errc::invalid_argument, "floor_div: divisor must be positive");
    Int q = t / a;
    Int r = t % a;
    if (r != 0 && t < 0)
        --q;
    return q;
}

inline Int ceil_div(const Int& t, const Int& a) {
    if (a <= 0)
        fail(errc::invalid_argument, "ceil_div: divisor must be positive");
    return -floor_div(-t, a);
}

inline Int floor_rat(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

inline Int ceil_rat(const Rational& q) {
    return ceil_div(numerator(q), denominator(q));
}

// Nonnegative residue of v modulo p >= 1 (mathematical mod, result in [0, p)).
inline Int math_mod(const Int& v, const Int& p) {
    if (p <= 0)
        fail(errc::invalid_argument, "math_mod: modulus must be positive");
    Int r = v % p;
    if (r < 0)
        r += p;
    return r;
}

// Canonical "p/q" form, denominator always printed.
inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text);

} // namespace vecdil
