#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "error.hpp"

namespace simpcoh {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw InvalidArgument("zero denominator");
    return Rational(num, den);
}

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: " + text);
    }
}

}  // namespace simpcoh
