#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "eh/errors.hpp"

namespace eh {

// Exact arithmetic for every correctness-bearing comparison. The constant
// schedule multiplies rationals like 3^-38/2700, far outside int64 range.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(unsigned base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// Canonical "p/q" with q > 0, lowest terms (cpp_rational keeps that form).
std::string to_fraction_string(const Rational& r);

// Accepts "p/q" or a bare integer "p". Throws ParameterError on bad syntax
// or zero denominator.
Rational parse_fraction(std::string_view text);

}  // namespace eh
