#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bjsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// Parses "a/b" or a plain integer string.
Rational parse_rational(const std::string& text);

/// Canonical "a/b" form ("a" when the denominator is 1).
std::string rational_to_string(const Rational& r);

/// Exact decimal expansion when the denominator is of the form 2^a*5^b,
/// otherwise a rounded 17-decimal-place approximation.
std::string rational_to_decimal(const Rational& r);

}  // namespace bjsp
