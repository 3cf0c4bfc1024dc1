#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace monocross {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) with exact arithmetic; returns 0 for k > n or negative n.
BigInt binomial(const BigInt& n, unsigned k);
inline BigInt binomial2(const BigInt& n) { return binomial(n, 2); }

// Parses "p", "-p" or "p/q" (no whitespace). Throws std::invalid_argument.
Rational parse_rational(const std::string& token);

// "p/q" if the denominator is not 1, plain "p" otherwise.
std::string format_rational(const Rational& r);

// Decimal rendering with `digits` fractional digits, rounded half away
// from zero. Exact long division; no floating point involved.
std::string decimal_string(const Rational& r, int digits);

}  // namespace monocross
