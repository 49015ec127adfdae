#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairalloc {

// All welfare comparisons are exact.  Nash products over hundreds of agents
// overflow any fixed-width integer, so products, thresholds, and tie-break
// ranks are arbitrary-precision integers; shares and achieved approximation
// ratios are exact rationals.  No floating point is ever compared.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Individual valuations and utilities are machine integers; aggregates that
// can grow (products, powers) are BigInt.
using Value = long long;

// base^exp for non-negative exp.
BigInt ipow(const BigInt& base, unsigned long exp);

// Smallest t >= 0 with 2^t >= x.  Requires x >= 1.
long long ceil_log2(const BigInt& x);

std::string to_decimal(const BigInt& x);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_decimal(const Rational& r);

// Accepts "p" or "p/q" with optional leading minus; q > 0.  Throws
// ValidationError on anything else (including empty or non-numeric text).
Rational parse_rational(const std::string& text);

}  // namespace fairalloc
