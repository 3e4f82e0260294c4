#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace resdiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // reduced, denominator > 0

/// Correctly rounded decimal rendering with `sig` significant digits.
/// Exact integers render without a fractional part; magnitudes outside
/// [1e-4, 10^sig) switch to exponent notation.
std::string rational_to_decimal(const Rational& r, int sig = 15);

double rational_to_double(const Rational& r);

}  // namespace resdiv
