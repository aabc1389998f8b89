#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vdm {

// All closed-form model quantities are exact fractions; every analytic
// routine works in Rational and converts to double only for display or
// for comparison against Monte Carlo estimates.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// 2^e as an exact fraction, e may be negative.
Rational pow2(int e);

double to_double(const Rational& r);

// "num/den" ("num" when den == 1).
std::string to_fraction_string(const Rational& r);

// 15-significant-digit decimal, locale independent.
std::string to_decimal_string(const Rational& r);

// Accepts "a/b", plain integers, and decimals such as "0.03125".
Rational parse_rational(const std::string& text);

}  // namespace vdm
