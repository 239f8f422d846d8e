#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bordcalc::exact {

// Exact fraction of arbitrary-precision integers.  cpp_rational keeps every
// value in lowest terms with a positive denominator, so equality is
// structural and normalization is automatic.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& value);

// Always "n/d", including "3/1"; the canonical JSON spelling.
std::string to_fraction_string(const Rational& value);

// Accepts "a" and "a/b" with an optional leading '-'.  Throws FormatError on
// malformed input or a zero denominator.
Rational rational_from_string(std::string_view text);

// n-th power with integer (possibly negative) exponent; base must be nonzero
// for negative exponents.
Rational pow(const Rational& base, long long exponent);

// Binomial coefficient C(n, k) as an exact integer (0 when k < 0 or k > n).
Integer binomial(long long n, long long k);

// Factorial n! as an exact integer.
Integer factorial(long long n);

}  // namespace bordcalc::exact
