#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace parasoc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p", "p/q" and finite decimals like "-0.125". Throws InputError otherwise.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// 2^-bits as a rational.
Rational pow2_inverse(unsigned bits);

}  // namespace parasoc
