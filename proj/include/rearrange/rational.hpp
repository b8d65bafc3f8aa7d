#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace rearrange {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q" with q > 0, always with an explicit denominator.
std::string format_fraction(const Rational& r);
/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);
/// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

}  // namespace rearrange
