#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace wcx {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
/// Parses "p", "-p" or "p/q"; throws InputError otherwise or on q = 0.
Rational parse_rational(std::string_view text);

}  // namespace wcx
