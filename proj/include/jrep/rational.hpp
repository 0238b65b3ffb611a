#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace jrep {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exact rendering: "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `places` digits.
/// Display only; never feed the result back into a computation.
std::string to_decimal_string(const Rational& value, int places);

/// Parses "p", "-p" or "p/q" (q > 0). Throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace jrep
