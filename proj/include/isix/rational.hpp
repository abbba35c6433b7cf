#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace isix {

// Exact arbitrary-precision fraction; always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// "p/q" text, or plain "p" when the denominator is 1.
std::string fraction_string(const Rational& r);

/// Decimal rendering by exact long division, truncated after `digits`
/// fractional digits. Informative only; the fraction is authoritative.
std::string decimal_string(const Rational& r, int digits = 12);

}  // namespace isix
