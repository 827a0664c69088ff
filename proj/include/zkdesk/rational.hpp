#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace zkdesk {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for every probability and statistic in the library.
/// Enumeration of an n-input circuit produces dyadic values (denominator 2^n);
/// protocol view distributions can introduce non-dyadic denominators, so the
/// general form is kept throughout and dyadicity is recovered on demand.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

/// num / 2^pow
inline Rational dyadic(const BigInt& num, uint32_t pow) {
    BigInt den = 1;
    den <<= pow;
    return Rational(num, den);
}

/// If r = num / 2^p in lowest terms, returns p; otherwise nullopt.
std::optional<uint32_t> denominator_pow2(const Rational& r);

double to_double(const Rational& r);

/// "num/den" in lowest terms ("0" and integers without the slash).
std::string to_string(const Rational& r);

/// Parses "a/b", decimal fractions like "0.25", or plain integers.
/// Decimal inputs are read exactly (as num/10^k) and normalized.
Rational parse_rational(const std::string& text);

/// Nearest dyadic s/2^bits to r (ties toward even s), clamped to [0, 1].
Rational snap_to_dyadic(const Rational& r, uint32_t bits);

} // namespace zkdesk
