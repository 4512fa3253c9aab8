#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "gpg/error.hpp"

namespace gpg {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return big_pow(BigInt(base), exponent);
}

/// Division that must be exact. Every closed form in this library divides
/// quantities that are proven divisible; a remainder is an internal error.
inline BigInt exact_div(const BigInt& numerator, const BigInt& denominator, const char* where) {
  if (denominator == 0) fail(ErrorCode::InternalError, std::string(where) + ": division by zero");
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    fail(ErrorCode::InternalError, std::string(where) + ": inexact division " + numerator.str() +
                                       " / " + denominator.str());
  }
  return quotient;
}

inline BigInt to_integer(const Rational& value, const char* where) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den != 1) fail(ErrorCode::InternalError, std::string(where) + ": non-integral value " + value.str());
  return boost::multiprecision::numerator(value);
}

inline BigInt floor_of(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& value) { return -floor_of(-value); }

inline BigInt isqrt(const BigInt& value) {
  if (value < 0) fail(ErrorCode::InvalidArgument, "isqrt of negative value");
  return boost::multiprecision::sqrt(value);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// Euclid's algorithm written out, kept separate from the library gcd so that
/// callers can cross-check one against the other.
inline BigInt euclid_gcd(BigInt a, BigInt b) {
  a = big_abs(a);
  b = big_abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline unsigned v2(std::uint64_t value) {
  if (value == 0) return 64;
  unsigned count = 0;
  while ((value & 1U) == 0) {
    value >>= 1;
    ++count;
  }
  return count;
}

inline std::uint64_t to_u64(const BigInt& value, const char* where) {
  if (value < 0 || value > BigInt(UINT64_MAX)) {
    fail(ErrorCode::BudgetExceeded, std::string(where) + ": value does not fit 64 bits: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace gpg
