#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "gpg/bigint.hpp"
#include "gpg/error.hpp"

namespace gpg {

namespace detail {

using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

inline bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

inline std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2;
    std::uint64_t y = 2;
    std::uint64_t d = 1;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are sufficient
/// for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (detail::miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

/// Prime factorization as prime -> exponent, by trial division up to a small
/// bound and Pollard rho beyond it.
inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> factors;
  if (n < 2) return factors;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++factors[p];
      n /= p;
    }
  }
  std::vector<std::uint64_t> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    std::uint64_t value = pending.back();
    pending.pop_back();
    if (value == 1) continue;
    if (is_prime(value)) {
      ++factors[value];
      continue;
    }
    std::uint64_t divisor = detail::pollard_rho(value);
    pending.push_back(divisor);
    pending.push_back(value / divisor);
  }
  return factors;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(p);
  return primes;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      result.push_back(d);
      if (d != n / d) result.push_back(n / d);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// If n = p^s for a prime p, returns {p, s}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  auto factors = factorize(n);
  if (factors.size() != 1) return {0, 0};
  return {factors.begin()->first, factors.begin()->second};
}

/// gcd(q^m - 1, q^ell + 1) from the 2-adic valuation rule, checked against a
/// direct Euclidean gcd. Disagreement is an internal error.
inline BigInt gcd_power(const BigInt& q, std::uint64_t m, std::uint64_t ell) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "gcd_power requires q >= 2");
  if (m == 0) fail(ErrorCode::InvalidArgument, "gcd_power requires m >= 1");
  BigInt by_rule;
  if (v2(m) > v2(ell)) {
    by_rule = big_pow(q, std::gcd(m, ell)) + 1;
  } else if (q % 2 != 0) {
    by_rule = 2;
  } else {
    by_rule = 1;
  }
  const BigInt by_euclid = euclid_gcd(big_pow(q, m) - 1, big_pow(q, ell) + 1);
  ensure(by_rule == by_euclid, "gcd_power: valuation rule " + by_rule.str() + " disagrees with Euclid " +
                                   by_euclid.str());
  return by_rule;
}

}  // namespace gpg
