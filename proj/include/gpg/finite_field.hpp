#pragma once

// Table-backed arithmetic in F_{p^n}, n = s*m.
//
// Elements are addressed by their canonical encoding: the coefficient vector
// (c_0, ..., c_{n-1}) of the polynomial representative, read as the base-p
// integer c_0 + c_1 p + ... . Encoding 0 is the zero element and encoding 1
// is the identity. Multiplication goes through the discrete log tables and
// addition through the Zech table, so both are O(1).

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "gpg/bigint.hpp"
#include "gpg/budget.hpp"
#include "gpg/error.hpp"
#include "gpg/number_theory.hpp"

namespace gpg {

struct FieldParams {
  std::uint64_t p = 2;
  unsigned s = 1;
  unsigned m = 1;

  unsigned degree() const { return s * m; }
  BigInt q() const { return big_pow(p, s); }
  BigInt order() const { return big_pow(p, degree()); }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = factor * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly product(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(product), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1U) result = poly_mulmod(result, base, f, p);
    exp >>= 1;
    if (exp > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: f of degree n is irreducible iff x^{p^n} = x mod f and
/// gcd(x^{p^{n/r}} - x, f) = 1 for every prime r dividing n.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // frob[k] = x^{p^k} mod f
  std::vector<Poly> frob(n + 1);
  frob[0] = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t k = 1; k <= n; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  auto minus_x = [&](Poly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!minus_x(frob[n]).empty()) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    Poly g = poly_gcd(minus_x(frob[n / r]), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class FieldTable {
 public:
  static constexpr std::uint32_t kNoZech = std::numeric_limits<std::uint32_t>::max();

  const FieldParams& params() const { return params_; }
  std::uint32_t p() const { return p_; }
  unsigned degree() const { return n_; }
  /// Number of field elements, p^n.
  std::uint32_t size() const { return size_; }
  /// Order of the multiplicative group, p^n - 1.
  std::uint32_t group_order() const { return size_ - 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement alpha() const { return alpha_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement minus_one() const { return {p_ - 1}; }

  FieldElement element(std::uint32_t encoding) const {
    if (encoding >= size_) fail(ErrorCode::InvalidArgument, "element encoding out of range");
    return {encoding};
  }

  /// alpha^i for any integer exponent (reduced mod p^n - 1).
  FieldElement exp(std::uint64_t i) const { return {exp_[i % group_order()]}; }
  std::uint32_t log(FieldElement x) const {
    if (x.value == 0) fail(ErrorCode::ZeroElement, "discrete log of zero");
    return log_[x.value];
  }
  /// Zech logarithm: alpha^zech(i) = 1 + alpha^i, or kNoZech when 1 + alpha^i = 0.
  std::uint32_t zech(std::uint32_t i) const { return zech_[i % group_order()]; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    return {exp_[mod_n(std::uint64_t{log_[a.value]} + log_[b.value])]};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (a.value == 0) return b;
    if (b.value == 0) return a;
    const std::uint32_t la = log_[a.value];
    const std::uint32_t lb = log_[b.value];
    const std::uint32_t z = zech_[lb >= la ? lb - la : lb + group_order() - la];
    if (z == kNoZech) return zero();
    return {exp_[mod_n(std::uint64_t{la} + z)]};
  }

  /// Coefficient-wise addition; independent of the Zech table.
  FieldElement add_digitwise(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.value ^ b.value};
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    std::uint32_t x = a.value;
    std::uint32_t y = b.value;
    for (unsigned i = 0; i < n_; ++i) {
      result += ((x % p_ + y % p_) % p_) * place;
      x /= p_;
      y /= p_;
      place *= p_;
    }
    return {result};
  }

  FieldElement neg(FieldElement a) const { return p_ == 2 ? a : mul(a, minus_one()); }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement inv(FieldElement a) const {
    if (a.value == 0) fail(ErrorCode::ZeroElement, "inverse of zero");
    const std::uint32_t l = log_[a.value];
    return {exp_[l == 0 ? 0 : group_order() - l]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, const BigInt& e) const {
    if (a.value == 0) return e == 0 ? one() : zero();
    const BigInt reduced = (BigInt(log_[a.value]) * e) % group_order();
    return {exp_[reduced.convert_to<std::uint64_t>()]};
  }

  FieldElement pow(FieldElement a, std::uint64_t e) const {
    if (a.value == 0) return e == 0 ? one() : zero();
    return {exp_[mul_mod(log_[a.value], e % group_order(), group_order())]};
  }

  /// x^{p^i}.
  FieldElement frobenius(FieldElement x, std::uint64_t i) const {
    if (x.value == 0) return x;
    return pow(x, detail::pow_mod(p_, i, group_order()));
  }

  bool in_subfield(FieldElement x, unsigned sub_degree) const {
    return n_ % sub_degree == 0 && frobenius(x, sub_degree) == x;
  }

  /// Elements of the subfield with p^sub_degree elements, ascending encoding.
  std::vector<FieldElement> subfield(unsigned sub_degree) const {
    if (sub_degree == 0 || n_ % sub_degree != 0) {
      fail(ErrorCode::NotASubfield, "degree " + std::to_string(sub_degree) + " does not divide " +
                                        std::to_string(n_));
    }
    const std::uint64_t sub_size = detail::pow_mod(p_, sub_degree, std::numeric_limits<std::uint64_t>::max());
    const std::uint64_t step = group_order() / (sub_size - 1);
    std::vector<FieldElement> result{zero()};
    for (std::uint64_t j = 0; j + 1 < sub_size; ++j) result.push_back(exp(j * step));
    std::sort(result.begin(), result.end());
    return result;
  }

  /// Tr_{p^from / p^to}(x) = sum_{i < from/to} x^{(p^to)^i}.
  FieldElement trace(FieldElement x, unsigned from_degree, unsigned to_degree) const {
    if (to_degree == 0 || from_degree == 0 || from_degree % to_degree != 0 || n_ % from_degree != 0) {
      fail(ErrorCode::NotASubfield, "trace from degree " + std::to_string(from_degree) + " to " +
                                        std::to_string(to_degree) + " in a degree " + std::to_string(n_) +
                                        " field");
    }
    if (!in_subfield(x, from_degree)) {
      fail(ErrorCode::NotASubfield, "element is not in the degree " + std::to_string(from_degree) + " subfield");
    }
    FieldElement sum = zero();
    FieldElement term = x;
    for (unsigned i = 0; i < from_degree / to_degree; ++i) {
      sum = add(sum, term);
      term = frobenius(term, to_degree);
    }
    return sum;
  }

  /// Multiplicative order, found by stripping prime factors of p^n - 1 while
  /// the power stays 1.
  BigInt element_order(FieldElement x) const {
    if (x.value == 0) fail(ErrorCode::ZeroElement, "order of zero");
    std::uint64_t order = group_order();
    for (std::uint64_t r : group_primes_) {
      while (order % r == 0 && pow(x, order / r) == one()) order /= r;
    }
    return BigInt(order);
  }

  std::vector<std::uint32_t> digits(FieldElement x) const {
    std::vector<std::uint32_t> result(n_);
    std::uint32_t v = x.value;
    for (unsigned i = 0; i < n_; ++i) {
      result[i] = v % p_;
      v /= p_;
    }
    return result;
  }

  FieldElement from_digits(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != n_) fail(ErrorCode::InvalidArgument, "coefficient vector has wrong length");
    std::uint32_t value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= p_) fail(ErrorCode::InvalidArgument, "coefficient out of range");
      value = value * p_ + coeffs[i];
    }
    return {value};
  }

  /// Little-endian base-p digit string: one character per digit for p <= 10,
  /// comma-separated decimal digits otherwise.
  std::string digit_string(FieldElement x) const {
    std::string out;
    for (std::uint32_t d : digits(x)) {
      if (p_ <= 10) {
        out.push_back(static_cast<char>('0' + d));
      } else {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(d);
      }
    }
    return out;
  }

  FieldElement parse_digit_string(const std::string& text) const {
    std::vector<std::uint32_t> coeffs;
    if (p_ <= 10) {
      for (char c : text) coeffs.push_back(static_cast<std::uint32_t>(c - '0'));
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    return from_digits(coeffs);
  }

  friend FieldTable build_field(const FieldParams& params, const Budget& budget);

 private:
  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return detail::mul_mod(a, b, mod);
  }
  std::uint32_t mod_n(std::uint64_t v) const { return static_cast<std::uint32_t>(v % group_order()); }

  FieldParams params_;
  std::uint32_t p_ = 2;
  unsigned n_ = 1;
  std::uint32_t size_ = 2;
  std::vector<std::uint32_t> modulus_;
  FieldElement alpha_{1};
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint64_t> group_primes_;
};

/// Builds F_{p^{s m}} with the lexicographically least monic irreducible
/// modulus and the primitive element of least encoding.
inline FieldTable build_field(const FieldParams& params, const Budget& budget = {}) {
  if (params.s == 0 || params.m == 0) fail(ErrorCode::InvalidArgument, "s and m must be positive");
  if (!is_prime(params.p)) fail(ErrorCode::CompositeP, std::to_string(params.p) + " is not prime");
  const BigInt order = params.order();
  if (order > BigInt(budget.field_order) || order > BigInt(std::numeric_limits<std::uint32_t>::max())) {
    fail(ErrorCode::BudgetExceeded, "field of order " + order.str() + " exceeds the materialization budget " +
                                        std::to_string(budget.field_order));
  }

  FieldTable table;
  table.params_ = params;
  table.p_ = static_cast<std::uint32_t>(params.p);
  table.n_ = params.degree();
  table.size_ = order.convert_to<std::uint32_t>();
  const std::uint32_t p = table.p_;
  const unsigned n = table.n_;
  const std::uint32_t size = table.size_;
  const std::uint32_t group_order = size - 1;

  // Lexicographically least monic irreducible: the non-leading coefficients,
  // read as a base-p integer, ascending.
  for (std::uint32_t tail = 0; tail < size; ++tail) {
    detail::Poly f(n + 1);
    std::uint32_t v = tail;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[n] = 1;
    if (detail::is_irreducible(f, p)) {
      table.modulus_ = f;
      break;
    }
  }
  ensure(!table.modulus_.empty(), "no irreducible polynomial found");
  const detail::Poly& f = table.modulus_;

  table.group_primes_ = prime_divisors(group_order);
  auto as_poly = [&](std::uint32_t encoding) {
    detail::Poly g(n);
    for (unsigned i = 0; i < n; ++i) {
      g[i] = encoding % p;
      encoding /= p;
    }
    detail::trim(g);
    return g;
  };
  auto is_primitive = [&](std::uint32_t encoding) {
    const detail::Poly g = as_poly(encoding);
    if (g.empty()) return false;
    if (group_order == 1) return true;
    for (std::uint64_t r : table.group_primes_) {
      if (detail::poly_powmod(g, group_order / r, f, p) == detail::Poly{1}) return false;
    }
    return true;
  };
  std::uint32_t alpha = 1;
  while (!is_primitive(alpha)) ++alpha;
  table.alpha_ = {alpha};

  // exp table by repeated multiplication with alpha = sum_j a_j x^j, using
  // only multiplication by x (shift and reduce).
  const std::vector<std::uint32_t> alpha_coeffs = table.digits({alpha});
  auto times_x = [&](std::vector<std::uint32_t>& c) {
    const std::uint32_t top = c[n - 1];
    for (unsigned i = n - 1; i > 0; --i) c[i] = c[i - 1];
    c[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < n; ++i) {
        c[i] = static_cast<std::uint32_t>((c[i] + std::uint64_t{p - f[i]} % p * top) % p);
      }
    }
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t value = 0;
    for (unsigned i = n; i-- > 0;) value = value * p + c[i];
    return value;
  };

  table.exp_.assign(group_order, 0);
  table.log_.assign(size, 0);
  std::vector<std::uint32_t> current(n, 0);
  current[0] = 1;
  for (std::uint32_t i = 0; i < group_order; ++i) {
    const std::uint32_t value = encode(current);
    table.exp_[i] = value;
    table.log_[value] = i;
    std::vector<std::uint32_t> next(n, 0);
    std::vector<std::uint32_t> shifted = current;
    for (unsigned j = 0; j < n; ++j) {
      if (alpha_coeffs[j] != 0) {
        for (unsigned t = 0; t < n; ++t) {
          next[t] = static_cast<std::uint32_t>((next[t] + std::uint64_t{alpha_coeffs[j]} * shifted[t]) % p);
        }
      }
      if (j + 1 < n) times_x(shifted);
    }
    current = std::move(next);
  }
  ensure(encode(current) == 1, "alpha^(p^n-1) != 1");

  // 1 + alpha^i only changes the constant coefficient.
  table.zech_.assign(group_order, FieldTable::kNoZech);
  for (std::uint32_t i = 0; i < group_order; ++i) {
    const std::uint32_t value = table.exp_[i];
    const std::uint32_t c0 = value % p;
    const std::uint32_t shifted = value - c0 + (c0 + 1) % p;
    if (shifted != 0) table.zech_[i] = table.log_[shifted];
  }
  return table;
}

}  // namespace gpg
