#pragma once

// Trace forms Q(x) = Tr_{q^m/q}(gamma x^{q^ell+1}), their value counts,
// exponential sums and rank/type classification.

#include <cstdint>
#include <optional>
#include <vector>

#include "gpg/bigint.hpp"
#include "gpg/error.hpp"
#include "gpg/finite_field.hpp"
#include "gpg/number_theory.hpp"

namespace gpg {

struct TraceForm {
  const FieldTable* field = nullptr;
  FieldElement gamma{1};
  unsigned ell = 1;

  unsigned s() const { return field->params().s; }
  unsigned m() const { return field->params().m; }
};

inline TraceForm make_trace_form(const FieldTable& field, FieldElement gamma, unsigned ell) {
  if (gamma.value == 0) fail(ErrorCode::ZeroElement, "trace form needs gamma != 0");
  return {&field, gamma, ell};
}

struct FormClass {
  unsigned rank = 0;
  int type = 1;  // epsilon_Q

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

/// nu(0) = q - 1, nu(z) = -1 otherwise.
inline BigInt nu(const BigInt& q, bool xi_is_zero) { return xi_is_zero ? BigInt(q - 1) : BigInt(-1); }

/// (-1)^{m_ell / 2}.
inline int epsilon_ell(unsigned m, unsigned ell) {
  const unsigned m_ell = m / std::gcd(m, ell);
  return (m_ell / 2) % 2 == 0 ? 1 : -1;
}

namespace detail {

inline std::uint64_t form_exponent(const FieldTable& f, unsigned ell) {
  // q^ell + 1 reduced mod p^n - 1; exponents are only used as powers of units.
  const std::uint64_t q_ell = pow_mod(f.p(), std::uint64_t{f.params().s} * ell, f.group_order());
  return (q_ell + 1) % f.group_order();
}

}  // namespace detail

inline FieldElement evaluate_form(const TraceForm& form, FieldElement x) {
  const FieldTable& f = *form.field;
  if (x.value == 0) return f.zero();
  const FieldElement power = f.pow(x, detail::form_exponent(f, form.ell));
  return f.trace(f.mul(form.gamma, power), f.degree(), form.s());
}

/// N_Q(xi) by exhaustive evaluation.
inline BigInt count_kernel(const TraceForm& form, FieldElement xi) {
  const FieldTable& f = *form.field;
  if (!f.in_subfield(xi, form.s())) fail(ErrorCode::NotASubfield, "xi must lie in F_q");
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) count += evaluate_form(form, {x}) == xi ? 1 : 0;
  return BigInt(count);
}

/// T_{Q,a} = sum_x zeta_p^{Tr_{q/p}(a Q(x))}, computed by tallying the residues
/// c = Tr_{q/p}(a Q(x)) in F_p. The sum is a rational integer exactly when
/// every nonzero residue occurs equally often, in which case it is N_0 - N_1.
inline BigInt exp_sum(const TraceForm& form, FieldElement a) {
  const FieldTable& f = *form.field;
  if (a.value == 0) fail(ErrorCode::ZeroElement, "exp_sum needs a != 0");
  if (!f.in_subfield(a, form.s())) fail(ErrorCode::NotASubfield, "a must lie in F_q");
  std::vector<std::uint64_t> tally(f.p(), 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const FieldElement value = f.mul(a, evaluate_form(form, {x}));
    const FieldElement c = f.trace(value, form.s(), 1);
    ++tally[c.value];  // prime-field elements are encoded 0..p-1
  }
  for (std::uint32_t c = 2; c < f.p(); ++c) {
    if (tally[c] != tally[1]) {
      fail(ErrorCode::UnbalancedCounts, "residue counts differ: N_1=" + std::to_string(tally[1]) + " N_" +
                                            std::to_string(c) + "=" + std::to_string(tally[c]));
    }
  }
  return BigInt(tally[0]) - BigInt(tally[1]);
}

/// Closed classification. Even q: gamma in S_ell gives rank m - 2(m,ell) and
/// type -eps; otherwise rank m and type eps. Odd q: decided by t = log gamma
/// modulo L = q^{(m,ell)} + 1.
inline FormClass classify_form(const TraceForm& form) {
  const FieldTable& f = *form.field;
  const unsigned m = form.m();
  const unsigned ell = form.ell;
  const unsigned g = std::gcd(m, ell);
  if ((m / g) % 2 != 0) fail(ErrorCode::OutOfTheory, "m_ell is odd, the form has odd rank");
  const int eps = epsilon_ell(m, ell);
  const unsigned low = m - 2 * g;
  const std::uint64_t t = f.log(form.gamma);
  const std::uint64_t L = detail::pow_mod(f.p(), std::uint64_t{form.s()} * g, std::uint64_t{1} << 62) + 1;
  if (f.p() == 2) {
    // S_ell is the subgroup of index L.
    const bool in_s = t % L == 0;
    return in_s ? FormClass{low, -eps} : FormClass{m, eps};
  }
  if (eps == 1) return t % L == 0 ? FormClass{low, -1} : FormClass{m, 1};
  return t % L == L / 2 ? FormClass{low, 1} : FormClass{m, -1};
}

/// Inverts N_Q(0) = q^{m-1} + eps (q-1) q^{m-r/2-1}. Returns nothing when the
/// count does not have that shape (odd rank, or an inconsistent count).
inline std::optional<FormClass> class_from_kernel(const BigInt& q, unsigned m, const BigInt& n_zero) {
  const BigInt base = big_pow(q, m - 1);
  BigInt diff = n_zero - base;
  if (diff == 0) return std::nullopt;
  const int type = diff > 0 ? 1 : -1;
  diff = big_abs(diff);
  if (diff % (q - 1) != 0) return std::nullopt;
  BigInt rest = diff / (q - 1);
  unsigned e = 0;  // rest = q^e with e = m - r/2 - 1
  while (rest > 1) {
    if (rest % q != 0) return std::nullopt;
    rest /= q;
    ++e;
  }
  if (e + 1 > m) return std::nullopt;
  const unsigned rank = 2 * (m - 1 - e);
  return FormClass{rank, type};
}

/// Expected N_Q(xi) for a given class.
inline BigInt expected_count(const BigInt& q, unsigned m, const FormClass& cls, bool xi_is_zero) {
  // q^{m-r/2-1} may be fractional only for r = 2m, which is not an even-rank
  // count of a nonzero form over F_q^m; guard anyway.
  const long e = static_cast<long>(m) - static_cast<long>(cls.rank / 2) - 1;
  if (e < 0) fail(ErrorCode::OutOfTheory, "rank too large for the count formula");
  return big_pow(q, m - 1) + BigInt(cls.type) * nu(q, xi_is_zero) * big_pow(q, static_cast<std::uint64_t>(e));
}

/// T_Q = eps q^{m - r/2}.
inline BigInt expected_exp_sum(const BigInt& q, unsigned m, const FormClass& cls) {
  return BigInt(cls.type) * big_pow(q, m - cls.rank / 2);
}

}  // namespace gpg
