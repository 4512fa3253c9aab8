#pragma once

// Closed forms for the family: spectra, strongly regular parameters,
// intersection arrays, closed walks, spanning trees and invariant bounds.
// Everything is exact integer (or rational) arithmetic and needs no field.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpg/bigint.hpp"
#include "gpg/error.hpp"
#include "gpg/paley_graphs.hpp"

namespace gpg {

/// Derived quantities of a proper spec, shared by every closed form below.
struct FamilyData {
  GraphSpec spec;
  unsigned m = 0;
  unsigned ell = 0;
  int eps = 1;           // (-1)^{m_ell/2}
  bool half_odd = true;  // m_ell / 2 odd
  bool at_half = false;  // ell = m/2
  BigInt q, v, q_ell, q_half;
  BigInt k, upsilon, mu;  // primal eigenvalues (ell != m/2)
};

inline FamilyData family_data(const GraphSpec& spec) {
  validate(spec);
  if (!spec.proper()) {
    fail(ErrorCode::NotInFamily, spec.label() + " is not in the family (needs ell | m, m/ell even, 1 <= ell <= m/2)");
  }
  FamilyData d;
  d.spec = spec;
  d.m = spec.m;
  d.ell = spec.ell;
  const unsigned half_m_ell = spec.m_ell() / 2;
  d.half_odd = half_m_ell % 2 == 1;
  d.eps = d.half_odd ? -1 : 1;
  d.at_half = spec.half();
  d.q = spec.q();
  d.v = spec.order();
  d.q_ell = spec.q_pow(spec.ell);
  d.q_half = spec.q_pow(spec.m / 2);
  d.k = exact_div(d.v - 1, d.q_ell + 1, "k");
  d.upsilon = exact_div(BigInt(d.eps) * d.q_half - 1, d.q_ell + 1, "upsilon");
  d.mu = exact_div(BigInt(-d.eps) * d.q_half * d.q_ell - 1, d.q_ell + 1, "mu");
  return d;
}

struct Spectrum {
  std::vector<std::pair<BigInt, BigInt>> pairs;  // (eigenvalue, multiplicity), strictly decreasing

  const BigInt& largest() const { return pairs.front().first; }
  /// Second largest distinct eigenvalue.
  const BigInt& second() const { return pairs.at(1).first; }
  const BigInt& smallest() const { return pairs.back().first; }

  BigInt multiplicity(const BigInt& eigenvalue) const {
    for (const auto& [value, mult] : pairs) {
      if (value == eigenvalue) return mult;
    }
    return 0;
  }

  /// sum mult * lambda^r.
  BigInt moment(unsigned r) const {
    BigInt total = 0;
    for (const auto& [value, mult] : pairs) total += mult * big_pow(value, r);
    return total;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

namespace detail {

inline Spectrum make_spectrum(std::vector<std::pair<BigInt, BigInt>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  // Merge equal eigenvalues; only the degenerate (2,2,1) produces one.
  std::vector<std::pair<BigInt, BigInt>> merged;
  for (auto& entry : pairs) {
    if (!merged.empty() && merged.back().first == entry.first) {
      merged.back().second += entry.second;
    } else {
      merged.push_back(std::move(entry));
    }
  }
  return {std::move(merged)};
}

}  // namespace detail

/// The three named eigenvalues with multiplicities; for ell = m/2 the primal
/// has only two distinct values and the complement three.
struct NamedEigenvalues {
  BigInt k, upsilon, mu;
  BigInt mult_k, mult_upsilon, mult_mu;
};

inline NamedEigenvalues named_eigenvalues(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  NamedEigenvalues e;
  if (d.at_half) {
    const BigInt& a = d.q_half;
    if (!spec.complemented) {
      // a K_a: the multiplicity of k absorbs the mu eigenspace.
      e = {a - 1, BigInt(-1), a - 1, a, a * (a - 1), BigInt(0)};
    } else {
      e = {a * (a - 1), BigInt(0), BigInt(-a), BigInt(1), a * (a - 1), a - 1};
    }
    return e;
  }
  if (!spec.complemented) return {d.k, d.upsilon, d.mu, BigInt(1), d.q_ell * d.k, d.k};
  return {d.q_ell * d.k, -1 - d.upsilon, -1 - d.mu, BigInt(1), d.q_ell * d.k, d.k};
}

inline Spectrum spectrum(const GraphSpec& spec) {
  const NamedEigenvalues e = named_eigenvalues(spec);
  std::vector<std::pair<BigInt, BigInt>> pairs{{e.k, e.mult_k}, {e.upsilon, e.mult_upsilon}};
  if (e.mult_mu != 0) pairs.emplace_back(e.mu, e.mult_mu);
  Spectrum result = detail::make_spectrum(std::move(pairs));
  const BigInt v = spec.order();
  ensure(result.moment(0) == v, spec.label() + ": multiplicities do not sum to v");
  ensure(result.moment(1) == 0, spec.label() + ": trace is not zero");
  ensure(result.moment(2) == v * e.k, spec.label() + ": second moment is not v k");
  return result;
}

/// Checks the eigenvalue relations; returns the falsified ones by name.
inline std::vector<std::string> eigenvalue_relations_check(const GraphSpec& spec) {
  GraphSpec primal = spec;
  primal.complemented = false;
  const FamilyData d = family_data(primal);
  if (d.at_half) fail(ErrorCode::NotApplicable, "eigenvalue relations need ell != m/2");
  std::vector<std::string> failed;
  auto check = [&](bool ok, const char* name) {
    if (!ok) failed.emplace_back(name);
  };
  const NamedEigenvalues bar = named_eigenvalues(primal.complement());
  check(d.k == (BigInt(d.eps) * d.q_half + 1) * d.upsilon, "k = (eps q^{m/2} + 1) upsilon");
  check(-d.q_ell * d.upsilon == d.mu + 1, "-q^ell upsilon = mu + 1");
  check(big_gcd(big_abs(d.upsilon), big_abs(d.mu)) == 1, "gcd(upsilon, mu) = 1");
  check(bar.k == d.q_ell * d.k, "bar k = q^ell k");
  check(bar.mu == d.q_ell * d.upsilon, "bar mu = q^ell upsilon");
  check((bar.upsilon + 1) * d.q_ell == d.mu + 1, "bar upsilon + 1 = (mu + 1) / q^ell");
  // Complementing sends each nontrivial eigenvalue lambda to -1 - lambda.
  check(d.upsilon + bar.upsilon == -1, "upsilon + bar upsilon = -1");
  check(d.mu + bar.mu == -1, "mu + bar mu = -1");
  check(bar.upsilon % d.q_ell == 0 && bar.mu % d.q_ell == 0 && bar.k % d.q_ell == 0,
        "complement eigenvalues are multiples of q^ell");
  check(big_gcd(big_abs(bar.upsilon / d.q_ell), big_abs(bar.mu / d.q_ell)) == 1,
        "gcd(bar upsilon / q^ell, bar mu / q^ell) = 1");
  return failed;
}

struct SrgRecord {
  BigInt v, k, e, d;
  bool primitive = true;
  bool conference = false;
  std::optional<std::pair<BigInt, BigInt>> latin_square;  // (s, u)
  bool ramanujan = false;
  BigInt vertex_connectivity;
};

/// (v - k - 1) d = k (k - e - 1).
inline bool srg_feasible(const BigInt& v, const BigInt& k, const BigInt& e, const BigInt& d) {
  return (v - k - 1) * d == k * (k - e - 1);
}

/// Squared comparison max |lambda|^2 <= 4 (k - 1) over the nontrivial spectrum.
inline bool ramanujan_by_spectrum(const Spectrum& spec_values, const BigInt& k) {
  BigInt worst = 0;
  bool skipped_k = false;
  for (const auto& [value, mult] : spec_values.pairs) {
    BigInt remaining = mult;
    if (!skipped_k && value == k) {
      remaining -= 1;
      skipped_k = true;
    }
    if (remaining > 0) worst = std::max(worst, big_abs(value));
  }
  return worst * worst <= 4 * (k - 1);
}

inline std::optional<std::pair<BigInt, BigInt>> latin_square_class(const GraphSpec& spec);

inline SrgRecord srg_params(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  SrgRecord rec;
  rec.v = d.v;
  if (d.at_half) {
    const BigInt& a = d.q_half;
    const BigInt k = a - 1;
    if (!spec.complemented) {
      if (k == 1) fail(ErrorCode::DegenerateGraph, spec.label() + " = 2K_2 has no meaningful srg parameters");
      rec.k = k;
      rec.e = k - 1;
      rec.d = 0;
    } else {
      rec.k = a * k;
      rec.e = a * (k - 1);
      rec.d = a * k;
    }
    rec.primitive = false;
  } else {
    const BigInt denom = (d.q_ell + 1) * (d.q_ell + 1);
    const BigInt eps(d.eps);
    const BigInt e = exact_div(d.v - eps * spec.q_pow(d.m / 2 + d.ell) * (d.q_ell - 1) - 3 * d.q_ell - 2, denom, "e");
    const BigInt dd = exact_div(d.v + eps * d.q_half * (d.q_ell - 1) - d.q_ell, denom, "d");
    if (!spec.complemented) {
      rec.k = d.k;
      rec.e = e;
      rec.d = dd;
    } else {
      rec.k = d.q_ell * d.k;
      rec.e = exact_div(d.q_ell * d.q_ell * (d.v - 2) + eps * d.q_half * (d.q_ell - 1) - 3 * d.q_ell, denom, "bar e");
      rec.d = exact_div(d.q_ell * (d.v * d.q_ell - 1) - eps * spec.q_pow(d.m / 2 + d.ell) * (d.q_ell - 1), denom,
                        "bar d");
      // Complement identities: bar e = v - 2 - 2k + d, bar d = v - 2k + e.
      ensure(rec.e == d.v - 2 - 2 * d.k + dd, spec.label() + ": bar e disagrees with the complement identity");
      ensure(rec.d == d.v - 2 * d.k + e, spec.label() + ": bar d disagrees with the complement identity");
    }
    rec.primitive = true;
  }
  ensure(srg_feasible(rec.v, rec.k, rec.e, rec.d), spec.label() + ": (v-k-1)d != k(k-e-1)");
  rec.conference = 2 * rec.k + (rec.v - 1) * (rec.e - rec.d) == 0;
  if (!d.at_half && !spec.complemented) rec.latin_square = latin_square_class(spec);
  rec.ramanujan = (d.at_half && !spec.complemented) ? false : ramanujan_by_spectrum(spectrum(spec), rec.k);
  rec.vertex_connectivity = (d.at_half && !spec.complemented) ? BigInt(0) : rec.k;
  return rec;
}

/// The srg-parameterized eigenvalues (e-d +- Delta)/2 and multiplicities;
/// nullopt when Delta is irrational.
inline std::optional<Spectrum> spectrum_from_srg(const SrgRecord& rec) {
  const BigInt disc = (rec.e - rec.d) * (rec.e - rec.d) + 4 * (rec.k - rec.d);
  const BigInt delta = isqrt(disc);
  if (delta * delta != disc || delta == 0) return std::nullopt;
  const BigInt plus = exact_div(rec.e - rec.d + delta, 2, "lambda+");
  const BigInt minus = exact_div(rec.e - rec.d - delta, 2, "lambda-");
  const BigInt shift = exact_div(2 * rec.k + (rec.v - 1) * (rec.e - rec.d), delta, "multiplicity shift");
  const BigInt m_plus = exact_div(rec.v - 1 - shift, 2, "m+");
  const BigInt m_minus = exact_div(rec.v - 1 + shift, 2, "m-");
  std::vector<std::pair<BigInt, BigInt>> pairs{{rec.k, BigInt(1)}};
  if (m_plus != 0) pairs.emplace_back(plus, m_plus);
  if (m_minus != 0) pairs.emplace_back(minus, m_minus);
  return detail::make_spectrum(std::move(pairs));
}

struct IntersectionArray {
  BigInt b0, b1, c1, c2;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// {k, k-e-1; 1, d}. For the complement c2 is bar d = v - 2k + e.
inline IntersectionArray intersection_array(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  if (d.at_half && !spec.complemented) fail(ErrorCode::Disconnected, spec.label() + " is disconnected");
  const SrgRecord rec = srg_params(spec);
  IntersectionArray arr{rec.k, rec.k - rec.e - 1, BigInt(1), rec.d};
  if (!d.at_half) {
    if (!spec.complemented) {
      ensure(arr.b1 == d.q_ell * rec.d, spec.label() + ": b1 != q^ell d");
    } else {
      const SrgRecord primal = srg_params(spec.complement());
      ensure(arr.b0 == d.q_ell * primal.k, spec.label() + ": b0 != q^ell k");
      ensure(arr.b1 == primal.k - primal.d, spec.label() + ": b1 != k - d");
      ensure(arr.c2 == rec.v - 2 * primal.k + primal.e, spec.label() + ": c2 != v - 2k + e");
    }
  }
  return arr;
}

/// Pseudo Latin square type when m_ell/2 is odd: s = upsilon, u = mu - upsilon,
/// with parameters (u^2, -s(u-1), s^2+3s+u, s(s+1)).
inline std::optional<std::pair<BigInt, BigInt>> latin_square_class(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  if (d.at_half) fail(ErrorCode::NotApplicable, "Latin-square classification needs ell != m/2");
  if (spec.complemented || !d.half_odd) return std::nullopt;
  const BigInt s = d.upsilon;
  const BigInt u = d.mu - d.upsilon;
  ensure(d.k == -s * (u - 1), spec.label() + ": k != -s(u-1)");
  ensure(u * u == d.v, spec.label() + ": u^2 != v");
  return std::make_pair(s, u);
}

inline std::vector<BigInt> latin_square_params(const BigInt& s, const BigInt& u) {
  return {u * u, -s * (u - 1), s * s + 3 * s + u, s * (s + 1)};
}

/// w_r = trace(A^r).
inline BigInt closed_walks(const GraphSpec& spec, unsigned r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "walk length must be positive");
  const FamilyData d = family_data(spec);
  BigInt w;
  if (d.at_half) {
    const BigInt& a = d.q_half;
    const BigInt sign = r % 2 == 0 ? 1 : -1;
    const BigInt bracket = big_pow(a - 1, r - 1) + sign;
    w = spec.complemented ? BigInt(big_pow(a, r) * (a - 1) * bracket) : BigInt(a * (a - 1) * bracket);
  } else if (!spec.complemented) {
    w = d.k * (big_pow(d.k, r - 1) + d.q_ell * big_pow(d.upsilon, r) + big_pow(d.mu, r));
  } else {
    const BigInt kb = d.q_ell * d.k;
    w = kb * (big_pow(kb, r - 1) + big_pow(-1 - d.upsilon, r) + big_pow(d.q_ell, r - 1) * big_pow(d.upsilon, r));
  }
  const NamedEigenvalues e = named_eigenvalues(spec);
  ensure(w % e.k == 0, spec.label() + ": k does not divide w_r");
  return w;
}

/// Number of spanning trees.
inline BigInt spanning_trees(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  if (d.v > BigInt(1) << 20) fail(ErrorCode::BudgetExceeded, "tree count would be astronomically large");
  auto u = [](const BigInt& x) { return static_cast<std::uint64_t>(x.convert_to<unsigned long long>()); };
  if (d.at_half) {
    if (!spec.complemented) return 0;
    const BigInt& a = d.q_half;
    return big_pow(a, u(2 * a - 4)) * big_pow(a * (a - 1), u(a * (a - 1)));
  }
  const unsigned half = d.m / 2;
  if (!spec.complemented) {
    const BigInt ratio = exact_div(d.q_half + BigInt(d.eps) * d.q_ell, d.q_ell + 1, "tree ratio");
    return spec.q_pow(u(BigInt(half) * (d.v - 3))) * big_pow(d.upsilon, u(d.q_ell * d.k)) * big_pow(ratio, u(d.k));
  }
  Rational value = Rational(spec.q_pow(half * u(d.q_ell * d.k)));
  const BigInt shift = BigInt(d.ell) * d.k - d.m;
  value *= shift >= 0 ? Rational(spec.q_pow(u(shift))) : Rational(BigInt(1), spec.q_pow(u(-shift)));
  value *= Rational(big_pow(d.mu, u(d.q_ell * d.k)) * big_pow(d.k - d.upsilon, u(d.k)));
  return to_integer(value, "complement tree count");
}

/// Kirchhoff from the spectrum: (1/v) prod over nontrivial (k - lambda)^mult.
inline BigInt spanning_trees_from_spectrum(const Spectrum& spec_values, const BigInt& v) {
  const BigInt& k = spec_values.largest();
  BigInt product = 1;
  bool skipped = false;
  for (const auto& [value, mult] : spec_values.pairs) {
    BigInt count = mult;
    if (!skipped && value == k) {
      count -= 1;
      skipped = true;
    }
    if (count > 0) product *= big_pow(k - value, count.convert_to<unsigned long long>());
  }
  return exact_div(product, v, "Kirchhoff");
}

struct InvariantBounds {
  std::optional<int> diameter;  // nullopt when disconnected
  std::optional<int> girth;     // nullopt for a forest
  std::optional<BigInt> clique_exact, independence_exact, chromatic_exact;
  std::optional<Rational> clique_upper, independence_upper, chromatic_lower;
  Rational isoperimetric_lower;
  BigInt isoperimetric_upper_squared;  // h <= sqrt(this)
  BigInt algebraic_connectivity;       // the adjacency eigenvalue lambda_2
  BigInt laplacian_gap;                // k - lambda_2

  BigInt isoperimetric_upper_floor() const { return isqrt(isoperimetric_upper_squared); }
};

inline InvariantBounds invariant_bounds(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  InvariantBounds b;
  const bool comp = spec.complemented;

  // Diameter and girth from the srg parameters: e > 0 gives triangles, e = 0
  // with d >= 2 gives 4-cycles.
  if (d.at_half && !comp) {
    b.diameter = std::nullopt;
    const BigInt k = d.q_half - 1;
    b.girth = k >= 2 ? std::optional<int>(3) : std::nullopt;
  } else {
    b.diameter = 2;
    BigInt e;
    BigInt dd;
    if (d.at_half) {
      const BigInt& a = d.q_half;
      e = a * (a - 2);
      dd = a * (a - 1);
    } else {
      const SrgRecord rec = srg_params(spec);
      e = rec.e;
      dd = rec.d;
    }
    ensure(e > 0 || dd >= 2, spec.label() + ": neither triangles nor 4-cycles");
    b.girth = e > 0 ? 3 : 4;
  }

  if (d.half_odd) {
    b.clique_exact = d.q_half;
    b.independence_exact = d.q_half;
    b.chromatic_exact = d.q_half;
  } else {
    const BigInt plus = spec.q_pow(d.m / 2 + d.ell);
    const BigInt minus = spec.q_pow(d.m / 2 - d.ell);
    const Rational omega_primal(d.v + plus, plus + 1);
    const Rational alpha_primal(d.v + minus, minus + 1);
    b.clique_upper = comp ? alpha_primal : omega_primal;
    b.independence_upper = comp ? omega_primal : alpha_primal;
    b.chromatic_lower = comp ? Rational((d.v - 1) * (plus + 1), d.v + plus) : Rational((d.v - 1) * (minus + 1), d.v + minus);
  }

  // Isoperimetric interval, in the form tabulated for each parity branch.
  if (d.at_half && !comp) {
    b.isoperimetric_lower = 0;
    b.isoperimetric_upper_squared = 0;
  } else {
    const NamedEigenvalues e = named_eigenvalues(spec);
    const BigInt theta_term = comp ? (d.half_odd ? e.mu : e.upsilon) : (d.half_odd ? e.upsilon : e.mu);
    b.isoperimetric_lower = Rational(e.k - theta_term, 2);
    b.isoperimetric_upper_squared = e.k * e.k - theta_term * theta_term;
  }

  // Algebraic connectivity: second largest adjacency eigenvalue.
  if (d.at_half && !comp) {
    b.algebraic_connectivity = d.q_half - 1;  // k repeated: disconnected
  } else {
    b.algebraic_connectivity = spectrum(spec).second();
  }
  b.laplacian_gap = named_eigenvalues(spec).k - b.algebraic_connectivity;
  return b;
}

}  // namespace gpg
