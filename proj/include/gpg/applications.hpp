#pragma once

// Waring numbers, Ramanujan classification, the three Ramanujan families and
// the Ihara zeta factorization.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpg/bigint.hpp"
#include "gpg/budget.hpp"
#include "gpg/error.hpp"
#include "gpg/paley_graphs.hpp"
#include "gpg/spectra_srg.hpp"

namespace gpg {

struct WaringCertificate {
  BigInt k_exp;       // q^ell + 1
  BigInt field_size;  // q^m
  int g = 0;
  /// witnesses[a] = (x, y) with x^k + y^k = a; indexed by element encoding.
  std::optional<std::vector<std::pair<FieldElement, FieldElement>>> witnesses;
  /// Set when (k, q^m - 1) = q^{m/2} + 1 holds, which the ell < m/2 range
  /// never allows.
  bool hypothesis_fired = false;
};

namespace detail {

/// One (q^ell+1)-th root per element of S_ell.
inline std::vector<FieldElement> root_table(const FieldTable& f, std::uint64_t exponent) {
  std::vector<FieldElement> root(f.size(), FieldElement{0});
  std::vector<bool> seen(f.size(), false);
  for (std::uint32_t x = 1; x < f.size(); ++x) {
    const FieldElement y = f.pow(FieldElement{x}, exponent);
    if (!seen[y.value]) {
      seen[y.value] = true;
      root[y.value] = {x};
    }
  }
  return root;
}

}  // namespace detail

inline WaringCertificate waring_number(const GraphSpec& spec, const Budget& budget = {}) {
  validate(spec);
  if (spec.complemented) fail(ErrorCode::InvalidArgument, "Waring numbers are defined for the primal connection set");
  WaringCertificate cert;
  cert.k_exp = spec.q_pow(spec.ell) + 1;
  cert.field_size = spec.order();
  const FamilyTag tag = spec.tag();
  if (tag == FamilyTag::Complete) {
    cert.g = 1;
  } else if (spec.proper() && !spec.half()) {
    cert.g = 2;
    const BigInt g = gcd_power(spec.q(), spec.m, spec.ell);
    cert.hypothesis_fired = g == spec.q_pow(spec.m / 2) + 1;
  } else if (spec.proper()) {
    fail(ErrorCode::NotApplicable, spec.label() + ": ell = m/2, the (q^ell+1)-th powers do not generate");
  } else {
    fail(ErrorCode::NotApplicable, spec.label() + " is outside the covered exponent shapes");
  }

  if (cert.field_size > BigInt(budget.graph_order)) return cert;

  const auto field = field_for(spec.field_params(), budget);
  const FieldTable& f = *field;
  const std::uint64_t exponent = to_u64(cert.k_exp % (cert.field_size - 1), "waring exponent");
  std::vector<std::pair<FieldElement, FieldElement>> witness(f.size(), {f.zero(), f.zero()});
  std::vector<int> layer(f.size(), -1);
  layer[0] = 0;
  const std::vector<FieldElement> root = detail::root_table(f, exponent);
  std::vector<FieldElement> powers;  // the set S of nonzero k-th powers
  for (std::uint32_t y = 1; y < f.size(); ++y) {
    if (root[y].value != 0) {
      powers.push_back({y});
      layer[y] = 1;
      witness[y] = {root[y], f.zero()};
    }
  }
  // Breadth-first from 0: the second layer is S + S.
  const bool covered = powers.size() + 1 == f.size();
  for (FieldElement a : covered ? std::vector<FieldElement>{} : powers) {
    for (FieldElement b : powers) {
      const FieldElement sum = f.add(a, b);
      if (layer[sum.value] < 0) {
        layer[sum.value] = 2;
        witness[sum.value] = {root[a.value], root[b.value]};
      }
    }
  }
  int observed = 0;
  for (int l : layer) {
    if (l < 0) fail(ErrorCode::InternalError, spec.label() + ": an element is not a sum of two powers");
    observed = std::max(observed, l);
  }
  ensure(observed == cert.g, spec.label() + ": Waring number from witnesses is " + std::to_string(observed));
  cert.witnesses = std::move(witness);
  return cert;
}

struct RamanujanEvidence {
  bool by_inequality = false;
  bool by_classification = false;
  BigInt lhs;  // max nontrivial |lambda|^2
  BigInt rhs;  // 4 (k - 1)
};

/// Closed characterization on the normalized spec Gamma_{q^ell, m/ell}(1):
/// Ramanujan iff q^ell in {2, 3, 4} and m/ell >= 4. Complements always are.
inline bool ramanujan_by_classification(const GraphSpec& spec) {
  if (spec.complemented) return true;
  const GraphSpec n = normalize(spec);
  const BigInt q = n.q();
  return (q == 2 || q == 3 || q == 4) && n.m >= 4;
}

inline RamanujanEvidence ramanujan_evidence(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  if (d.at_half && !spec.complemented) fail(ErrorCode::Disconnected, spec.label() + " is disconnected");
  const Spectrum values = spectrum(spec);
  const BigInt k = values.largest();
  RamanujanEvidence ev;
  ev.lhs = 0;
  for (std::size_t i = 1; i < values.pairs.size(); ++i) {
    const BigInt a = big_abs(values.pairs[i].first);
    ev.lhs = std::max(ev.lhs, BigInt(a * a));
  }
  ev.rhs = 4 * (k - 1);
  ev.by_inequality = ev.lhs <= ev.rhs;
  ev.by_classification = ramanujan_by_classification(spec);
  return ev;
}

/// Both paths are evaluated; a disagreement is an internal error.
inline bool is_ramanujan(const GraphSpec& spec) {
  const RamanujanEvidence ev = ramanujan_evidence(spec);
  ensure(ev.by_inequality == ev.by_classification,
         spec.label() + ": squared inequality (" + ev.lhs.str() + " <= " + ev.rhs.str() +
             ") disagrees with the closed classification");
  return ev.by_inequality;
}

struct FamilyRow {
  unsigned t = 0;
  GraphSpec spec;
  SrgRecord srg;
  Spectrum spectrum;
};

/// The t-parameterized (v, k, e, d) of Gamma_{q,2t}(1) and its complement
/// for q in {2, 3, 4}, written out per base.
inline std::vector<BigInt> family_formula(unsigned q, unsigned t, bool complemented) {
  const BigInt Q = big_pow(BigInt(q), 2 * t);  // q^{2t}
  const BigInt Q1 = Q * q * q;                 // q^{2t+2}
  const BigInt neg_t = big_pow(BigInt(-static_cast<long>(q)), t);
  const BigInt neg_t1 = neg_t * -static_cast<long>(q);
  const BigInt c = q - 1;  // coefficient of the (-q)^t terms
  const BigInt den = (q + 1) * (q + 1);
  const BigInt k = exact_div(Q - 1, q + 1, "family k");
  if (!complemented) {
    // q=2: (4^t + (-2)^{t+1} - 8)/9, q=3: (9^t + 2(-3)^{t+1} - 11)/16, q=4: (16^t + 3(-4)^{t+1} - 14)/25
    const BigInt e = exact_div(Q + c * neg_t1 - (3 * q + 2), den, "family e");
    const BigInt d = exact_div(Q + c * neg_t - q, den, "family d");
    return {Q, k, e, d};
  }
  // q=2: (4^{t+1} + (-2)^t - 14)/9, q=3: (9^{t+1} + 2(-3)^t - 27)/16, q=4: (16^{t+1} + 3(-4)^t - 44)/25
  const BigInt e = exact_div(Q1 + c * neg_t - (2 * q * q + 3 * q), den, "family bar e");
  const BigInt d = exact_div(Q1 + c * neg_t1 - q, den, "family bar d");
  return {Q, q * k, e, d};
}

inline std::vector<FamilyRow> family_table(unsigned q, unsigned t_max) {
  if (q != 2 && q != 3 && q != 4) fail(ErrorCode::InvalidArgument, "family base must be 2, 3 or 4");
  const std::uint64_t p = q == 3 ? 3 : 2;
  const unsigned s = q == 4 ? 2 : 1;
  std::vector<FamilyRow> rows;
  for (unsigned t = 2; t <= t_max; ++t) {
    for (bool comp : {false, true}) {
      FamilyRow row;
      row.t = t;
      row.spec = {p, s, 2 * t, 1, comp};
      row.srg = srg_params(row.spec);
      row.spectrum = spectrum(row.spec);
      const std::vector<BigInt> expected = family_formula(q, t, comp);
      ensure(expected == std::vector<BigInt>{row.srg.v, row.srg.k, row.srg.e, row.srg.d},
             row.spec.label() + ": t-parameterized formula disagrees with the general parameters");
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

struct ZetaFactor {
  BigInt s;         // eigenvalue
  BigInt quad;      // k - 1
  BigInt exponent;  // multiplicity

  BigInt linear_coeff() const { return -s; }
  BigInt quad_coeff() const { return -quad; }
};

/// 1/zeta(u) = (1-u^2)^{E-n} prod (1 - s u - (k-1) u^2)^{mult}.
struct ZetaFactorization {
  BigInt square_factor_exponent;
  std::vector<ZetaFactor> factors;

  /// Degree of 1/zeta as a polynomial in u.
  BigInt degree() const {
    BigInt total = 2 * square_factor_exponent;
    for (const auto& f : factors) total += 2 * f.exponent;
    return total;
  }
};

inline ZetaFactorization ihara_zeta(const GraphSpec& spec) {
  const FamilyData d = family_data(spec);
  if (d.at_half && !spec.complemented) {
    if (d.q_half == 2) fail(ErrorCode::DegenerateGraph, spec.label() + " = 2K_2");
    fail(ErrorCode::Disconnected, spec.label() + " is disconnected");
  }
  if (d.at_half && d.q_half == 2) fail(ErrorCode::DegenerateGraph, spec.label() + " = C_4 is bipartite");
  const Spectrum values = spectrum(spec);
  const BigInt k = values.largest();
  ZetaFactorization z;
  const BigInt edges = exact_div(d.v * k, 2, "edge count");
  z.square_factor_exponent = edges - d.v;
  for (const auto& [value, mult] : values.pairs) z.factors.push_back({value, k - 1, mult});
  ensure(z.degree() == 2 * edges, spec.label() + ": zeta degree is not twice the edge count");
  return z;
}

}  // namespace gpg
