#pragma once

// Generalized Paley graphs Gamma_{q,m}(ell): Cayley graphs on the additive
// group of F_{q^m} whose connection set is the set of nonzero (q^ell+1)-th
// powers.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "gpg/bigint.hpp"
#include "gpg/bitset.hpp"
#include "gpg/budget.hpp"
#include "gpg/error.hpp"
#include "gpg/finite_field.hpp"
#include "gpg/number_theory.hpp"

namespace gpg {

enum class FamilyTag { Complete, Paley, Proper, Reducible };

constexpr std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Complete: return "complete";
    case FamilyTag::Paley: return "paley";
    case FamilyTag::Proper: return "proper";
    case FamilyTag::Reducible: return "reducible";
  }
  return "unknown";
}

/// q = p^s. Vertices are the elements of F_{q^m}; ell selects the connection set.
struct GraphSpec {
  std::uint64_t p = 2;
  unsigned s = 1;
  unsigned m = 1;
  unsigned ell = 0;
  bool complemented = false;

  BigInt q() const { return big_pow(p, s); }
  BigInt q_pow(std::uint64_t e) const { return big_pow(p, std::uint64_t{s} * e); }
  BigInt order() const { return q_pow(m); }
  FieldParams field_params() const { return {p, s, m}; }

  unsigned gcd_m_ell() const { return std::gcd(m, ell); }  // (m, 0) = m
  /// m_ell = m / (m, ell).
  unsigned m_ell() const { return m / gcd_m_ell(); }
  bool q_even() const { return p == 2; }

  FamilyTag tag() const {
    if (m_ell() % 2 != 0) return q_even() ? FamilyTag::Complete : FamilyTag::Paley;
    if (ell != 0 && m % ell == 0) return FamilyTag::Proper;
    return FamilyTag::Reducible;
  }
  bool proper() const { return tag() == FamilyTag::Proper && ell >= 1 && 2 * ell <= m; }
  bool half() const { return 2 * ell == m; }

  GraphSpec complement() const {
    GraphSpec other = *this;
    other.complemented = !complemented;
    return other;
  }

  /// "Gamma_{q,m}(ell)" or "co-Gamma_{q,m}(ell)".
  std::string label() const {
    return std::string(complemented ? "co-" : "") + "Gamma_{" + q().str() + "," + std::to_string(m) + "}(" +
           std::to_string(ell) + ")";
  }

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

inline void validate(const GraphSpec& spec) {
  if (!is_prime(spec.p)) fail(ErrorCode::CompositeP, std::to_string(spec.p) + " is not prime");
  if (spec.s == 0 || spec.m == 0) fail(ErrorCode::InvalidArgument, "s and m must be positive");
  if (spec.ell >= spec.m) {
    fail(ErrorCode::InvalidArgument, "ell must satisfy 0 <= ell < m, got ell=" + std::to_string(spec.ell));
  }
}

/// Shared, immutable field tables keyed by (p, s, m).
inline std::shared_ptr<const FieldTable> field_for(const FieldParams& params, const Budget& budget = {}) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>, std::shared_ptr<const FieldTable>> cache;
  const auto key = std::make_tuple(params.p, params.s, params.m);
  if (params.order() > BigInt(budget.field_order)) {
    fail(ErrorCode::BudgetExceeded, "field of order " + params.order().str() + " exceeds the materialization budget");
  }
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const FieldTable>(build_field(params, budget));
  std::lock_guard lock(mutex);
  cache[key] = table;
  return table;
}

struct ConnectionSet {
  GraphSpec spec;
  std::vector<FieldElement> elements;  // ascending encoding
  std::vector<std::uint64_t> members;  // bit set over encodings
  BigInt cardinality;

  bool contains(FieldElement x) const { return (members[x.value / 64] >> (x.value % 64)) & 1U; }
};

/// Cardinality of S_ell: (q^m-1)/(q^m-1, q^ell+1).
inline BigInt connection_cardinality(const GraphSpec& spec) {
  const BigInt n1 = spec.order() - 1;
  return exact_div(n1, gcd_power(spec.q(), spec.m, spec.ell), "connection_cardinality");
}

/// S_ell = <alpha^g> with g = (q^m-1, q^ell+1).
inline ConnectionSet connection_set(const GraphSpec& spec, const FieldTable& field) {
  validate(spec);
  if (!(field.params() == spec.field_params())) fail(ErrorCode::InvalidArgument, "field does not match spec");
  const std::uint64_t g = to_u64(gcd_power(spec.q(), spec.m, spec.ell), "connection_set");
  ConnectionSet conn;
  conn.spec = spec;
  conn.members.assign((field.size() + 63) / 64, 0);
  for (std::uint64_t e = 0; e < field.group_order(); e += g) {
    const FieldElement x = field.exp(e);
    conn.members[x.value / 64] |= std::uint64_t{1} << (x.value % 64);
    conn.elements.push_back(x);
  }
  std::sort(conn.elements.begin(), conn.elements.end());
  conn.cardinality = BigInt(conn.elements.size());
  ensure(conn.cardinality == connection_cardinality(spec), "connection set cardinality mismatch");
  return conn;
}

/// Symmetry of S_ell as a closed predicate: always for q even; for q odd iff
/// m_ell is even or q^m = 1 mod 4.
inline bool symmetric_by_parity(const GraphSpec& spec) {
  if (spec.q_even()) return true;
  return spec.m_ell() % 2 == 0 || spec.order() % 4 == 1;
}

/// -1 in S, cross-checked against the parity predicate.
inline bool is_symmetric(const ConnectionSet& conn, const FieldTable& field) {
  const bool direct = conn.contains(field.minus_one());
  ensure(direct == symmetric_by_parity(conn.spec), "symmetry of " + conn.spec.label() + " disagrees with parity rule");
  return direct;
}

class CayleyGraph {
 public:
  CayleyGraph(GraphSpec spec, std::shared_ptr<const FieldTable> field, ConnectionSet connection)
      : spec_(spec), field_(std::move(field)), connection_(std::move(connection)), lazy_(std::make_shared<Lazy>()) {}

  const GraphSpec& spec() const { return spec_; }
  const FieldTable& field() const { return *field_; }
  std::shared_ptr<const FieldTable> field_ptr() const { return field_; }
  /// S_ell of the underlying primal graph, also for a complemented spec.
  const ConnectionSet& connection() const { return connection_; }
  std::uint32_t order() const { return field_->size(); }

  /// Degree of every vertex of this graph (complement-aware).
  std::uint32_t degree() const {
    const auto k = static_cast<std::uint32_t>(connection_.elements.size());
    return spec_.complemented ? order() - 1 - k : k;
  }

  bool adjacent_by_difference(FieldElement x, FieldElement y) const {
    if (x == y) return false;
    const bool in_s = connection_.contains(field_->sub(y, x));
    return spec_.complemented ? !in_s : in_s;
  }

  /// Packed adjacency, built on first use.
  const BitMatrix& adjacency() const {
    std::call_once(lazy_->once, [this] { lazy_->matrix = materialize(); });
    return lazy_->matrix;
  }

 private:
  struct Lazy {
    std::once_flag once;
    BitMatrix matrix;
  };

  BitMatrix materialize() const {
    const std::uint32_t n = order();
    BitMatrix a(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (FieldElement s : connection_.elements) a.set(i, field_->add({i}, s).value);
    }
    return spec_.complemented ? a.complement() : a;
  }

  GraphSpec spec_;
  std::shared_ptr<const FieldTable> field_;
  ConnectionSet connection_;
  std::shared_ptr<Lazy> lazy_;
};

inline CayleyGraph build_graph(const GraphSpec& spec, const Budget& budget = {}) {
  validate(spec);
  if (spec.order() > BigInt(budget.graph_order)) {
    fail(ErrorCode::BudgetExceeded, spec.label() + " has " + spec.order().str() +
                                        " vertices, above the graph budget " + std::to_string(budget.graph_order));
  }
  auto field = field_for(spec.field_params(), budget);
  ConnectionSet conn = connection_set(spec, *field);
  if (!is_symmetric(conn, *field)) {
    fail(ErrorCode::DirectedUnsupported, spec.label() + ": -1 is not in the connection set, the graph is directed");
  }
  return CayleyGraph(spec, std::move(field), std::move(conn));
}

/// All ell with 1 <= ell <= m/2, ell | m and m/ell even, ascending.
inline std::vector<GraphSpec> enumerate_family(std::uint64_t p, unsigned s, unsigned m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "m must be positive");
  std::vector<GraphSpec> out;
  for (unsigned ell = 1; 2 * ell <= m; ++ell) {
    if (m % ell == 0 && (m / ell) % 2 == 0) out.push_back({p, s, m, ell, false});
  }
  return out;
}

/// Spec-level containment of edge sets. For primal graphs: m_a | m_b and
/// ell_b | ell_a with odd quotient. Two complements of the same m nest the
/// other way round.
inline bool is_subgraph(const GraphSpec& a, const GraphSpec& b) {
  if (a.q() != b.q()) fail(ErrorCode::MixedBase, a.label() + " and " + b.label() + " have different q");
  if (!a.proper() || !b.proper()) fail(ErrorCode::NotInFamily, "is_subgraph needs proper specs");
  auto primal_in = [](unsigned m_a, unsigned l_a, unsigned m_b, unsigned l_b) {
    return m_b % m_a == 0 && l_a % l_b == 0 && (l_a / l_b) % 2 == 1;
  };
  if (!a.complemented && !b.complemented) return primal_in(a.m, a.ell, b.m, b.ell);
  if (a.complemented && b.complemented && a.m == b.m) return primal_in(b.m, b.ell, a.m, a.ell);
  fail(ErrorCode::InvalidArgument, "containment between " + a.label() + " and " + b.label() + " is not decided here");
}

/// Gamma_{p^r, m}(ell) = Gamma_{p^{r ell}, m/ell}(1).
inline GraphSpec normalize(std::uint64_t p, unsigned r, unsigned m, unsigned ell) {
  if (ell == 0 || m % ell != 0) {
    fail(ErrorCode::NotDivisible, std::to_string(ell) + " does not divide " + std::to_string(m));
  }
  return {p, r * ell, m / ell, 1, false};
}

inline GraphSpec normalize(const GraphSpec& spec) {
  GraphSpec out = normalize(spec.p, spec.s, spec.m, spec.ell);
  out.complemented = spec.complemented;
  return out;
}

/// With m = 2^t r, r odd: t chains, the k-th being {2^{k-1} d : d | r}.
inline std::vector<std::vector<unsigned>> family_lattice(unsigned m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "m must be positive");
  const unsigned t = v2(m);
  const unsigned r = m >> t;
  std::vector<std::vector<unsigned>> components;
  for (unsigned k = 1; k <= t; ++k) {
    std::vector<unsigned> labels;
    for (std::uint64_t d : divisors(r)) labels.push_back(static_cast<unsigned>(d) << (k - 1));
    components.push_back(std::move(labels));
  }
  return components;
}

/// The permutation x -> a x^{p^i} + b of vertex indices.
inline std::vector<std::uint32_t> apply_affine_frobenius(const CayleyGraph& g, FieldElement a, FieldElement b,
                                                         unsigned i) {
  const FieldTable& f = g.field();
  if (a.value == 0) fail(ErrorCode::ZeroScale, "affine-Frobenius map needs a != 0");
  if (i >= f.degree()) fail(ErrorCode::InvalidArgument, "Frobenius exponent out of range");
  std::vector<std::uint32_t> perm(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) perm[x] = f.add(f.mul(a, f.frobenius({x}, i)), b).value;
  return perm;
}

/// Multiplicative cosets alpha^j S_ell, j = 0..g-1, g = (q^m-1, q^ell+1).
inline std::vector<std::vector<FieldElement>> connection_cosets(const GraphSpec& spec, const FieldTable& field) {
  const std::uint64_t g = to_u64(gcd_power(spec.q(), spec.m, spec.ell), "connection_cosets");
  std::vector<std::vector<FieldElement>> cosets(g);
  for (std::uint64_t e = 0; e < field.group_order(); ++e) cosets[e % g].push_back(field.exp(e));
  for (auto& c : cosets) std::sort(c.begin(), c.end());
  return cosets;
}

}  // namespace gpg
