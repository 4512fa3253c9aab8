#pragma once

// Brute-force checks on materialized graphs. Nothing here evaluates a closed
// form: counts come from the adjacency matrix or from the field tables, and
// run_suite compares them with the closed forms afterwards.

#include <gmp.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpg/applications.hpp"
#include "gpg/bigint.hpp"
#include "gpg/bitset.hpp"
#include "gpg/budget.hpp"
#include "gpg/error.hpp"
#include "gpg/paley_graphs.hpp"
#include "gpg/quadratic_forms.hpp"
#include "gpg/spectra_srg.hpp"

namespace gpg {

/// Common-neighbour counts M = A^2, stored densely as 16-bit entries.
class PairCounts {
 public:
  explicit PairCounts(const BitMatrix& a) : n_(a.size()), data_(std::size_t{n_} * n_, 0) {
    if (n_ > 65535) fail(ErrorCode::BudgetExceeded, "pair counts limited to 65535 vertices");
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (std::uint32_t j = i; j < n_; ++j) {
        const auto c = static_cast<std::uint16_t>(a.common(i, j));
        data_[std::size_t{i} * n_ + j] = c;
        data_[std::size_t{j} * n_ + i] = c;
      }
    }
  }

  std::uint32_t size() const { return n_; }
  std::uint16_t operator()(std::uint32_t i, std::uint32_t j) const { return data_[std::size_t{i} * n_ + j]; }

 private:
  std::uint32_t n_;
  std::vector<std::uint16_t> data_;
};

struct SrgCount {
  BigInt v, k, e, d;
  friend bool operator==(const SrgCount&, const SrgCount&) = default;
};

inline void check_oracle_budget(const CayleyGraph& g, const Budget& budget) {
  if (g.order() > budget.oracle_order) {
    fail(ErrorCode::BudgetExceeded, g.spec().label() + " exceeds the oracle budget of " +
                                        std::to_string(budget.oracle_order) + " vertices");
  }
}

/// (v, k, e, d) by counting common neighbours of every pair.
inline SrgCount count_srg_params(const BitMatrix& a, const PairCounts& m) {
  const std::uint32_t n = a.size();
  const std::uint32_t k = a.row_weight(0);
  std::optional<std::uint32_t> e;
  std::optional<std::uint32_t> d;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a.row_weight(i) != k) fail(ErrorCode::NotStronglyRegular, "vertex " + std::to_string(i) + " has another degree");
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::optional<std::uint32_t>& slot = a.test(i, j) ? e : d;
      const std::uint32_t c = m(i, j);
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        fail(ErrorCode::NotStronglyRegular, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                                                std::to_string(c) + " common neighbours, expected " +
                                                std::to_string(*slot));
      }
    }
  }
  return {BigInt(n), BigInt(k), BigInt(e.value_or(0)), BigInt(d.value_or(0))};
}

inline SrgCount count_srg_params(const CayleyGraph& g, const Budget& budget = {}) {
  check_oracle_budget(g, budget);
  return count_srg_params(g.adjacency(), PairCounts(g.adjacency()));
}

/// A^2 = (e-d) A + (k-d) I + d J, entry by entry.
inline bool verify_a2_identity(const BitMatrix& a, const PairCounts& m, const BigInt& k, const BigInt& e,
                               const BigInt& d) {
  const std::uint32_t n = a.size();
  const long long kk = k.convert_to<long long>();
  const long long ee = e.convert_to<long long>();
  const long long dd = d.convert_to<long long>();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const long long expected = (ee - dd) * (a.test(i, j) ? 1 : 0) + (i == j ? kk - dd : 0) + dd;
      if (m(i, j) != expected) return false;
    }
  }
  return true;
}

inline bool verify_a2_identity(const CayleyGraph& g, const SrgRecord& rec, const Budget& budget = {}) {
  check_oracle_budget(g, budget);
  return verify_a2_identity(g.adjacency(), PairCounts(g.adjacency()), rec.k, rec.e, rec.d);
}

/// True when every row is the translate of row 0 by its vertex, i.e. the
/// matrix commutes with all translations x -> x + a.
inline bool translation_invariant(const CayleyGraph& g) {
  const BitMatrix& a = g.adjacency();
  const FieldTable& f = g.field();
  const std::vector<std::uint32_t> base = a.neighbors(0);
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a.row_weight(i) != base.size()) return false;
    for (std::uint32_t s : base) {
      if (!a.test(i, f.add({i}, {s}).value)) return false;
    }
  }
  return true;
}

namespace detail {

using u128 = unsigned __int128;

inline BigInt from_u128(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + BigInt(static_cast<std::uint64_t>(x));
}

/// (A^r)_{ss} for r = 1..rmax by propagating walk counts from s.
inline std::vector<u128> closed_walks_from(const BitMatrix& a, const std::vector<std::vector<std::uint32_t>>& adj,
                                           std::uint32_t source, unsigned rmax) {
  std::vector<u128> current(a.size(), 0);
  std::vector<u128> next(a.size(), 0);
  current[source] = 1;
  std::vector<u128> out(rmax + 1, 0);
  for (unsigned r = 1; r <= rmax; ++r) {
    for (std::uint32_t j = 0; j < a.size(); ++j) {
      u128 sum = 0;
      for (std::uint32_t i : adj[j]) sum += current[i];
      next[j] = sum;
    }
    std::swap(current, next);
    out[r] = current[source];
  }
  return out;
}

}  // namespace detail

/// w_r = trace(A^r) for r = 1..rmax (rmax <= 6). Up to 256 vertices every
/// diagonal entry is counted; above that the translation invariance of the
/// matrix is verified and the trace is n (A^r)_{00}.
inline std::vector<BigInt> count_walks_bruteforce(const CayleyGraph& g, unsigned rmax, const Budget& budget = {}) {
  check_oracle_budget(g, budget);
  if (rmax == 0 || rmax > 6) fail(ErrorCode::InvalidArgument, "walk oracle supports 1 <= r <= 6");
  const BitMatrix& a = g.adjacency();
  std::vector<std::vector<std::uint32_t>> adj(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) adj[i] = a.neighbors(i);
  std::vector<BigInt> w(rmax + 1, 0);
  if (a.size() <= 256) {
    std::vector<detail::u128> total(rmax + 1, 0);
    for (std::uint32_t s = 0; s < a.size(); ++s) {
      const auto diag = detail::closed_walks_from(a, adj, s, rmax);
      for (unsigned r = 1; r <= rmax; ++r) total[r] += diag[r];
    }
    for (unsigned r = 1; r <= rmax; ++r) w[r] = detail::from_u128(total[r]);
    return w;
  }
  if (!translation_invariant(g)) fail(ErrorCode::InternalError, "adjacency is not translation invariant");
  const auto diag = detail::closed_walks_from(a, adj, 0, rmax);
  for (unsigned r = 1; r <= rmax; ++r) w[r] = detail::from_u128(diag[r]) * a.size();
  return w;
}

/// w_2, w_3, w_4 summed over all entries of M = A^2.
inline std::vector<BigInt> walks_from_pair_counts(const BitMatrix& a, const PairCounts& m) {
  std::uint64_t w2 = 0, w3 = 0, w4 = 0;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    w2 += m(i, i);
    for (std::uint32_t j = 0; j < a.size(); ++j) {
      const std::uint64_t c = m(i, j);
      if (a.test(i, j)) w3 += c;
      w4 += c * c;
    }
  }
  return {BigInt(0), BigInt(0), BigInt(w2), BigInt(w3), BigInt(w4)};
}

/// Determinant of an integer matrix by fraction-free Gaussian elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& target = a[i][j];
        target = target * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(target.backend().data(), target.backend().data(), previous.backend().data());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Spanning trees: any cofactor of the Laplacian.
inline BigInt count_trees_bruteforce(const BitMatrix& a) {
  const std::uint32_t n = a.size();
  std::vector<std::vector<BigInt>> lap(n - 1, std::vector<BigInt>(n - 1, 0));
  for (std::uint32_t i = 1; i < n; ++i) {
    lap[i - 1][i - 1] = a.row_weight(i);
    for (std::uint32_t j = 1; j < n; ++j) {
      if (a.test(i, j)) lap[i - 1][j - 1] = -1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

inline BigInt count_trees_bruteforce(const CayleyGraph& g, const Budget& budget = {}) {
  if (g.order() > budget.tree_order) {
    fail(ErrorCode::BudgetExceeded, g.spec().label() + " exceeds the determinant budget of " +
                                        std::to_string(budget.tree_order) + " vertices");
  }
  return count_trees_bruteforce(g.adjacency());
}

/// Sizes of the connected components, in order of smallest vertex.
inline std::vector<std::uint32_t> component_sizes(const BitMatrix& a) {
  std::vector<int> comp(a.size(), -1);
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t start = 0; start < a.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::vector<std::uint32_t> stack{start};
    comp[start] = id;
    std::uint32_t size = 0;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (std::uint32_t y : a.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

/// Eccentricity of source; throws DisconnectedComponentsFound with the
/// component count when some vertex is unreachable.
inline int bfs_diameter(const CayleyGraph& g, std::uint32_t source = 0) {
  const BitMatrix& a = g.adjacency();
  std::vector<int> dist(a.size(), -1);
  std::vector<std::uint32_t> frontier{source};
  dist[source] = 0;
  int depth = 0;
  std::uint32_t reached = 1;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t x : frontier) {
      for (std::uint32_t y : a.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = depth + 1;
          ++reached;
          next.push_back(y);
        }
      }
    }
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }
  if (reached != a.size()) {
    fail(ErrorCode::DisconnectedComponentsFound,
         g.spec().label() + ": " + std::to_string(component_sizes(a).size()) + " components");
  }
  return depth;
}

/// Eigenvalue lambda_gamma = sum_{s in S'} zeta_p^{Tr(gamma s)} for every gamma,
/// where S' is the neighbourhood of 0. Each sum is evaluated by tallying the
/// absolute traces; it is an integer exactly when the nonzero residues are
/// equally frequent.
inline Spectrum character_spectrum(const CayleyGraph& g) {
  const FieldTable& f = g.field();
  const std::vector<std::uint32_t> nbrs = g.adjacency().neighbors(0);
  std::vector<std::uint32_t> abs_trace(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) abs_trace[x] = f.trace({x}, f.degree(), 1).value;
  std::map<BigInt, BigInt, std::greater<>> histogram;
  std::vector<std::uint64_t> tally(f.p());
  for (std::uint32_t gamma = 0; gamma < f.size(); ++gamma) {
    std::fill(tally.begin(), tally.end(), 0);
    for (std::uint32_t s : nbrs) ++tally[abs_trace[f.mul({gamma}, {s}).value]];
    for (std::uint32_t c = 2; c < f.p(); ++c) {
      if (tally[c] != tally[1]) fail(ErrorCode::UnbalancedCounts, "character sum is not an integer");
    }
    histogram[BigInt(tally[0]) - BigInt(f.p() > 1 ? tally[1] : 0)] += 1;
  }
  Spectrum out;
  for (auto& [value, mult] : histogram) out.pairs.emplace_back(value, mult);
  return out;
}

/// Every entry t of the table must satisfy x^k + y^k = t.
inline bool witnesses_sound(const FieldTable& f, std::uint64_t k_exp,
                            const std::vector<std::pair<FieldElement, FieldElement>>& witnesses) {
  if (witnesses.size() != f.size()) return false;
  for (std::uint32_t t = 0; t < f.size(); ++t) {
    const auto [x, y] = witnesses[t];
    if (f.add(f.pow(x, k_exp), f.pow(y, k_exp)).value != t) return false;
  }
  return true;
}

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  double elapsed_ms = 0;
};

struct VerificationReport {
  GraphSpec spec;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

inline std::string spectrum_string(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (i) out += ",";
    out += "[" + s.pairs[i].first.str() + "]^" + s.pairs[i].second.str();
  }
  return out + "}";
}

/// For every gamma != 0: the value histogram of Q_gamma, the class read off
/// N_Q(0), consistency of every N_Q(xi) and of T_Q with that class, and
/// agreement with the closed classification. Returns mismatch descriptions.
inline std::vector<std::string> rank_type_sweep(const GraphSpec& spec, const FieldTable& f) {
  std::vector<std::string> problems;
  const unsigned s = spec.s;
  const unsigned m = spec.m;
  const BigInt q = spec.q();
  const std::uint64_t exponent = detail::form_exponent(f, spec.ell);
  std::vector<std::uint32_t> power(f.size(), 0);
  for (std::uint32_t x = 1; x < f.size(); ++x) power[x] = f.pow(FieldElement{x}, exponent).value;
  std::vector<FieldElement> sub = f.subfield(s);
  std::vector<int> sub_index(f.size(), -1);
  for (std::size_t i = 0; i < sub.size(); ++i) sub_index[sub[i].value] = static_cast<int>(i);
  std::vector<int> rel_trace(f.size());
  for (std::uint32_t y = 0; y < f.size(); ++y) rel_trace[y] = sub_index[f.trace({y}, f.degree(), s).value];
  std::vector<std::uint32_t> prime_trace(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) prime_trace[i] = f.trace(sub[i], s, 1).value;
  const int zero_index = sub_index[0];

  std::vector<std::uint64_t> hist(sub.size());
  std::vector<std::uint64_t> tally(f.p());
  for (std::uint32_t gamma = 1; gamma < f.size(); ++gamma) {
    std::fill(hist.begin(), hist.end(), 0);
    const std::uint32_t lg = f.log({gamma});
    ++hist[zero_index];  // x = 0
    for (std::uint32_t x = 1; x < f.size(); ++x) {
      const FieldElement y = f.exp(std::uint64_t{lg} + f.log({power[x]}));
      ++hist[rel_trace[y.value]];
    }
    const std::string tag = spec.label() + " gamma=" + std::to_string(gamma);
    const auto observed = class_from_kernel(q, m, BigInt(hist[zero_index]));
    if (!observed) {
      problems.push_back(tag + ": N_Q(0)=" + std::to_string(hist[zero_index]) + " has no even-rank shape");
      continue;
    }
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (BigInt(hist[i]) != expected_count(q, m, *observed, static_cast<int>(i) == zero_index)) {
        problems.push_back(tag + ": N_Q at a nonzero value disagrees with the class read from N_Q(0)");
        break;
      }
    }
    std::fill(tally.begin(), tally.end(), 0);
    for (std::size_t i = 0; i < sub.size(); ++i) tally[prime_trace[i]] += hist[i];
    const BigInt t_sum = BigInt(tally[0]) - BigInt(tally[1]);
    if (t_sum != expected_exp_sum(q, m, *observed)) problems.push_back(tag + ": T_Q = " + t_sum.str());
    const FormClass closed = classify_form(make_trace_form(f, {gamma}, spec.ell));
    if (!(closed == *observed)) {
      problems.push_back(tag + ": closed class (" + std::to_string(closed.rank) + "," + std::to_string(closed.type) +
                         ") vs counted (" + std::to_string(observed->rank) + "," + std::to_string(observed->type) +
                         ")");
    }
  }
  return problems;
}

/// Runs every applicable cross-check on one spec. Failures are recorded in
/// the report, not thrown.
struct SuiteOptions {
  /// Bareiss is run only up to this many vertices (and never above the tree budget).
  std::uint32_t tree_limit = 512;
};

inline VerificationReport run_suite(const GraphSpec& spec, const Budget& budget = {}, const SuiteOptions& options = {}) {
  VerificationReport report;
  report.spec = spec;
  if (spec.order() > BigInt(budget.oracle_order)) {
    fail(ErrorCode::BudgetExceeded, spec.label() + " exceeds the oracle budget");
  }
  const CayleyGraph g = build_graph(spec, budget);
  const BitMatrix& a = g.adjacency();
  const FamilyData fd = family_data(spec);
  const bool degenerate = fd.at_half && !spec.complemented && fd.q_half == 2;
  const bool disconnected = fd.at_half && !spec.complemented;

  auto run = [&](const std::string& name, const std::function<void(Check&)>& body) {
    Check c;
    c.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& ex) {
      c.pass = false;
      c.observed = std::string("exception: ") + ex.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(c));
  };
  auto compare = [](Check& c, const std::string& expected, const std::string& observed) {
    c.expected = expected;
    c.observed = observed;
    c.pass = expected == observed;
  };

  const PairCounts pairs(a);
  const Spectrum closed_spectrum = spectrum(spec);

  if (!degenerate) {
    const SrgRecord rec = srg_params(spec);
    run("srg_count", [&](Check& c) {
      const SrgCount counted = count_srg_params(a, pairs);
      compare(c, "(" + rec.v.str() + "," + rec.k.str() + "," + rec.e.str() + "," + rec.d.str() + ")",
              "(" + counted.v.str() + "," + counted.k.str() + "," + counted.e.str() + "," + counted.d.str() + ")");
    });
    run("a2_identity", [&](Check& c) {
      c.expected = "true";
      c.pass = verify_a2_identity(a, pairs, rec.k, rec.e, rec.d);
      c.observed = c.pass ? "true" : "false";
    });
    if (!disconnected) {
      run("srg_spectrum_consistency", [&](Check& c) {
        const auto derived = spectrum_from_srg(rec);
        compare(c, spectrum_string(closed_spectrum), derived ? spectrum_string(*derived) : "irrational");
      });
    }
  }

  run("spectrum_moments", [&](Check& c) {
    const BigInt v = spec.order();
    const BigInt k = BigInt(g.degree());
    const bool ok = closed_spectrum.moment(0) == v && closed_spectrum.moment(1) == 0 &&
                    closed_spectrum.moment(2) == v * k;
    c.expected = "sum m = v, sum m l = 0, sum m l^2 = v k";
    c.observed = ok ? c.expected : "violated";
    c.pass = ok;
  });

  run("character_spectrum", [&](Check& c) {
    compare(c, spectrum_string(closed_spectrum), spectrum_string(character_spectrum(g)));
  });

  run("walks_pair_counts", [&](Check& c) {
    const auto w = walks_from_pair_counts(a, pairs);
    std::string expected, observed;
    for (unsigned r = 2; r <= 4; ++r) {
      expected += closed_walks(spec, r).str() + " ";
      observed += w[r].str() + " ";
    }
    compare(c, expected, observed);
  });

  run("walks_r_le_6", [&](Check& c) {
    const auto w = count_walks_bruteforce(g, 6, budget);
    std::string expected, observed;
    for (unsigned r = 1; r <= 6; ++r) {
      expected += closed_walks(spec, r).str() + " ";
      observed += w[r].str() + " ";
    }
    compare(c, expected, observed);
  });

  if (g.order() <= budget.tree_order && g.order() <= options.tree_limit) {
    run("spanning_trees", [&](Check& c) {
      compare(c, spanning_trees(spec).str(), count_trees_bruteforce(g, budget).str());
    });
  }

  if (disconnected) {
    run("components", [&](Check& c) {
      const auto sizes = component_sizes(a);
      const std::string a_str = fd.q_half.str();
      compare(c, a_str + " components of size " + a_str,
              std::to_string(sizes.size()) + " components of size " +
                  (std::all_of(sizes.begin(), sizes.end(), [&](auto x) { return x == sizes[0]; })
                       ? std::to_string(sizes[0])
                       : std::string("mixed")));
    });
  } else {
    run("diameter", [&](Check& c) { compare(c, "2", std::to_string(bfs_diameter(g, 0))); });
  }

  run("girth", [&](Check& c) {
    const InvariantBounds b = invariant_bounds(spec);
    const auto w = walks_from_pair_counts(a, pairs);
    bool four_cycle = false;
    for (std::uint32_t i = 0; i < a.size() && !four_cycle; ++i) {
      for (std::uint32_t j = i + 1; j < a.size(); ++j) {
        if (pairs(i, j) >= 2) {
          four_cycle = true;
          break;
        }
      }
    }
    const int observed = w[3] > 0 ? 3 : (four_cycle ? 4 : 0);
    compare(c, b.girth ? std::to_string(*b.girth) : "0", std::to_string(observed));
  });

  if (!spec.complemented && spec.m_ell() % 2 == 0) {
    run("rank_type_classification", [&](Check& c) {
      const auto problems = rank_type_sweep(spec, g.field());
      c.expected = "0 mismatches";
      c.observed = std::to_string(problems.size()) + " mismatches" + (problems.empty() ? "" : ": " + problems[0]);
      c.pass = problems.empty();
    });
  }

  if (!spec.complemented && !fd.at_half) {
    run("waring_witnesses", [&](Check& c) {
      const WaringCertificate cert = waring_number(spec, budget);
      const FieldTable& f = g.field();
      const std::uint64_t k_exp = to_u64(cert.k_exp % (cert.field_size - 1), "waring exponent");
      std::vector<bool> is_power(f.size(), false);
      for (std::uint32_t x = 0; x < f.size(); ++x) is_power[f.pow(FieldElement{x}, k_exp).value] = true;
      const bool sound = cert.witnesses && witnesses_sound(f, k_exp, *cert.witnesses);
      const bool needs_two = std::find(is_power.begin(), is_power.end(), false) != is_power.end();
      const int observed = needs_two ? 2 : 1;
      c.expected = "g=" + std::to_string(cert.g) + " with sound witnesses";
      c.observed = "g=" + std::to_string(observed) + (sound ? " with sound witnesses" : " with broken witnesses");
      c.pass = c.expected == c.observed;
    });
  }

  if (!disconnected && !degenerate) {
    run("ramanujan", [&](Check& c) {
      const Spectrum counted = character_spectrum(g);
      const BigInt k = counted.largest();
      BigInt worst = 0;
      for (std::size_t i = 1; i < counted.pairs.size(); ++i) {
        const BigInt x = big_abs(counted.pairs[i].first);
        worst = std::max(worst, BigInt(x * x));
      }
      const bool observed = worst <= 4 * (k - 1);
      compare(c, is_ramanujan(spec) ? "true" : "false", observed ? "true" : "false");
    });
  }

  if (!spec.complemented && g.order() <= 1024) {
    run("complement_cosets", [&](Check& c) {
      const FieldTable& f = g.field();
      const auto cosets = connection_cosets(spec, f);
      BitMatrix united(g.order());
      bool overlap = false;
      for (std::size_t j = 1; j < cosets.size(); ++j) {
        for (std::uint32_t x = 0; x < g.order(); ++x) {
          for (FieldElement t : cosets[j]) {
            const std::uint32_t y = f.add({x}, t).value;
            if (united.test(x, y)) overlap = true;
            united.set(x, y);
          }
        }
      }
      const bool ok = !overlap && united == a.complement() && cosets.size() - 1 == fd.q_ell;
      c.expected = fd.q_ell.str() + " disjoint coset graphs covering the complement";
      c.observed = std::to_string(cosets.size() - 1) + (ok ? " disjoint coset graphs covering the complement"
                                                            : " coset graphs, partition fails");
      c.pass = ok;
    });
  }

  if (!spec.complemented && g.order() <= 256) {
    run("arc_transitivity", [&](Check& c) {
      const FieldTable& f = g.field();
      const ConnectionSet& conn = g.connection();
      const FieldElement s0 = conn.elements.front();
      std::map<std::uint32_t, bool> automorphism;  // keyed by the scale a
      auto preserves_edges = [&](FieldElement scale) {
        const auto perm = apply_affine_frobenius(g, scale, f.zero(), 0);
        for (std::uint32_t x = 0; x < g.order(); ++x) {
          for (FieldElement t : conn.elements) {
            const std::uint32_t y = f.add({x}, t).value;
            if (!a.test(perm[x], perm[y])) return false;
          }
        }
        return true;
      };
      std::uint64_t arcs = 0;
      bool ok = true;
      for (std::uint32_t x = 0; x < g.order() && ok; ++x) {
        for (FieldElement t : conn.elements) {
          const FieldElement y = f.add({x}, t);
          const FieldElement scale = f.div(f.sub(y, {x}), s0);
          auto it = automorphism.find(scale.value);
          if (it == automorphism.end()) it = automorphism.emplace(scale.value, preserves_edges(scale)).first;
          // psi(u) = scale u + x sends 0 to x and s0 to y.
          if (!it->second || f.add(f.mul(scale, s0), {x}) != y) {
            ok = false;
            break;
          }
          ++arcs;
        }
      }
      // A scale outside S must fail to be an automorphism.
      bool control = true;
      for (std::uint32_t candidate = 1; candidate < g.order(); ++candidate) {
        if (!conn.contains({candidate})) {
          control = !preserves_edges({candidate});
          break;
        }
      }
      c.expected = "every arc reached from (0,s0); scale outside S rejected";
      c.observed = std::to_string(arcs) + " arcs " + (ok ? "reached" : "missed") + "; control " +
                   (control ? "rejected" : "accepted");
      c.pass = ok && control && arcs == std::uint64_t{g.order()} * conn.elements.size();
      if (c.pass) c.observed = c.expected;
    });
  }

  return report;
}

/// Feeds deliberately corrupted inputs to the oracles. Each check passes when
/// the corruption is detected.
inline std::vector<Check> falsification_controls(const GraphSpec& spec, const Budget& budget = {}) {
  const CayleyGraph g = build_graph(spec, budget);
  check_oracle_budget(g, budget);
  const SrgRecord rec = srg_params(spec);
  const BitMatrix& a = g.adjacency();

  // Toggle the edge {0, y} for the first non-neighbour y of 0.
  BitMatrix mutated = a;
  std::uint32_t y = 1;
  while (y < a.size() && a.test(0, y)) ++y;
  ensure(y < a.size(), spec.label() + " is complete");
  mutated.set(0, y);
  mutated.set(y, 0);
  const PairCounts mutated_pairs(mutated);
  const PairCounts pairs(a);

  std::vector<Check> out;
  auto record = [&](const std::string& name, bool rejected) {
    out.push_back({name, "rejected", rejected ? "rejected" : "accepted", rejected, 0});
  };

  bool threw = false;
  try {
    count_srg_params(mutated, mutated_pairs);
  } catch (const Error& ex) {
    threw = ex.code() == ErrorCode::NotStronglyRegular;
  }
  record("mutated_edge_srg_count", threw);
  record("mutated_edge_a2_identity", !verify_a2_identity(mutated, mutated_pairs, rec.k, rec.e, rec.d));
  record("perturbed_e_a2_identity", !verify_a2_identity(a, pairs, rec.k, rec.e + 1, rec.d));
  record("perturbed_d_a2_identity", !verify_a2_identity(a, pairs, rec.k, rec.e, rec.d - 1));

  const auto walks = walks_from_pair_counts(mutated, mutated_pairs);
  record("mutated_edge_walks", walks[2] != closed_walks(spec, 2) || walks[3] != closed_walks(spec, 3) ||
                                   walks[4] != closed_walks(spec, 4));
  if (a.size() <= std::min<std::uint32_t>(budget.tree_order, 256)) {
    record("mutated_edge_trees", count_trees_bruteforce(mutated) != spanning_trees(spec));
  }

  BitMatrix isolated = a;
  for (std::uint32_t x : a.neighbors(0)) {
    isolated.reset(0, x);
    isolated.reset(x, 0);
  }
  record("isolated_vertex_components", component_sizes(isolated).size() > 1);

  if (!spec.complemented && spec.m_ell() % 2 == 0) {
    const FieldTable& f = g.field();
    const TraceForm form = make_trace_form(f, f.one(), spec.ell);
    FormClass flipped = classify_form(form);
    flipped.type = -flipped.type;
    record("flipped_form_type", count_kernel(form, f.zero()) != expected_count(spec.q(), spec.m, flipped, true));
  }

  if (!spec.complemented && spec.proper() && !spec.half()) {
    const WaringCertificate cert = waring_number(spec, budget);
    if (cert.witnesses) {
      auto broken = *cert.witnesses;
      std::swap(broken[1], broken[2]);
      const std::uint64_t k_exp = to_u64(cert.k_exp % (cert.field_size - 1), "waring exponent");
      record("swapped_waring_witness", !witnesses_sound(g.field(), k_exp, broken));
    }
  }
  return out;
}

}  // namespace gpg
