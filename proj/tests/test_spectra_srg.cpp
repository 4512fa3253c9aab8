#include <gtest/gtest.h>

#include <functional>

#include "gpg/oracles.hpp"
#include "gpg/spectra_srg.hpp"

using namespace gpg;

namespace {

Spectrum spec_of(std::vector<std::pair<long, long>> pairs) {
  Spectrum s;
  for (auto [value, mult] : pairs) s.pairs.emplace_back(BigInt(value), BigInt(mult));
  return s;
}

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

// Every proper spec (and complement) with q <= 9 and m <= 16.
std::vector<GraphSpec> sweep() {
  std::vector<GraphSpec> out;
  const std::pair<std::uint64_t, unsigned> bases[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  for (auto [p, s] : bases) {
    for (unsigned m = 2; m <= 16; m += 2) {
      for (const GraphSpec& g : enumerate_family(p, s, m)) {
        out.push_back(g);
        out.push_back(g.complement());
      }
    }
  }
  return out;
}

}  // namespace

TEST(Spectrum, Examples) {
  EXPECT_EQ(spectrum({2, 1, 12, 1}), spec_of({{1365, 1}, {21, 2730}, {-43, 1365}}));
  EXPECT_EQ(spectrum({3, 1, 4, 1}), spec_of({{20, 1}, {2, 60}, {-7, 20}}));
  EXPECT_EQ(spectrum({2, 1, 4, 1, true}), spec_of({{10, 1}, {2, 5}, {-2, 10}}));
  EXPECT_EQ(spectrum({2, 1, 4, 2}), spec_of({{3, 4}, {-1, 12}}));
  EXPECT_EQ(spectrum({2, 1, 4, 2, true}), spec_of({{12, 1}, {0, 12}, {-4, 3}}));
}

TEST(Spectrum, NotInFamily) {
  EXPECT_EQ(code_of([] { spectrum({2, 1, 12, 4}); }), ErrorCode::NotInFamily);
  EXPECT_EQ(code_of([] { spectrum({2, 1, 3, 1}); }), ErrorCode::NotInFamily);
}

TEST(Spectrum, MomentsAndOrderingOverTheSweep) {
  for (const GraphSpec& g : sweep()) {
    const Spectrum s = spectrum(g);
    const NamedEigenvalues e = named_eigenvalues(g);
    EXPECT_EQ(s.moment(0), g.order()) << g.label();
    EXPECT_EQ(s.moment(1), 0) << g.label();
    EXPECT_EQ(s.moment(2), g.order() * e.k) << g.label();
    for (std::size_t i = 1; i < s.pairs.size(); ++i) EXPECT_GT(s.pairs[i - 1].first, s.pairs[i].first);
    EXPECT_EQ(s.largest(), e.k);
    // w_r from the spectrum equals the closed walk count.
    for (unsigned r = 1; r <= 6; ++r) EXPECT_EQ(s.moment(r), closed_walks(g, r)) << g.label() << " r=" << r;
  }
}

TEST(Spectrum, RelationsOverTheSweep) {
  for (const GraphSpec& g : sweep()) {
    if (g.half() || g.complemented) continue;
    EXPECT_TRUE(eigenvalue_relations_check(g).empty()) << g.label() << ": " << eigenvalue_relations_check(g)[0];
  }
  EXPECT_EQ(code_of([] { eigenvalue_relations_check({2, 1, 4, 2}); }), ErrorCode::NotApplicable);
}

TEST(Spectrum, ShiftLaw) {
  EXPECT_EQ(named_eigenvalues({2, 1, 14, 1}).upsilon, -43);
  EXPECT_EQ(named_eigenvalues({2, 1, 12, 1}).mu, -43);
  for (unsigned m = 2; m <= 10; ++m) {
    for (unsigned ell = 1; ell <= 3; ++ell) {
      const GraphSpec small{3, 1, 2 * m, ell};
      const GraphSpec large{3, 1, 2 * m + 2 * ell, ell};
      if (!small.proper() || small.half() || !large.proper()) continue;
      EXPECT_EQ(named_eigenvalues(large).upsilon, named_eigenvalues(small).mu) << small.label();
    }
  }
}

TEST(Spectrum, SubgraphDivisibility) {
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    for (unsigned m = 2; m <= 16; m += 2) {
      const auto family = enumerate_family(p, s, m);
      for (const GraphSpec& sub : family) {
        for (const GraphSpec& sup : family) {
          if (sub.half() || sup.half() || !is_subgraph(sub, sup)) continue;
          const NamedEigenvalues a = named_eigenvalues(sub);
          const NamedEigenvalues b = named_eigenvalues(sup);
          EXPECT_EQ(b.k % a.k, 0) << sub.label() << " in " << sup.label();
          EXPECT_EQ(b.upsilon % a.upsilon, 0) << sub.label() << " in " << sup.label();
          const BigInt edges_a = closed_walks(sub, 2) / 2;
          const BigInt edges_b = closed_walks(sup, 2) / 2;
          EXPECT_EQ(edges_b % edges_a, 0);
        }
      }
    }
  }
}

TEST(Srg, Examples) {
  auto tuple = [](const SrgRecord& r) { return std::vector<BigInt>{r.v, r.k, r.e, r.d}; };
  EXPECT_EQ(tuple(srg_params({2, 1, 12, 1})), (std::vector<BigInt>{4096, 1365, 440, 462}));
  EXPECT_EQ(tuple(srg_params({2, 2, 4, 1})), (std::vector<BigInt>{256, 51, 2, 12}));
  EXPECT_EQ(tuple(srg_params({3, 1, 4, 1, true})), (std::vector<BigInt>{81, 60, 45, 42}));
  EXPECT_EQ(tuple(srg_params({2, 1, 4, 2})), (std::vector<BigInt>{16, 3, 2, 0}));
  EXPECT_EQ(code_of([] { srg_params({2, 1, 2, 1}); }), ErrorCode::DegenerateGraph);
}

TEST(Srg, FeasibilityAndSpectrumAgreeOverTheSweep) {
  for (const GraphSpec& g : sweep()) {
    if (g.half() && !g.complemented && g.order() == 4) continue;
    const SrgRecord r = srg_params(g);
    EXPECT_TRUE(srg_feasible(r.v, r.k, r.e, r.d)) << g.label();
    EXPECT_FALSE(r.conference) << g.label();
    if (!g.half() || g.complemented) {
      const auto derived = spectrum_from_srg(r);
      ASSERT_TRUE(derived.has_value()) << g.label();
      EXPECT_EQ(*derived, spectrum(g)) << g.label();
    }
  }
}

TEST(Srg, IntersectionArrays) {
  EXPECT_EQ(intersection_array({2, 1, 12, 1}), (IntersectionArray{1365, 924, 1, 462}));
  EXPECT_EQ(intersection_array({2, 1, 12, 3}), (IntersectionArray{455, 448, 1, 56}));
  EXPECT_EQ(intersection_array({2, 1, 12, 1, true}), (IntersectionArray{2730, 903, 1, 1806}));
  EXPECT_EQ(intersection_array({2, 1, 12, 3, true}), (IntersectionArray{3640, 399, 1, 3192}));
  EXPECT_EQ(code_of([] { intersection_array({2, 1, 4, 2}); }), ErrorCode::Disconnected);
}

TEST(Srg, IntersectionArraysAgreeWithCountedParameters) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 6, 1}, GraphSpec{2, 1, 6, 1, true}, GraphSpec{3, 1, 4, 1, true},
                             GraphSpec{2, 1, 8, 2, true}}) {
    const CayleyGraph graph = build_graph(g);
    const SrgCount c = count_srg_params(graph);
    EXPECT_EQ(intersection_array(g), (IntersectionArray{c.k, c.k - c.e - 1, 1, c.d})) << g.label();
  }
}

TEST(Srg, LatinSquare) {
  EXPECT_FALSE(latin_square_class({3, 1, 4, 1}).has_value());
  EXPECT_FALSE(latin_square_class({2, 1, 12, 3}).has_value());
  const auto ls = latin_square_class({2, 1, 6, 1});
  ASSERT_TRUE(ls.has_value());
  const SrgRecord r = srg_params({2, 1, 6, 1});
  // The SRG parameters of a PL_s(u) graph with the sign of d corrected.
  EXPECT_EQ(latin_square_params(ls->first, ls->second), (std::vector<BigInt>{r.v, r.k, r.e, r.d}));
  for (const GraphSpec& g : sweep()) {
    if (g.complemented || g.half()) continue;
    const auto cls = latin_square_class(g);
    EXPECT_EQ(cls.has_value(), (g.m_ell() / 2) % 2 == 1) << g.label();
    if (cls) {
      const SrgRecord rec = srg_params(g);
      EXPECT_EQ(latin_square_params(cls->first, cls->second), (std::vector<BigInt>{rec.v, rec.k, rec.e, rec.d}));
    }
  }
}

TEST(Walks, WorkedExampleCorrectedValues) {
  EXPECT_EQ(closed_walks({2, 1, 4, 1}, 3), 0);
  // 160 triangles in the complement of the Clebsch graph.
  EXPECT_EQ(closed_walks({2, 1, 4, 1, true}, 3), 960);
  EXPECT_EQ(count_walks_bruteforce(build_graph({2, 1, 4, 1, true}), 3)[3], 960);
}

TEST(Walks, HalfCaseAgainstBruteForce) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 4, 2}, GraphSpec{2, 1, 4, 2, true}, GraphSpec{3, 1, 4, 2},
                             GraphSpec{3, 1, 4, 2, true}, GraphSpec{2, 1, 2, 1, true}}) {
    const auto w = count_walks_bruteforce(build_graph(g), 6);
    for (unsigned r = 1; r <= 6; ++r) EXPECT_EQ(closed_walks(g, r), w[r]) << g.label() << " r=" << r;
  }
}

TEST(Trees, ClosedFormsAgreeWithKirchhoff) {
  EXPECT_EQ(spanning_trees({2, 1, 4, 1}), BigInt(1) << 31);
  EXPECT_EQ(spanning_trees({2, 1, 4, 1, true}), (BigInt(1) << 31) * 59049);
  EXPECT_EQ(spanning_trees({2, 1, 2, 1, true}), 4);
  EXPECT_EQ(spanning_trees({2, 1, 4, 2}), 0);
  for (const GraphSpec& g : sweep()) {
    if (g.order() > 4096 || (g.half() && !g.complemented)) continue;
    EXPECT_EQ(spanning_trees(g), spanning_trees_from_spectrum(spectrum(g), g.order())) << g.label();
  }
}

TEST(Invariants, Examples) {
  const InvariantBounds b341 = invariant_bounds({3, 1, 4, 1});
  ASSERT_TRUE(b341.clique_upper.has_value());
  EXPECT_EQ(*b341.clique_upper, Rational(108, 28));
  EXPECT_EQ(floor_of(*b341.clique_upper), 3);
  EXPECT_EQ(b341.diameter, 2);
  EXPECT_EQ(b341.girth, 3);

  const InvariantBounds b261 = invariant_bounds({2, 1, 6, 1});
  EXPECT_EQ(b261.clique_exact, 8);
  EXPECT_EQ(b261.independence_exact, 8);
  EXPECT_EQ(b261.chromatic_exact, 8);

  EXPECT_EQ(invariant_bounds({2, 1, 4, 1}).girth, 4);
  EXPECT_EQ(invariant_bounds({2, 1, 2, 1, true}).girth, 4);
  EXPECT_FALSE(invariant_bounds({2, 1, 2, 1}).girth.has_value());
  EXPECT_FALSE(invariant_bounds({2, 1, 4, 2}).diameter.has_value());
}

TEST(Invariants, GirthThreeEverywhereElse) {
  for (const GraphSpec& g : sweep()) {
    if (g == GraphSpec{2, 1, 4, 1} || g.order() == 4) continue;
    if (g.half() && !g.complemented) continue;
    EXPECT_EQ(invariant_bounds(g).girth, 3) << g.label();
    EXPECT_GT(closed_walks(g, 3), 0) << g.label();
  }
}

TEST(Invariants, AlgebraicConnectivity) {
  const InvariantBounds b = invariant_bounds({2, 1, 12, 1});
  EXPECT_EQ(b.algebraic_connectivity, 21);
  EXPECT_EQ(b.laplacian_gap, 1344);
  EXPECT_EQ(b.isoperimetric_upper_floor(), isqrt(b.isoperimetric_upper_squared));
}
