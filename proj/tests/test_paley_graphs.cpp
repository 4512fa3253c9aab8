#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "gpg/paley_graphs.hpp"

using namespace gpg;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

// S_ell by raising every nonzero element, independent of the subgroup description.
std::set<std::uint32_t> powers_by_enumeration(const GraphSpec& spec) {
  const auto f = field_for(spec.field_params());
  const std::uint64_t e = to_u64(spec.q_pow(spec.ell) + 1, "test");
  std::set<std::uint32_t> out;
  for (std::uint32_t x = 1; x < f->size(); ++x) out.insert(f->pow(FieldElement{x}, e).value);
  return out;
}

}  // namespace

TEST(ConnectionSet, Cardinalities) {
  EXPECT_EQ(build_graph({2, 1, 4, 1}).connection().elements.size(), 5u);
  EXPECT_EQ(build_graph({2, 1, 3, 1}).connection().elements.size(), 7u);
  EXPECT_EQ(build_graph({3, 1, 4, 1}).connection().elements.size(), 20u);
}

TEST(ConnectionSet, CardinalityForAllSmallFields) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned s = 1; s <= 3; ++s) {
      for (unsigned m = 1; m <= 12; ++m) {
        const GraphSpec base{p, s, m, 0};
        if (base.order() > 4096) continue;
        for (unsigned ell = 0; ell < m; ++ell) {
          const GraphSpec spec{p, s, m, ell};
          const auto f = field_for(spec.field_params());
          const ConnectionSet conn = connection_set(spec, *f);
          const BigInt n1 = spec.order() - 1;
          BigInt expected;
          if (spec.m_ell() % 2 == 0) {
            expected = exact_div(n1, spec.q_pow(spec.gcd_m_ell()) + 1, "test");
          } else {
            expected = spec.q_even() ? n1 : BigInt(n1 / 2);
          }
          EXPECT_EQ(BigInt(conn.elements.size()), expected) << spec.label();
          EXPECT_EQ(conn.cardinality, expected);
          const auto direct = powers_by_enumeration(spec);
          EXPECT_TRUE(std::equal(direct.begin(), direct.end(), conn.elements.begin(), conn.elements.end(),
                                 [](std::uint32_t a, FieldElement b) { return a == b.value; }))
              << spec.label();
        }
      }
    }
  }
}

TEST(ConnectionSet, ReducesToTheDivisorOfM) {
  // S_ell = S_{(m, ell)} when m_ell is even.
  for (unsigned m : {4u, 6u, 8u, 12u}) {
    for (unsigned ell = 1; ell < m; ++ell) {
      const GraphSpec spec{2, 1, m, ell};
      if (spec.m_ell() % 2 != 0) continue;
      EXPECT_EQ(powers_by_enumeration(spec), powers_by_enumeration({2, 1, m, spec.gcd_m_ell()})) << spec.label();
    }
  }
}

TEST(ConnectionSet, Symmetry) {
  for (unsigned m = 1; m <= 8; ++m) {
    for (unsigned ell = 0; ell < m; ++ell) {
      const GraphSpec spec{2, 1, m, ell};
      const auto f = field_for(spec.field_params());
      EXPECT_TRUE(is_symmetric(connection_set(spec, *f), *f));
    }
  }
  const auto f81 = field_for({3, 1, 4});
  EXPECT_TRUE(is_symmetric(connection_set({3, 1, 4, 1}, *f81), *f81));
  const auto f3 = field_for({3, 1, 1});
  EXPECT_FALSE(is_symmetric(connection_set({3, 1, 1, 0}, *f3), *f3));
  EXPECT_EQ(code_of([] { build_graph({3, 1, 1, 0}); }), ErrorCode::DirectedUnsupported);
}

TEST(BuildGraph, Examples) {
  const CayleyGraph g = build_graph({2, 1, 4, 1});
  EXPECT_EQ(g.order(), 16u);
  for (std::uint32_t i = 0; i < 16; ++i) EXPECT_EQ(g.adjacency().row_weight(i), 5u);

  const CayleyGraph two_k2 = build_graph({2, 1, 2, 1});
  EXPECT_EQ(two_k2.degree(), 1u);
  EXPECT_EQ(two_k2.adjacency().count(), 4u);

  const CayleyGraph k4s = build_graph({2, 1, 4, 2});
  EXPECT_EQ(k4s.degree(), 3u);
  // Each closed neighbourhood is a K_4 and all four are disjoint.
  std::set<std::vector<std::uint32_t>> blocks;
  for (std::uint32_t i = 0; i < 16; ++i) {
    auto block = k4s.adjacency().neighbors(i);
    block.push_back(i);
    std::sort(block.begin(), block.end());
    for (std::uint32_t a : block) {
      for (std::uint32_t b : block) {
        if (a != b) {
          EXPECT_TRUE(k4s.adjacency().test(a, b));
        }
      }
    }
    blocks.insert(block);
  }
  EXPECT_EQ(blocks.size(), 4u);
}

TEST(BuildGraph, ComplementIsRowComplement) {
  const CayleyGraph g = build_graph({3, 1, 4, 1});
  const CayleyGraph c = build_graph({3, 1, 4, 1, true});
  EXPECT_EQ(c.degree(), 60u);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    for (std::uint32_t j = 0; j < g.order(); ++j) {
      EXPECT_EQ(c.adjacency().test(i, j), i != j && !g.adjacency().test(i, j));
    }
  }
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(code_of([] { build_graph({4, 1, 2, 1}); }), ErrorCode::CompositeP);
  EXPECT_EQ(code_of([] { build_graph({2, 1, 4, 4}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { build_graph({2, 1, 16, 1}); }), ErrorCode::BudgetExceeded);
  EXPECT_EQ(code_of([] { build_graph({2, 1, 16, 1}, Budget{}.with_max_order(1 << 15)); }),
            ErrorCode::BudgetExceeded);
}

TEST(Family, Enumerate) {
  auto ells = [](unsigned m) {
    std::vector<unsigned> out;
    for (const auto& s : enumerate_family(2, 1, m)) out.push_back(s.ell);
    return out;
  };
  EXPECT_EQ(ells(12), (std::vector<unsigned>{1, 2, 3, 6}));
  EXPECT_EQ(ells(30), (std::vector<unsigned>{1, 3, 5, 15}));
  EXPECT_TRUE(ells(7).empty());
}

TEST(Family, Subgraphs) {
  EXPECT_TRUE(is_subgraph({2, 1, 12, 3}, {2, 1, 12, 1}));
  EXPECT_FALSE(is_subgraph({2, 1, 12, 6}, {2, 1, 12, 1}));
  EXPECT_TRUE(is_subgraph({2, 1, 12, 1}, {2, 1, 12, 1}));
  EXPECT_EQ(code_of([] { is_subgraph({2, 1, 12, 1}, {3, 1, 12, 1}); }), ErrorCode::MixedBase);
}

TEST(Family, SubgraphMatchesSetContainment) {
  for (unsigned m : {4u, 6u, 8u, 12u}) {
    for (const auto& a : enumerate_family(2, 1, m)) {
      for (const auto& b : enumerate_family(2, 1, m)) {
        const auto sa = powers_by_enumeration(a);
        const auto sb = powers_by_enumeration(b);
        EXPECT_EQ(is_subgraph(a, b), std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
            << a.label() << " in " << b.label();
      }
    }
  }
}

TEST(Family, Normalize) {
  EXPECT_EQ(normalize(2, 1, 4, 2), (GraphSpec{2, 2, 2, 1}));
  EXPECT_EQ(normalize(2, 2, 2, 1), (GraphSpec{2, 2, 2, 1}));
  EXPECT_EQ(normalize(3, 1, 8, 2), (GraphSpec{3, 2, 4, 1}));
  EXPECT_EQ(normalize(3, 1, 8, 2).label(), "Gamma_{9,4}(1)");
  EXPECT_EQ(code_of([] { normalize(2, 1, 12, 5); }), ErrorCode::NotDivisible);
  // Same vertex set and the same connection set.
  const auto a = powers_by_enumeration({2, 1, 8, 2});
  const auto b = powers_by_enumeration(normalize(2, 1, 8, 2));
  EXPECT_EQ(a, b);
}

TEST(Family, Lattice) {
  EXPECT_EQ(family_lattice(12), (std::vector<std::vector<unsigned>>{{1, 3}, {2, 6}}));
  EXPECT_TRUE(family_lattice(9).empty());
  EXPECT_EQ(family_lattice(18), (std::vector<std::vector<unsigned>>{{1, 3, 9}}));
}

TEST(Automorphisms, AffineFrobenius) {
  const CayleyGraph g = build_graph({2, 1, 6, 1});
  const auto identity = apply_affine_frobenius(g, g.field().one(), g.field().zero(), 0);
  for (std::uint32_t x = 0; x < g.order(); ++x) EXPECT_EQ(identity[x], x);
  EXPECT_EQ(code_of([&] { apply_affine_frobenius(g, g.field().zero(), g.field().one(), 0); }), ErrorCode::ZeroScale);
  // a in S, any b, any Frobenius power: an automorphism.
  const FieldElement a = g.connection().elements[3];
  for (unsigned i = 0; i < 6; ++i) {
    const auto perm = apply_affine_frobenius(g, a, FieldElement{5}, i);
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      for (std::uint32_t y = 0; y < g.order(); ++y) {
        ASSERT_EQ(g.adjacency().test(x, y), g.adjacency().test(perm[x], perm[y]));
      }
    }
  }
}

TEST(Cosets, PartitionTheMultiplicativeGroup) {
  const GraphSpec spec{3, 1, 4, 1};
  const auto f = field_for(spec.field_params());
  const auto cosets = connection_cosets(spec, *f);
  ASSERT_EQ(cosets.size(), 4u);
  EXPECT_EQ(cosets[0], connection_set(spec, *f).elements);
  std::set<std::uint32_t> seen;
  for (const auto& c : cosets) {
    EXPECT_EQ(c.size(), 20u);
    for (FieldElement x : c) EXPECT_TRUE(seen.insert(x.value).second);
  }
  EXPECT_EQ(seen.size(), 80u);
}

TEST(Labels, Ascii) {
  EXPECT_EQ((GraphSpec{2, 2, 4, 1}).label(), "Gamma_{4,4}(1)");
  EXPECT_EQ((GraphSpec{3, 1, 8, 1, true}).label(), "co-Gamma_{3,8}(1)");
}
