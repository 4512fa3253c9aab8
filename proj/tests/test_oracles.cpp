#include <gtest/gtest.h>

#include <functional>

#include "gpg/oracles.hpp"

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

std::vector<BigInt> tuple(const SrgCount& c) { return {c.v, c.k, c.e, c.d}; }

void expect_all_pass(const VerificationReport& report) {
  for (const Check& c : report.checks) {
    EXPECT_TRUE(c.pass) << report.spec.label() << " " << c.name << ": expected " << c.expected << ", observed "
                        << c.observed;
  }
}

}  // namespace

TEST(Oracles, CountedParameters) {
  EXPECT_EQ(tuple(count_srg_params(build_graph({2, 1, 4, 1}))), (std::vector<BigInt>{16, 5, 0, 2}));
  EXPECT_EQ(tuple(count_srg_params(build_graph({3, 1, 4, 1}))), (std::vector<BigInt>{81, 20, 1, 6}));
  EXPECT_EQ(tuple(count_srg_params(build_graph({2, 1, 4, 2}))), (std::vector<BigInt>{16, 3, 2, 0}));
}

TEST(Oracles, SquareIdentity) {
  const CayleyGraph g = build_graph({2, 1, 4, 1});
  SrgRecord rec = srg_params({2, 1, 4, 1});
  EXPECT_TRUE(verify_a2_identity(g, rec));
  rec.d = 3;
  EXPECT_FALSE(verify_a2_identity(g, rec));
  EXPECT_TRUE(verify_a2_identity(build_graph({3, 1, 4, 1, true}), srg_params({3, 1, 4, 1, true})));
}

TEST(Oracles, Trees) {
  EXPECT_EQ(count_trees_bruteforce(build_graph({2, 1, 4, 1})), BigInt(1) << 31);
  // 2^31 * 3^10, not 8 * 3^10.
  EXPECT_EQ(count_trees_bruteforce(build_graph({2, 1, 4, 1, true})), (BigInt(1) << 31) * 59049);
  EXPECT_EQ(count_trees_bruteforce(build_graph({2, 1, 4, 2})), 0);
  EXPECT_EQ(code_of([] { count_trees_bruteforce(build_graph({2, 1, 10, 1})); }), ErrorCode::BudgetExceeded);
}

TEST(Oracles, Bareiss) {
  EXPECT_EQ(bareiss_determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(bareiss_determinant({{1, 2}, {2, 4}}), 0);
}

TEST(Oracles, Diameter) {
  EXPECT_EQ(bfs_diameter(build_graph({2, 1, 4, 1}), 0), 2);
  EXPECT_EQ(bfs_diameter(build_graph({2, 1, 3, 1}), 0), 1);
  const CayleyGraph k4s = build_graph({2, 1, 4, 2});
  try {
    bfs_diameter(k4s, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisconnectedComponentsFound);
    EXPECT_NE(std::string(e.what()).find("4 components"), std::string::npos);
  }
  EXPECT_EQ(component_sizes(k4s.adjacency()), (std::vector<std::uint32_t>{4, 4, 4, 4}));
}

TEST(Oracles, WalkPathsAgree) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 6, 1}, GraphSpec{2, 1, 6, 1, true}, GraphSpec{3, 1, 4, 1}}) {
    const CayleyGraph graph = build_graph(g);
    const auto full = count_walks_bruteforce(graph, 6);
    const auto from_pairs = walks_from_pair_counts(graph.adjacency(), PairCounts(graph.adjacency()));
    for (unsigned r = 2; r <= 4; ++r) EXPECT_EQ(full[r], from_pairs[r]);
    EXPECT_TRUE(translation_invariant(graph));
  }
  // Above 256 vertices the translation-invariance shortcut is taken.
  const CayleyGraph big = build_graph({2, 1, 10, 1});
  const auto w = count_walks_bruteforce(big, 4);
  for (unsigned r = 1; r <= 4; ++r) EXPECT_EQ(w[r], closed_walks({2, 1, 10, 1}, r));
}

TEST(Oracles, CharacterSpectrum) {
  EXPECT_EQ(character_spectrum(build_graph({2, 1, 6, 1})), spectrum({2, 1, 6, 1}));
  EXPECT_EQ(character_spectrum(build_graph({5, 1, 2, 1, true})), spectrum({5, 1, 2, 1, true}));
  EXPECT_EQ(character_spectrum(build_graph({3, 1, 4, 2})), spectrum({3, 1, 4, 2}));
}

TEST(Oracles, SuitePassesOnTheTableRows) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 4, 1}, GraphSpec{3, 1, 4, 1}, GraphSpec{2, 2, 4, 1}}) {
    expect_all_pass(run_suite(g));
    expect_all_pass(run_suite(g.complement()));
  }
}

TEST(Oracles, SuiteOnHalfCases) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 4, 2}, GraphSpec{5, 1, 2, 1}, GraphSpec{2, 1, 2, 1, true}}) {
    expect_all_pass(run_suite(g));
  }
}

TEST(Oracles, SuiteRespectsBudget) {
  EXPECT_EQ(code_of([] { run_suite({2, 1, 14, 1}); }), ErrorCode::BudgetExceeded);
}

TEST(Oracles, FalsificationControlsReject) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 4, 1}, GraphSpec{3, 1, 4, 1}, GraphSpec{2, 1, 6, 1, true}}) {
    const auto controls = falsification_controls(g);
    EXPECT_GE(controls.size(), 6u);
    for (const Check& c : controls) EXPECT_TRUE(c.pass) << g.label() << " " << c.name;
  }
}

TEST(Oracles, RankTypeSweepClean) {
  for (const GraphSpec& g : {GraphSpec{2, 1, 8, 1}, GraphSpec{3, 1, 4, 1}, GraphSpec{5, 1, 4, 2}}) {
    const auto f = field_for(g.field_params());
    EXPECT_TRUE(rank_type_sweep(g, *f).empty()) << g.label();
  }
}
