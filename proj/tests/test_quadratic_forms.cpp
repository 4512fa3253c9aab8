#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "gpg/paley_graphs.hpp"
#include "gpg/quadratic_forms.hpp"

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

}  // namespace

TEST(TraceForm, ZeroMapsToZero) {
  const auto f = field_for({3, 1, 4});
  const TraceForm form = make_trace_form(*f, f->alpha(), 1);
  EXPECT_EQ(evaluate_form(form, f->zero()), f->zero());
  EXPECT_EQ(code_of([&] { make_trace_form(*f, f->zero(), 1); }), ErrorCode::ZeroElement);
}

TEST(TraceForm, ValuesLieInTheBaseField) {
  const auto f = field_for({2, 2, 4});
  const TraceForm form = make_trace_form(*f, f->exp(7), 1);
  for (std::uint32_t x = 0; x < f->size(); ++x) EXPECT_TRUE(f->in_subfield(evaluate_form(form, {x}), 2));
}

TEST(TraceForm, ExponentialSumsOverF16) {
  const auto f = field_for({2, 1, 4});
  const TraceForm in_s = make_trace_form(*f, f->exp(3), 1);  // alpha^3 is a cube
  const TraceForm out_s = make_trace_form(*f, f->one() == f->exp(1) ? f->exp(2) : f->exp(1), 1);
  EXPECT_EQ(exp_sum(in_s, f->one()), -8);
  EXPECT_EQ(exp_sum(out_s, f->one()), 4);
  EXPECT_EQ(classify_form(in_s), (FormClass{2, -1}));
  EXPECT_EQ(classify_form(out_s), (FormClass{4, 1}));
  // The character value on S is (T - 1)/3.
  EXPECT_EQ((exp_sum(in_s, f->one()) - 1) / 3, -3);
  EXPECT_EQ((exp_sum(out_s, f->one()) - 1) / 3, 1);
}

TEST(TraceForm, OddCharacteristicClasses) {
  const auto f81 = field_for({3, 1, 4});
  EXPECT_EQ(classify_form(make_trace_form(*f81, f81->one(), 1)), (FormClass{2, -1}));
  const auto f9 = field_for({3, 1, 2});
  // eps = -1, L = 4, t = 2.
  EXPECT_EQ(classify_form(make_trace_form(*f9, f9->exp(2), 1)), (FormClass{0, 1}));
  EXPECT_EQ(count_kernel(make_trace_form(*f9, f9->exp(2), 1), f9->zero()), 9);
}

TEST(TraceForm, OddRankIsOutOfTheory) {
  const auto f = field_for({3, 1, 3});
  EXPECT_EQ(code_of([&] { classify_form(make_trace_form(*f, f->one(), 1)); }), ErrorCode::OutOfTheory);
}

TEST(TraceForm, NotASubfield) {
  const auto f = field_for({2, 2, 2});
  const TraceForm form = make_trace_form(*f, f->one(), 1);
  FieldElement outside = f->alpha();
  ASSERT_FALSE(f->in_subfield(outside, 2));
  EXPECT_EQ(code_of([&] { count_kernel(form, outside); }), ErrorCode::NotASubfield);
}

// For every gamma the exhaustive kernel count, the count at a nonzero value
// and T must match the closed classification.
TEST(TraceForm, RankTypeMultiplicitiesExhaustive) {
  struct Case {
    std::uint64_t p;
    unsigned s, m, ell;
  };
  for (const Case c : {Case{2, 1, 4, 1}, Case{2, 1, 6, 1}, Case{2, 1, 6, 3}, Case{2, 1, 8, 2}, Case{2, 2, 4, 1},
                       Case{3, 1, 4, 1}, Case{3, 1, 4, 2}, Case{3, 1, 2, 1}, Case{5, 1, 2, 1}, Case{5, 1, 4, 1},
                       Case{7, 1, 2, 1}, Case{3, 2, 2, 1}}) {
    const auto f = field_for({c.p, c.s, c.m});
    const BigInt q = big_pow(c.p, c.s);
    const auto sub = f->subfield(c.s);
    std::map<std::pair<unsigned, int>, int> tally;
    for (std::uint32_t gamma = 1; gamma < f->size(); ++gamma) {
      const TraceForm form = make_trace_form(*f, {gamma}, c.ell);
      const FormClass cls = classify_form(form);
      ++tally[{cls.rank, cls.type}];
      for (FieldElement xi : sub) {
        ASSERT_EQ(count_kernel(form, xi), expected_count(q, c.m, cls, xi.value == 0)) << "gamma " << gamma;
      }
      const auto recovered = class_from_kernel(q, c.m, count_kernel(form, f->zero()));
      ASSERT_TRUE(recovered.has_value());
      EXPECT_EQ(*recovered, cls);
      EXPECT_EQ(exp_sum(form, f->one()), expected_exp_sum(q, c.m, cls));
    }
    // Two classes, the degenerate one taken by |S| = (q^m-1)/(q^g+1) values of gamma.
    EXPECT_EQ(tally.size(), 2u);
    const unsigned g = std::gcd(c.m, c.ell);
    const BigInt expected_low = exact_div(f->size() - 1, big_pow(q, g) + 1, "test");
    const int low = tally.begin()->second;  // the smaller rank sorts first
    EXPECT_EQ(BigInt(low), expected_low) << c.p << "^" << c.s << " m=" << c.m << " ell=" << c.ell;
  }
}

TEST(TraceForm, ClassFromKernelRejectsOddShapes) {
  EXPECT_FALSE(class_from_kernel(2, 4, 8).has_value());   // q^{m-1}: odd rank
  EXPECT_FALSE(class_from_kernel(3, 4, 28).has_value());  // 27 + 1 is not (q-1) q^e
  EXPECT_EQ(class_from_kernel(2, 4, 4), (FormClass{2, -1}));
  EXPECT_EQ(class_from_kernel(2, 4, 6), (FormClass{4, -1}));
}

TEST(TraceForm, EpsilonSign) {
  EXPECT_EQ(epsilon_ell(4, 1), 1);
  EXPECT_EQ(epsilon_ell(6, 1), -1);
  EXPECT_EQ(epsilon_ell(12, 3), 1);
  EXPECT_EQ(epsilon_ell(12, 2), -1);
}
