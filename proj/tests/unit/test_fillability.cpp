#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "torusfill/fillability.hpp"

using namespace torusfill;
using torusfill::testing::Gen;
using torusfill::testing::hyperbolic_sequences;

namespace {

constexpr Answer Y = Answer::Yes, N = Answer::No, U = Answer::Unknown;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

bool cites(const Verdict& v, std::string_view needle) {
  for (const auto& c : v.citations)
    if (c.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Fillability, VerdictExamples) {
  const Verdict a = verdict(xi_parabolic(-5));
  EXPECT_EQ(a.weak(), Y);
  EXPECT_EQ(a.strong(), N);
  EXPECT_TRUE(cites(a, "Theorem 1.1"));
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(std::get<ParabolicCobordism>(*a.witness).ledger.b2minus, 1);

  const Verdict b = verdict(xi_parabolic(-4));
  EXPECT_EQ(b.stein(), Y);
  EXPECT_TRUE(cites(b, "Proposition 3.2"));

  EXPECT_EQ(verdict(xi_hyperbolic(DSeq{8})).strong(), N);

  const Verdict d = verdict(xi_hyperbolic(DSeq{7, 2}));
  EXPECT_EQ(d.strong(), Y);
  EXPECT_EQ(d.stein(), U);
  EXPECT_TRUE(cites(d, "Proposition 1.5"));

  EXPECT_EQ(verdict(XiPrime{-7}).stein(), Y);
  const Verdict f = verdict(Eta{-2});
  EXPECT_EQ(f.strong(), N);
  EXPECT_TRUE(cites(f, "Giroux torsion"));

  const Verdict g = verdict(xi_hyperbolic(DSeq{4}, 3));
  EXPECT_EQ(g.weak(), Y);
  EXPECT_EQ(g.strong(), N);
  EXPECT_EQ(g.stein(), N);
}

TEST(Fillability, VerdictTable) {
  for (Int n = -3; n <= 6; ++n) {
    const Verdict v = verdict(xi_parabolic(n));
    EXPECT_EQ(v.stein(), Y) << n;
    EXPECT_TRUE(cites(v, "[V]")) << n;
  }
  for (Int n = -12; n <= -5; ++n) EXPECT_EQ(verdict(xi_parabolic(n)).strong(), N);
  for (Int n = -9; n <= -1; ++n) EXPECT_EQ(verdict(XiPrime{n}).stein(), Y);
  for (Int n : {0, 1, 3, 10}) EXPECT_EQ(verdict(Eta{n}).stein(), Y);
  for (Int n : {-1, -2, -7}) EXPECT_EQ(verdict(Eta{n}).strong(), N);
  for (Int m : {3, 5, 7}) {
    EXPECT_EQ(verdict(xi_parabolic(-1, m)).strong(), N);
    EXPECT_EQ(verdict(xi_hyperbolic(DSeq{3, 2}, m)).strong(), N);
  }
}

TEST(Fillability, SingleBlockMatchesTheCriterion) {
  for (Int n1 = 0; n1 <= 8; ++n1)
    for (Int m1 = 0; m1 <= 8; ++m1) {
      const DSeq d = BlockForm{{{n1, m1}}, 0}.sequence();
      const Verdict v = verdict(xi_hyperbolic(d));
      EXPECT_EQ(v.strong() == Y, n1 <= m1 + 4) << format_dseq(d);
      EXPECT_NE(v.strong(), U) << format_dseq(d);
    }
}

TEST(Fillability, SingleBlockEmbeddability) {
  for (Int n1 = 0; n1 <= 7; ++n1)
    for (Int m1 = 0; m1 <= 5; ++m1) {
      const DSeq d = BlockForm{{{n1, m1}}, 0}.sequence();
      const EmbeddingResult e = embeddable_sufficient(d);
      EXPECT_EQ(e.kind != EmbeddingKind::NoneFound, n1 <= m1 + 4) << format_dseq(d);
    }
}

TEST(Fillability, MonotonicityIsEnforced) {
  int accepted = 0;
  for (Answer w : {Y, N, U})
    for (Answer s : {Y, N, U})
      for (Answer t : {Y, N, U}) {
        if (monotone(w, s, t)) {
          ++accepted;
          EXPECT_NO_THROW(Verdict(w, s, t));
        } else {
          EXPECT_THROW(Verdict(w, s, t), std::logic_error);
        }
      }
  // YYY YYN YYU YNN YUN YUU UNN UUN UUU NNN
  EXPECT_EQ(accepted, 10);
  EXPECT_FALSE(monotone(Y, N, Y));
  EXPECT_FALSE(monotone(N, Y, Y));
  EXPECT_TRUE(monotone(Y, U, U));
}

TEST(Fillability, RandomDescriptorsAreMonotoneAndCited) {
  Gen gen(51);
  for (int t = 0; t < 150; ++t) {
    ContactDescriptor desc;
    switch (gen.integer(0, 3)) {
      case 0: desc = xi_parabolic(gen.integer(-10, 6), 2 * gen.integer(0, 2) + 1); break;
      case 1: desc = xi_hyperbolic(gen.block_sequence(3, 3, 3), gen.coin() ? 1 : 3); break;
      case 2: desc = XiPrime{gen.integer(-10, -1)}; break;
      default: desc = Eta{gen.integer(-6, 6)}; break;
    }
    const Verdict v = verdict(desc);
    EXPECT_TRUE(monotone(v.weak(), v.strong(), v.stein())) << describe(desc);
    EXPECT_FALSE(v.citations.empty()) << describe(desc);
  }
}

TEST(Fillability, VerdictDependsOnlyOnConjugacyClass) {
  Gen gen(52);
  for (int t = 0; t < 30; ++t) {
    const Mat2 x = gen.sl2(6);
    const DSeq d = gen.block_sequence(2, 3, 3);
    const Mat2 a = -eval_a(d);
    const Verdict v1 = verdict(XiA{a, 1});
    const Verdict v2 = verdict(XiA{x * a * x.inverse(), 1});
    EXPECT_EQ(v1.strong(), v2.strong()) << format_dseq(d);
    EXPECT_EQ(v1.stein(), v2.stein());
    const Int n = gen.integer(-8, 3);
    EXPECT_EQ(verdict(xi_parabolic(n)).strong(), verdict(XiA{x * -pow(mat2::T, n) * x.inverse(), 1}).strong());
  }
}

TEST(Fillability, InvalidDescriptors) {
  EXPECT_EQ(kind_of([] { validate(xi_parabolic(-1, 2)); }), ErrorKind::InvalidDescriptor);
  EXPECT_EQ(kind_of([] { validate(xi_parabolic(-1, -1)); }), ErrorKind::InvalidDescriptor);
  EXPECT_EQ(kind_of([] { validate(XiPrime{0}); }), ErrorKind::InvalidDescriptor);
  EXPECT_EQ(kind_of([] { validate(XiA{mat2::S, 1}); }), ErrorKind::InvalidDescriptor);
  EXPECT_EQ(kind_of([] { validate(XiA{mat2::T, 1}); }), ErrorKind::InvalidDescriptor);
  EXPECT_EQ(kind_of([] { validate(XiA{eval_a(DSeq{3, 2}), 1}); }), ErrorKind::InvalidDescriptor);
  EXPECT_EQ(kind_of([] { (void)verdict(XiA{mat2::J, 1}); }), ErrorKind::InvalidDescriptor);
}

TEST(Fillability, OpenRegionStaysUnknown) {
  // Blocks (n, m) = (0, 2), (6, 0): the handle ledger passes with equality and
  // the exhaustive search finds no embedding.
  const DSeq d{3, 2, 2, 9};
  ASSERT_EQ(parse_blocks(d).s(), 2u);
  EXPECT_TRUE(theorem14_ledger(d).passes);
  EXPECT_EQ(embeddable_sufficient(d).kind, EmbeddingKind::NoneFound);
  const Verdict v = verdict(xi_hyperbolic(d));
  EXPECT_EQ(v.weak(), Y);
  EXPECT_EQ(v.strong(), U);
  EXPECT_EQ(v.stein(), U);
  bool named = false;
  for (const auto& n : v.notes) named = named || n.find("open region") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Fillability, BudgetExhaustionIsUnknown) {
  VerdictOptions tight;
  tight.budget.seq_sum = 5;
  const Verdict v = verdict(xi_hyperbolic(DSeq{5, 2, 2, 3}), tight);
  EXPECT_EQ(v.weak(), Y);
  EXPECT_EQ(v.strong(), U);
  EXPECT_TRUE(v.any_unknown());
}

TEST(Fillability, Theorem14Examples) {
  const Theorem14Ledger a = theorem14_ledger(DSeq{8});
  EXPECT_EQ(a.handles, 5);
  EXPECT_EQ(a.c, 3);
  EXPECT_EQ(a.upper, 4);
  EXPECT_FALSE(a.passes);
  const Theorem14Ledger b = theorem14_ledger(DSeq{4, 2, 5});
  EXPECT_EQ(b.handles, 4);
  EXPECT_EQ(b.d0, (DSeq{3, 2, 2}));
  EXPECT_TRUE(b.passes);
  EXPECT_LE(b.blocks.sum_n(), b.blocks.sum_m() + 4);
  const Theorem14Ledger c = theorem14_ledger(DSeq{3});
  EXPECT_EQ(c.handles, 0);
  EXPECT_EQ(c.d0, (DSeq{3}));
  EXPECT_TRUE(c.passes);
}

TEST(Fillability, CobordismReduceExamples) {
  const CobordismReduction a = cobordism_reduce(DSeq{5, 2, 2, 3});
  EXPECT_EQ(a.final, (DSeq{3, 2, 2, 2}));
  EXPECT_EQ(a.total_handles, 3);
  const CobordismReduction b = cobordism_reduce(DSeq{3});
  EXPECT_EQ(b.final, (DSeq{3}));
  EXPECT_EQ(b.total_handles, 0);
  const CobordismReduction c = cobordism_reduce(DSeq{4, 2});
  EXPECT_EQ(c.final, (DSeq{3, 2}));
  EXPECT_EQ(c.total_handles, 1);
}

TEST(Fillability, LedgerConsistencyUpToSum15) {
  for (const DSeq& d : hyperbolic_sequences(15)) {
    const Theorem14Ledger led = theorem14_ledger(d);
    const CobordismReduction red = cobordism_reduce(d);
    const BlockForm f = parse_blocks(d);
    EXPECT_EQ(red.total_handles, f.sum_n() + Int(f.s()) - 1) << format_dseq(d);
    EXPECT_EQ(red.total_handles, led.handles);
    EXPECT_EQ(red.final, led.d0);
    EXPECT_EQ(led.passes, f.sum_n() <= f.sum_m() + 4);
    EXPECT_EQ(red.ledger.b2minus, red.total_handles);
    EXPECT_EQ(red.ledger.b2plus, 0);
  }
}

TEST(Fillability, EmbeddingExamples) {
  const EmbeddingResult a = embeddable_sufficient(DSeq{7, 2});
  ASSERT_EQ(a.kind, EmbeddingKind::Witness);
  EXPECT_EQ(a.witness->reached, (DSeq{3, 1, 2, 2, 1}));
  EXPECT_EQ(a.target, (DSeq{4, 2, 2, 2, 2}));
  EXPECT_EQ(embeddable_sufficient(DSeq{3}).kind, EmbeddingKind::RuleS1);
  const EmbeddingResult c = embeddable_sufficient(DSeq{8});
  EXPECT_EQ(c.kind, EmbeddingKind::NoneFound);
  EXPECT_EQ(c.target, (DSeq{3, 2, 2, 2, 2, 2}));
}

TEST(Fillability, EmbeddingWitnessesReplay) {
  for (const DSeq& d : hyperbolic_sequences(11)) {
    const EmbeddingResult e = embeddable_sufficient(d);
    if (e.kind != EmbeddingKind::Witness) continue;
    EXPECT_EQ(replay_blowups(e.witness->edges), e.witness->reached);
    EXPECT_EQ(leq_cyclic(e.witness->reached, e.target), e.witness->rotation);
    EXPECT_TRUE(theorem14_ledger(d).passes) << format_dseq(d);  // sufficient must imply necessary
  }
}

TEST(Fillability, DivisorReports) {
  const DivisorReport a = universally_tight_divisor_report({0, 0});
  EXPECT_EQ(a.form_det, -4);
  EXPECT_EQ(a.monodromy, -mat2::I);
  EXPECT_TRUE(a.bridge_holds);
  EXPECT_EQ(a.branch, "parabolic, tr = -2");
  const DivisorReport b = universally_tight_divisor_report({1, 1});
  EXPECT_EQ(b.form_det, -3);
  EXPECT_EQ(b.bundle.trace, -1);
  EXPECT_EQ(b.branch, "elliptic");
  try {
    (void)universally_tight_divisor_report({-2, -2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
    EXPECT_NE(e.detail().find("{0, 1}"), std::string::npos);
  }
  try {
    (void)universally_tight_divisor_report({-3, -3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.detail().find("singular"), std::string::npos) << e.detail();
  }
  try {
    (void)universally_tight_divisor_report({1, 0, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("singular"), std::string::npos) << e.detail();
  }
  EXPECT_EQ(universally_tight_divisor_report({1, 5}).branch, "hyperbolic, tr > 2");
  EXPECT_EQ(universally_tight_divisor_report({1, -5}).branch, "hyperbolic, tr < -2");
}
