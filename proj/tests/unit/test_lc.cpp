#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smoothloc/lc.hpp"

using namespace smoothloc;
using fixtures::el;
using fixtures::frame;

namespace {

struct C4Fixture {
  std::shared_ptr<const FiniteFrame> L = frame("C4");
  std::shared_ptr<const SublocaleLattice> SL = std::make_shared<const SublocaleLattice>(L);
  LcSemilattice LC{L};
  Element z = el(*L, "0"), a = el(*L, "a"), b = el(*L, "b"), t = el(*L, "1");

  int id(Element x, Element y) const { return LC.id_of({x, y}); }
  ElementSet family(std::initializer_list<LcPair> pairs) const {
    ElementSet s;
    for (LcPair p : pairs) s.insert(LC.id_of(p));
    return s;
  }
};

}  // namespace

TEST(LcPairs, NormalizeExamples) {
  auto C3 = frame("C3");
  const Element a = el(*C3, "a");
  EXPECT_EQ(lc_normalize(*C3, a, C3->top()), (LcPair{a, C3->top()}));
  EXPECT_EQ(lc_normalize(*C3, C3->bottom(), C3->bottom()), (LcPair{C3->top(), C3->top()}));
  auto D = frame("B2");
  EXPECT_EQ(lc_normalize(*D, D->bottom(), el(*D, "p")), (LcPair{el(*D, "q"), D->top()}));
}

TEST(LcPairs, SizesOfChains) {
  EXPECT_EQ(LcSemilattice(frame("2")).size(), 2);
  EXPECT_EQ(LcSemilattice(frame("C3")).size(), 4);
  EXPECT_EQ(LcSemilattice(frame("C4")).size(), 7);
  EXPECT_EQ(LcSemilattice(frame("C6")).size(), 16);
  EXPECT_EQ(LcSemilattice(frame("C8")).size(), 29);
}

TEST(LcPairs, ChainOfThreeIsSquare) {
  const LcSemilattice LC(frame("C3"));
  EXPECT_TRUE(isomorphic(LC.semilattice().poset(), boolean_poset(2)));
}

TEST(LcPairs, FourChainPairs) {
  C4Fixture f;
  const std::vector<LcPair> expected{{f.z, f.a}, {f.z, f.b}, {f.z, f.t}, {f.a, f.b},
                                     {f.a, f.t}, {f.b, f.t}, {f.t, f.t}};
  for (LcPair p : expected) EXPECT_TRUE(f.LC.find(p).has_value());
}

// Each canonical pair names a distinct locally closed sublocale, every
// locally closed sublocale arises, and ⊑ is reverse inclusion of those
// sublocales: (0, 1) names L and (1, 1) names O.
TEST(LcPairs, OrderIsReverseInclusionOfLocallyClosedSublocales) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    if (cf.frame->size() > 12) continue;
    const oracle::Frame O(cf.frame->poset());
    const LcSemilattice LC(cf.frame);
    EXPECT_EQ(static_cast<std::size_t>(LC.size()), O.lc_sets().size()) << cf.name;
    for (int p = 0; p < LC.size(); ++p)
      for (int q = 0; q < LC.size(); ++q) {
        const auto sp = O.locally_closed(LC[p].a, LC[p].b);
        const auto sq = O.locally_closed(LC[q].a, LC[q].b);
        ASSERT_EQ(LC.leq(p, q), (sq & ~sp) == 0) << cf.name;
        ASSERT_EQ(p == q, sp == sq) << cf.name;
      }
  }
}

TEST(LcPairs, CanonicalRepresentation) {
  auto C3 = frame("C3");
  const SublocaleLattice S3(C3);
  EXPECT_EQ(canonical_rep(S3, S3.open(el(*C3, "a"))), (LcPair{C3->bottom(), el(*C3, "a")}));
  EXPECT_EQ(canonical_rep(S3, S3.bottom()), (LcPair{C3->top(), C3->top()}));
  C4Fixture f;
  EXPECT_THROW(canonical_rep(*f.SL, f.SL->join(f.SL->closed(f.b), f.SL->open(f.a))), NotLocallyClosed);
}

TEST(LcPairs, NuSupplementFormula) {
  C4Fixture f;
  EXPECT_EQ(nu_supp_formula(*f.L, {{f.a, f.b}}), f.b);
  EXPECT_EQ(nu_supp_formula(*f.L, {{f.z, f.t}}), f.t);

  // Against ν_{S^#}(⋀S) computed inside the sublocale lattice.
  const SublocaleLattice& SL = *f.SL;
  const int s = SL.join(SL.closed(f.b), SL.open(f.a));
  const Sublocale supp = SL[SL.supplement(s)];
  EXPECT_EQ(nu_supp_formula(*f.L, {{f.b, f.t}, {f.z, f.a}}), nu(*f.L, supp, f.L->meet_of(SL[s].carrier)));
}

TEST(LcPairs, NuSupplementFormulaMatchesEngineOnCorpus) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    if (cf.frame->size() > 8) continue;
    const SublocaleLattice SL(cf.frame);
    const LcSemilattice LC(cf.frame);
    const int n = LC.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << std::min(n, 10)); ++bits) {
      const ElementSet F(bits);
      const int s = family_sublocale(SL, LC, F);
      const Element expected = nu(SL.frame(), SL[SL.supplement(s)], SL.frame().meet_of(SL[s].carrier));
      ASSERT_EQ(nu_supp_formula(SL.frame(), pairs_of(LC, F)), expected) << cf.name;
    }
  }
}

TEST(LcPairs, LocalExactnessExamples) {
  C4Fixture f;
  const LocalExactness bad = is_locally_exact(*f.SL, f.LC, f.family({{f.b, f.t}, {f.z, f.a}}));
  EXPECT_FALSE(bad.direct);
  EXPECT_TRUE(bad.agree());
  for (int p = 0; p < f.LC.size(); ++p) EXPECT_TRUE(is_locally_exact(*f.SL, f.LC, ElementSet::single(p)).direct);

  auto C3 = frame("C3");
  const SublocaleLattice S3(C3);
  const LcSemilattice L3(C3);
  const Element a = el(*C3, "a");
  ElementSet F;
  F.insert(L3.id_of({a, C3->top()}));
  F.insert(L3.id_of({C3->bottom(), a}));
  EXPECT_TRUE(is_locally_exact(S3, L3, F).direct);
}

TEST(LcPairs, MeetExamples) {
  C4Fixture f;
  const LcMeet m = lc_meet(f.LC, f.family({{f.b, f.t}, {f.z, f.a}}));
  ASSERT_TRUE(m.meet);
  EXPECT_EQ(*m.meet, (LcPair{f.z, f.t}));
  EXPECT_FALSE(m.admissible);
  ASSERT_TRUE(m.witness);
  EXPECT_EQ(*m.witness, (LcPair{f.a, f.b}));

  const LcMeet good = lc_meet(f.LC, f.family({{f.b, f.t}, {f.a, f.b}}));
  ASSERT_TRUE(good.meet);
  EXPECT_EQ(*good.meet, (LcPair{f.a, f.t}));
  EXPECT_TRUE(good.admissible);

  for (int p = 0; p < f.LC.size(); ++p) {
    const LcMeet withtop = lc_meet(f.LC, ElementSet::single(p) | ElementSet::single(f.LC.top()));
    EXPECT_EQ(*withtop.meet, f.LC[p]);
    EXPECT_TRUE(withtop.admissible);
  }
}

// Central equivalence: locally exact iff admissible in LC(L), both sides by
// scan, for every family on the small corpus frames.
TEST(LcPairs, LocallyExactIffAdmissibleOracle) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    if (cf.frame->size() > 6) continue;
    const oracle::Frame O(cf.frame->poset());
    const LcSemilattice LC(cf.frame);
    if (LC.size() > 12) continue;
    const FinitePoset& P = LC.semilattice().poset();
    const auto lc_sets = O.lc_sets();
    for (std::uint64_t F = 1; F < (std::uint64_t{1} << LC.size()); ++F) {
      oracle::Set joined = oracle::bit(O.top);
      for (int p : oracle::members(F)) joined = O.sub_join(joined, O.locally_closed(LC[p].a, LC[p].b));
      ASSERT_EQ(lc_sets.count(joined) == 1, oracle::admissible(P, F)) << cf.name;
    }
  }
}

TEST(LcPairs, ImageUnderMorphism) {
  auto C4 = frame("C4");
  auto C3 = frame("C3");
  const Element a3 = el(*C3, "a");
  const FrameMorphism f(C4, C3, {C3->bottom(), a3, a3, C3->top()});
  EXPECT_EQ(lc_image(f, {el(*C4, "a"), el(*C4, "b")}), (LcPair{C3->top(), C3->top()}));
  EXPECT_EQ(lc_image(f, {el(*C4, "b"), C4->top()}), (LcPair{a3, C3->top()}));
  const FrameMorphism id = FrameMorphism::identity(C4);
  const LcSemilattice LC(C4);
  for (LcPair p : LC.pairs()) EXPECT_EQ(lc_image(id, p), p);
}

TEST(LcPairs, ReportPassesOnCorpus) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    auto SL = std::make_shared<const SublocaleLattice>(cf.frame);
    const LcSemilattice LC(cf.frame);
    for (const CheckOutcome& c : verify_lc(*SL, LC)) EXPECT_TRUE(c.passed) << cf.name << ' ' << c.check;
  }
}
