#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smoothloc/lattice_io.hpp"

using namespace smoothloc;
using fixtures::el;
using fixtures::frame;

TEST(BuildFrame, ChainOfThreeArrows) {
  auto L = frame("C3");
  const Element z = el(*L, "0"), a = el(*L, "a"), t = el(*L, "1");
  EXPECT_EQ(L->arrow(a, z), z);
  EXPECT_EQ(L->arrow(t, a), a);
  EXPECT_EQ(L->arrow(a, a), t);
  EXPECT_EQ(L->arrow(z, z), t);
}

TEST(BuildFrame, TwoElementChainArrowsAreTargetOrTop) {
  auto L = frame("2");
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Element r = L->arrow(x, y);
      EXPECT_TRUE(r == y || r == L->top());
    }
}

TEST(BuildFrame, PentagonIsNotDistributive) {
  const FinitePoset n5 = fixtures::pentagon();
  try {
    build_frame(n5, "N5");
    FAIL() << "N5 accepted";
  } catch (const NotDistributive& e) {
    const auto [x, y, z] = e.witness();
    const oracle::Frame O(n5);
    EXPECT_NE(O.m(x, O.j(y, z)), O.j(O.m(x, y), O.m(x, z)));
  }
}

TEST(BuildFrame, M3IsNotDistributive) { EXPECT_THROW(build_frame(fixtures::m3()), NotDistributive); }

TEST(BuildFrame, NonLatticeRejected) {
  const FinitePoset vee = FinitePoset::from_covers(3, {{0, 2}, {1, 2}});
  EXPECT_THROW(build_frame(vee), NotALattice);
}

TEST(BuildFrame, CycleRejected) {
  EXPECT_THROW(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), InvalidPoset);
}

TEST(Heyting, SpecExamples) {
  auto C4 = frame("C4");
  EXPECT_EQ(heyting(*C4, el(*C4, "b"), el(*C4, "a")), el(*C4, "a"));
  EXPECT_EQ(pseudocomplement(*C4, el(*C4, "a")), C4->bottom());
  auto D = frame("B2");
  EXPECT_EQ(pseudocomplement(*D, el(*D, "p")), el(*D, "q"));
  for (auto name : {"C3", "C4", "B2", "2xC3"}) {
    auto L = frame(name);
    EXPECT_EQ(pseudocomplement(*L, L->bottom()), L->top());
    for (int a = 0; a < L->size(); ++a) {
      EXPECT_EQ(heyting(*L, L->top(), a), a);
      EXPECT_EQ(heyting(*L, L->bottom(), a), L->top());
    }
  }
}

TEST(Heyting, TablesMatchScanOracleOnCorpus) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    const FiniteFrame& L = *cf.frame;
    const oracle::Frame O(L.poset());
    ASSERT_EQ(L.top(), O.top) << cf.name;
    ASSERT_EQ(L.bottom(), O.bottom) << cf.name;
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        ASSERT_EQ(L.meet(a, b), O.m(a, b)) << cf.name;
        ASSERT_EQ(L.join(a, b), O.j(a, b)) << cf.name;
        ASSERT_EQ(L.arrow(a, b), O.to(a, b)) << cf.name;
      }
  }
}

TEST(Heyting, AdjunctionOnCorpus) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    const FiniteFrame& L = *cf.frame;
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b)
        for (int c = 0; c < L.size(); ++c)
          ASSERT_EQ(L.leq(L.meet(c, a), b), L.leq(c, L.arrow(a, b))) << cf.name;
  }
}

TEST(Heyting, AllTwelveLawsOnCorpus) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    const LawReport r = verify_heyting_laws(*cf.frame);
    EXPECT_EQ(r.laws.size(), 12u);
    EXPECT_TRUE(r.all_passed()) << cf.name;
  }
}

TEST(Heyting, SetJoinsAndMeets) {
  auto L = frame("2xC3");
  EXPECT_EQ(L->meet_of(ElementSet{}), L->top());
  EXPECT_EQ(L->join_of(ElementSet{}), L->bottom());
  EXPECT_EQ(L->join_of(L->all()), L->top());
  EXPECT_EQ(L->meet_of(L->all()), L->bottom());
}

TEST(LatticeText, ParsesLabelsAndIds) {
  const NamedPoset np = parse_lattice(
      "# comment\n"
      "lattice C3\n"
      "elements 3\n"
      "labels 0 a 1\n"
      "covers\n"
      "0 a\n"
      "a 2\n"
      "end\n");
  EXPECT_EQ(np.name, "C3");
  EXPECT_TRUE(isomorphic(np.poset, chain_poset(3)));
  EXPECT_EQ(np.poset.label(1), "a");
}

TEST(LatticeText, ReportsLineOfError) {
  try {
    parse_lattice("lattice X\nelements 2\ncovers\n0 7\nend\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  } catch (const InvalidPoset&) {
  }
  EXPECT_THROW(parse_lattice("lattice X\nelements two\n"), ParseError);
}

TEST(LatticeText, EmitParseRoundTrip) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    const FinitePoset& p = cf.frame->poset();
    const NamedPoset back = parse_lattice(emit_lattice(cf.name, p));
    EXPECT_EQ(back.name, cf.name);
    EXPECT_EQ(back.poset, p) << cf.name;
  }
}

TEST(LatticeText, DotRoundTrip) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    const NamedPoset back = parse_dot(emit_dot(cf.name, cf.frame->poset()));
    EXPECT_TRUE(isomorphic(back.poset, cf.frame->poset())) << cf.name;
    EXPECT_EQ(back.poset.labels(), cf.frame->poset().labels()) << cf.name;
  }
}

TEST(LatticeText, MorphismRoundTrip) {
  const MorphismText m = parse_morphism("morphism f from C4 to C3\nmap 0 0\nmap a a\nmap b a\nmap 1 1\nend\n");
  EXPECT_EQ(m.name, "f");
  EXPECT_EQ(m.from, "C4");
  EXPECT_EQ(m.to, "C3");
  ASSERT_EQ(m.map.size(), 4u);
  const MorphismText again = parse_morphism(emit_morphism(m));
  EXPECT_EQ(again.map, m.map);
}

TEST(Isomorphism, CanonicalFormAgreesWithSearch) {
  const auto posets = enumerate_posets(4);
  EXPECT_EQ(posets.size(), 16u);
  for (std::size_t i = 0; i < posets.size(); ++i)
    for (std::size_t j = 0; j < posets.size(); ++j) {
      const bool same = canonical_form(posets[i]) == canonical_form(posets[j]);
      EXPECT_EQ(same, i == j);
      EXPECT_EQ(isomorphic(posets[i], posets[j]), i == j);
    }
  const FinitePoset p = fixtures::pentagon();
  const FinitePoset q = p.relabeled({4, 2, 0, 1, 3});
  EXPECT_EQ(canonical_form(p), canonical_form(q));
  EXPECT_EQ(invariant_hash(p), invariant_hash(q));
  const auto iso = find_isomorphism(p, q);
  ASSERT_TRUE(iso);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(p.leq(a, b), q.leq((*iso)[a], (*iso)[b]));
}

TEST(FrameMorphism, RejectsNonHomomorphism) {
  auto C3 = frame("C3");
  auto two = frame("2");
  EXPECT_THROW(FrameMorphism(C3, two, {0, 1, 0}), Error);
  EXPECT_NO_THROW(FrameMorphism(C3, two, {0, 1, 1}));
}
