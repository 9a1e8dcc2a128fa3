#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smoothloc/lift.hpp"

using namespace smoothloc;
using fixtures::el;
using fixtures::frame;

namespace {

struct Pair {
  std::shared_ptr<const FrameAnalysis> L, M;
};

Pair analyses(const FrameMorphism& f) { return {FrameAnalysis::of(f.dom_ptr()), FrameAnalysis::of(f.cod_ptr())}; }

// The corpus frames with at most five elements, every morphism between them.
template <class Fn>
void for_small_morphisms(Fn&& fn) {
  std::vector<std::shared_ptr<const FiniteFrame>> small;
  for (const CorpusFrame& cf : fixtures::corpus_frames())
    if (cf.frame->size() <= 5) small.push_back(cf.frame);
  for (const auto& A : small)
    for (const auto& B : small)
      for (const FrameMorphism& f : gen_morphisms(A, B, CorpusSpec{})) fn(f);
}

}  // namespace

TEST(Lift, IdentityLiftsEverywhere) {
  for (auto name : {"2", "C3", "C4", "B2", "2xC3"}) {
    const FrameMorphism f = FrameMorphism::identity(frame(name));
    const auto [L, M] = analyses(f);
    EXPECT_TRUE(check_WDb(f, *L, *M).passed);
    EXPECT_TRUE(check_WDs(f, *L, *M).passed);
    EXPECT_TRUE(is_locally_exact_morphism(f, *L, *M).passed);
    const SbLift lift = build_sb_lift(f, *L, *M);
    EXPECT_TRUE(lift.verified()) << name;
    for (int s : L->smooth->collection()) EXPECT_EQ(lift.table[s], s);
    EXPECT_EQ(count_sb_lifts(f, *L, *M), std::optional<std::size_t>(1));
  }
}

TEST(Lift, CollapseOfFourChainOntoTwo) {
  auto C4 = frame("C4");
  auto two = frame("2");
  const FrameMorphism f(C4, two, {0, 1, 1, 1});
  const auto [L, M] = analyses(f);
  EXPECT_TRUE(check_WDs(f, *L, *M).passed);
  EXPECT_TRUE(check_WDo(f, *L, *M).passed);
  EXPECT_TRUE(check_WDc(f, *L, *M).passed);
  EXPECT_TRUE(all_passed(check_s_lift(f, *L, *M)));
}

TEST(Lift, ThreeWayEquivalenceOnSmallFrames) {
  std::size_t seen = 0;
  for_small_morphisms([&](const FrameMorphism& f) {
    const auto [L, M] = analyses(f);
    const bool wdb = check_WDb(f, *L, *M).passed;
    const bool le = is_locally_exact_morphism(f, *L, *M).passed;
    bool lifts = true;
    try {
      EXPECT_TRUE(build_sb_lift(f, *L, *M).verified());
    } catch (const NoLift&) {
      lifts = false;
    }
    ASSERT_EQ(wdb, le) << f.dom().name() << "->" << f.cod().name();
    ASSERT_EQ(wdb, lifts) << f.dom().name() << "->" << f.cod().name();
    if (lifts) EXPECT_EQ(count_sb_lifts(f, *L, *M), std::optional<std::size_t>(1));
    EXPECT_TRUE(check_WDo(f, *L, *M).passed);
    EXPECT_TRUE(check_WDs(f, *L, *M).passed);
    ++seen;
  });
  EXPECT_GT(seen, 100u);
}

TEST(Lift, ClosedAndOpenLiftsCommute) {
  for_small_morphisms([](const FrameMorphism& f) {
    const auto [L, M] = analyses(f);
    EXPECT_TRUE(build_sc_lift(f, *L, *M).verified());
    EXPECT_TRUE(build_so_lift(f, *L, *M).verified());
  });
}

TEST(Lift, VerdictMatchesComponents) {
  for_small_morphisms([](const FrameMorphism& f) {
    const auto [L, M] = analyses(f);
    const MorphismVerdict v = verify_morphism(f, *L, *M);
    EXPECT_EQ(v.wdb, v.locally_exact);
    EXPECT_EQ(v.wdb, v.lifts);
    for (const CheckOutcome& c : v.checks) EXPECT_TRUE(c.passed) << c.check << ' ' << c.witness;
  });
}

TEST(Lift, WdLinkOnCorpus) {
  for (const CorpusFrame& cf : fixtures::corpus_frames()) {
    if (cf.frame->size() > 8) continue;
    EXPECT_TRUE(verify_wd_link(*FrameAnalysis::of(cf.frame)).passed) << cf.name;
  }
}

TEST(Corpus, MorphismExamples) {
  auto two = frame("2");
  auto C3 = frame("C3");
  auto D = frame("B2");
  const auto id = gen_morphisms(two, two, CorpusSpec{});
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].table(), (std::vector<Element>{0, 1}));
  EXPECT_EQ(gen_morphisms(C3, two, CorpusSpec{}).size(), 2u);
  for (const FrameMorphism& f : gen_morphisms(D, C3, CorpusSpec{})) {
    const Element p = f(el(*D, "p")), q = f(el(*D, "q"));
    EXPECT_FALSE(p == el(*C3, "a") && q == el(*C3, "a"));
  }
}

TEST(Corpus, MorphismsMatchBruteForce) {
  std::vector<std::shared_ptr<const FiniteFrame>> small;
  for (const CorpusFrame& cf : fixtures::corpus_frames())
    if (cf.frame->size() <= 6) small.push_back(cf.frame);
  EXPECT_EQ(small.size(), 12u);
  std::size_t total = 0;
  for (const auto& A : small)
    for (const auto& B : small) {
      const oracle::Frame OA(A->poset()), OB(B->poset());
      auto expected = oracle::frame_homs(OA, OB);
      std::vector<std::vector<int>> got;
      for (const FrameMorphism& f : gen_morphisms(A, B, CorpusSpec{})) got.push_back(f.table());
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, expected) << A->name() << "->" << B->name();
      total += got.size();
    }
  EXPECT_EQ(total, 2642u);
}
