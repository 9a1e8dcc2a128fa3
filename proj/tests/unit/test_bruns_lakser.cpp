#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smoothloc/lc.hpp"
#include "smoothloc/semilattice.hpp"

using namespace smoothloc;
using fixtures::el;
using fixtures::set_of;

namespace {

const std::vector<CorpusSemilattice>& semilattices(int max_size) {
  static std::map<int, std::vector<CorpusSemilattice>> cache;
  auto it = cache.find(max_size);
  if (it == cache.end()) {
    CorpusSpec spec;
    spec.max_semilattice_size = max_size;
    it = cache.emplace(max_size, gen_semilattices(spec)).first;
  }
  return it->second;
}

std::shared_ptr<const AUFrame> au_of(std::shared_ptr<const JoinSemilattice> S) {
  return std::make_shared<const AUFrame>(std::move(S));
}

// diamond {m < a, b < t} to the chain 0 < t with m ↦ 0 and the rest ↦ t
JoinHom diamond_to_chain() {
  auto D = fixtures::diamond_semilattice();
  auto C = fixtures::chain_semilattice(2);
  return JoinHom(D, C, {0, 1, 1, 1}, "diamond->chain");
}

}  // namespace

TEST(Semilattice, CountsUpToIsomorphism) {
  // Finite join-semilattices with top on n elements are the lattices on n
  // elements once a bottom is adjoined: 1, 1, 1, 2, 5, 15.
  std::vector<int> by_size(7, 0);
  for (const CorpusSemilattice& s : semilattices(6)) ++by_size[s.semilattice->size()];
  EXPECT_EQ(by_size, (std::vector<int>{0, 1, 1, 2, 5, 15, 53}));
}

TEST(Semilattice, MeetExamples) {
  auto C = fixtures::chain_semilattice(4);
  EXPECT_EQ(meet_exists(*C, set_of({1, 2, 3})), std::optional<Element>(1));
  const auto vee = JoinSemilattice::from_poset(FinitePoset::from_covers(3, {{0, 2}, {1, 2}}, {"a", "b", "t"}));
  EXPECT_FALSE(meet_exists(vee, set_of({0, 1})).has_value());

  const LcSemilattice LC(fixtures::frame("C4"));
  const FiniteFrame& L = LC.frame();
  ElementSet F;
  F.insert(LC.id_of({el(L, "b"), L.top()}));
  F.insert(LC.id_of({L.bottom(), el(L, "a")}));
  const auto m = meet_exists(LC.semilattice(), F);
  ASSERT_TRUE(m);
  EXPECT_EQ(LC[*m], (LcPair{L.bottom(), L.top()}));
  const Admissibility adm = check_admissible(LC.semilattice(), F);
  EXPECT_FALSE(adm.admissible);
  ASSERT_TRUE(adm.witness);
  EXPECT_EQ(LC[*adm.witness], (LcPair{el(L, "a"), el(L, "b")}));
}

TEST(Semilattice, AdmissibleFamilyExamples) {
  auto D = fixtures::diamond_semilattice();
  EXPECT_TRUE(is_admissible_family(*D, set_of({el(*D, "a"), el(*D, "b")})));
  for (int x = 0; x < D->size(); ++x) EXPECT_TRUE(is_admissible_family(*D, ElementSet::single(x)));
}

TEST(Semilattice, AdmissibilityMatchesDefinition) {
  for (const CorpusSemilattice& s : semilattices(5)) {
    const JoinSemilattice& S = *s.semilattice;
    for (std::uint64_t F = 1; F < (std::uint64_t{1} << S.size()); ++F)
      ASSERT_EQ(is_admissible_family(S, ElementSet(F)), oracle::admissible(S.poset(), F)) << s.name;
  }
}

TEST(BrunsLakser, AdmissibleUpperSetsMatchDefinition) {
  for (const CorpusSemilattice& s : semilattices(6)) {
    const AUFrame au(s.semilattice);
    std::set<std::uint64_t> got;
    for (ElementSet u : au.sets()) got.insert(u.bits());
    const auto expected = oracle::admissible_upper_sets(s.semilattice->poset());
    EXPECT_EQ(got, std::set<std::uint64_t>(expected.begin(), expected.end())) << s.name;
  }
}

TEST(BrunsLakser, SizesOfCompletions) {
  EXPECT_EQ(AUFrame(LcSemilattice(fixtures::frame("C3")).semilattice_ptr()).size(), 4);
  EXPECT_EQ(AUFrame(LcSemilattice(fixtures::frame("C4")).semilattice_ptr()).size(), 8);
  EXPECT_EQ(AUFrame(fixtures::chain_semilattice(2)).size(), 2);
}

TEST(BrunsLakser, CompletionIsAFrameAndEmbeddingWorks) {
  for (const CorpusSemilattice& s : semilattices(6)) {
    const AUFrame au(s.semilattice);
    const FinitePoset order =
        FinitePoset::from_relation(au.size(), [&](int u, int v) { return au.leq(u, v); });
    EXPECT_NO_THROW(build_frame(order)) << s.name;
    const JoinSemilattice& S = *s.semilattice;
    for (int x = 0; x < S.size(); ++x) {
      EXPECT_EQ(au[au.principal(x)], S.up(x));
      for (int y = 0; y < S.size(); ++y)
        EXPECT_EQ(au.principal(S.join(x, y)), au.meet(au.principal(x), au.principal(y))) << s.name;
    }
  }
}

TEST(BrunsLakser, ClosureReportOnCorpus) {
  for (const CorpusSemilattice& s : semilattices(6)) {
    const AUFrame au(s.semilattice);
    for (const CheckOutcome& c : verify_bruns_lakser(*s.semilattice, au)) EXPECT_TRUE(c.passed) << s.name << ' ' << c.check;
  }
}

TEST(JoinHoms, DiamondToChainRejected) {
  const JoinHom f = diamond_to_chain();
  const auto v = admissibility_violation(f);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->mode, LiftFailure::Mode::MeetNotPreserved);
  EXPECT_EQ(v->family, set_of({el(f.dom(), "a"), el(f.dom(), "b")}));
  try {
    lift_AU(f, au_of(f.dom_ptr()), au_of(f.cod_ptr()));
    FAIL() << "lift built for a non-admissible map";
  } catch (const NotAdmissible& e) {
    EXPECT_EQ(e.failure().mode, LiftFailure::Mode::MeetNotPreserved);
    EXPECT_EQ(to_string(e.failure().mode), "meet-not-preserved");
  }
}

TEST(JoinHoms, IdentityAndTerminalAreAdmissible) {
  for (const CorpusSemilattice& s : semilattices(5)) {
    std::vector<Element> id(s.semilattice->size());
    for (int i = 0; i < s.semilattice->size(); ++i) id[i] = i;
    const JoinHom f(s.semilattice, s.semilattice, id);
    EXPECT_TRUE(is_admissible_morphism(f)) << s.name;
    auto au = au_of(s.semilattice);
    const AUMap h = lift_AU(f, au, au);
    for (int u = 0; u < au->size(); ++u) EXPECT_EQ(h.table[u], u);

    auto one = fixtures::chain_semilattice(1);
    const JoinHom g(s.semilattice, one, std::vector<Element>(s.semilattice->size(), 0));
    EXPECT_TRUE(is_admissible_morphism(g)) << s.name;
  }
}

TEST(JoinHoms, GeneratorMatchesBruteForce) {
  const auto& all = semilattices(4);
  for (const auto& s : all)
    for (const auto& t : all)
      EXPECT_EQ(gen_join_homs(s.semilattice, t.semilattice).size(),
                oracle::join_homs(s.semilattice->poset(), t.semilattice->poset()).size())
          << s.name << "->" << t.name;
}

// The production sweep only visits antichains of minimal elements; compare
// it with the definition over every subset.
TEST(JoinHoms, AntichainSweepAgreesWithSubsetSweep) {
  const auto& all = semilattices(5);
  std::size_t checked = 0, rejected = 0;
  for (const auto& s : all)
    for (const auto& t : all) {
      if (s.semilattice->size() * t.semilattice->size() > 20) continue;
      for (const JoinHom& f : gen_join_homs(s.semilattice, t.semilattice)) {
        const bool fast = is_admissible_morphism(f);
        const bool slow = !oracle::admissibility_failure(f.dom().poset(), f.cod().poset(), f.table());
        ASSERT_EQ(fast, slow) << f.dom().name() << "->" << f.cod().name();
        ++checked;
        rejected += !fast;
      }
    }
  EXPECT_GT(checked, 1000u);
  EXPECT_GT(rejected, 0u);
}

TEST(JoinHoms, LiftExistsIffAdmissibleOnSmallSemilattices) {
  const auto& all = semilattices(4);
  for (const auto& s : all)
    for (const auto& t : all) {
      auto A = au_of(s.semilattice), B = au_of(t.semilattice);
      for (const JoinHom& f : gen_join_homs(s.semilattice, t.semilattice))
        for (const CheckOutcome& c : verify_lift_theorem(f, A, B)) ASSERT_TRUE(c.passed) << c.check << ' ' << c.witness;
    }
}

TEST(JoinHoms, LcOfChainInclusionLifts) {
  auto C3 = fixtures::frame("C3");
  auto C4 = fixtures::frame("C4");
  const FrameMorphism f(C3, C4, {C4->bottom(), el(*C4, "a"), C4->top()});
  const LcSemilattice L3(C3), L4(C4);
  const JoinHom g = lc_hom(f, L3, L4);
  auto A = au_of(L3.semilattice_ptr()), B = au_of(L4.semilattice_ptr());
  const AUMap h = lift_AU(g, A, B);
  EXPECT_TRUE(verify_lift(g, h).ok());
  const auto maps = frame_maps_extending(g, A, B);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0].table, h.table);
}
