#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smoothloc/loading.hpp"
#include "smoothloc/suite.hpp"

using namespace smoothloc;

namespace {

bool contains_iso(const std::vector<CorpusFrame>& frames, const FinitePoset& p) {
  for (const CorpusFrame& cf : frames)
    if (isomorphic(cf.frame->poset(), p)) return true;
  return false;
}

SuiteOptions small_suite() {
  SuiteOptions o;
  o.corpus.max_frame_size = 4;
  o.corpus.max_topology_points = 2;
  o.corpus.max_semilattice_size = 4;
  o.corpus.max_morphism_frame_size = 4;
  return o;
}

}  // namespace

TEST(Corpus, SmallSpecContainsTheBasicFrames) {
  CorpusSpec spec;
  spec.max_frame_size = 4;
  const auto frames = gen_frames(spec);
  for (auto name : {"2", "C3", "C4", "B2"}) EXPECT_TRUE(contains_iso(frames, *builtin_poset(name))) << name;
}

TEST(Corpus, TopologiesOnTwoPoints) {
  std::vector<FinitePoset> distinct;
  for (const FinitePoset& p : topology_frames(2)) {
    bool seen = false;
    for (const FinitePoset& q : distinct) seen = seen || isomorphic(p, q);
    if (!seen) distinct.push_back(p);
  }
  ASSERT_EQ(distinct.size(), 3u);
  for (auto name : {"2", "C3", "B2"}) {
    bool found = false;
    for (const FinitePoset& q : distinct) found = found || isomorphic(q, *builtin_poset(name));
    EXPECT_TRUE(found) << name;
  }
  // Topologies on n points: 1, 4, 29, 355 before identifying homeomorphic ones.
  EXPECT_EQ(topology_frames(1).size(), 1u);
  EXPECT_EQ(topology_frames(2).size(), 4u);
  EXPECT_EQ(topology_frames(3).size(), 29u);
  EXPECT_EQ(topology_frames(4).size(), 355u);
}

TEST(Corpus, DownsetsOfTwoElementPosets) {
  const auto posets = enumerate_posets(2);
  ASSERT_EQ(posets.size(), 2u);
  std::vector<FinitePoset> lattices;
  for (const FinitePoset& p : posets) lattices.push_back(downset_lattice(p));
  const bool chain_first = isomorphic(lattices[0], chain_poset(3));
  EXPECT_TRUE(isomorphic(lattices[chain_first ? 0 : 1], chain_poset(3)));
  EXPECT_TRUE(isomorphic(lattices[chain_first ? 1 : 0], boolean_poset(2)));
}

// Distributive lattices on n elements, n = 1..8: 1, 1, 1, 2, 3, 5, 8, 15.
TEST(Corpus, AllDistributiveLatticesUpToEight) {
  CorpusSpec spec;
  spec.topologies = false;
  std::map<int, int> by_size;
  for (const CorpusFrame& cf : gen_frames(spec)) {
    EXPECT_TRUE(oracle::distributive(cf.frame->poset()));
    ++by_size[cf.frame->size()];
  }
  EXPECT_EQ(by_size, (std::map<int, int>{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 5}, {7, 8}, {8, 15}}));
}

TEST(Corpus, NoTwoFramesIsomorphic) {
  const auto& frames = fixtures::corpus_frames();
  EXPECT_EQ(frames.size(), 42u);
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = i + 1; j < frames.size(); ++j)
      EXPECT_FALSE(isomorphic(frames[i].frame->poset(), frames[j].frame->poset()))
          << frames[i].name << ' ' << frames[j].name;
}

TEST(Corpus, DeterministicStreams) {
  const auto a = gen_frames(CorpusSpec{});
  const auto b = gen_frames(CorpusSpec{});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].frame->poset(), b[i].frame->poset());
  }
  EXPECT_EQ(corpus_manifest(a, gen_semilattices(CorpusSpec{})), corpus_manifest(b, gen_semilattices(CorpusSpec{})));
}

TEST(Corpus, OversizedSpecRejected) {
  CorpusSpec spec;
  spec.max_frame_size = 100;
  EXPECT_THROW(gen_frames(spec), SpecTooLarge);
}

TEST(Suite, SmallRunPassesAndIsDeterministic) {
  const SuiteReport a = run_suite(small_suite());
  EXPECT_EQ(a.failures(), 0u);
  EXPECT_GT(a.records.size(), 50u);
  const SuiteReport b = run_suite(small_suite());
  EXPECT_EQ(to_jsonl(a, false), to_jsonl(b, false));

  std::istringstream lines(to_jsonl(a, true));
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    for (auto key : {"id", "check", "status", "witness", "millis"}) EXPECT_TRUE(j.contains(key)) << line;
    ++n;
  }
  EXPECT_EQ(n, a.records.size());
}

TEST(Suite, CorruptedFixtureBecomesFailedRecord) {
  SuiteOptions o = small_suite();
  o.corpus.fixtures.push_back({"N5", fixtures::pentagon()});
  const SuiteReport r = run_suite(o);
  EXPECT_EQ(r.failures(), 1u);
  bool found = false;
  for (const SuiteRecord& rec : r.records)
    if (rec.failed()) {
      EXPECT_EQ(rec.id, "fixture:N5");
      EXPECT_NE(rec.witness.find("∧"), std::string::npos);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Suite, ModuleSelectionAndUnknownModule) {
  SuiteOptions o = small_suite();
  o.modules = {"order-core"};
  const SuiteReport r = run_suite(o);
  for (const SuiteRecord& rec : r.records) EXPECT_EQ(rec.check.rfind("heyting", 0) == 0 || rec.check == "build_frame_idempotent", true) << rec.check;
  o.modules = {"no-such-module"};
  EXPECT_THROW(run_suite(o), Error);
}

TEST(Suite, WriteReportFailsOnBadPath) {
  const SuiteReport r;
  EXPECT_THROW(write_report(r, "/nonexistent-dir/x/report.jsonl"), IOFailure);
}

TEST(Loading, BuiltinsFilesAndMorphisms) {
  EXPECT_EQ(load_frame("C4")->size(), 4);
  EXPECT_EQ(load_frame("2xC3")->size(), 6);
  EXPECT_THROW(load_frame("no-such-thing"), IOFailure);

  const auto dir = std::filesystem::temp_directory_path() / "smoothloc_loading_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c3.lat") << "lattice C3\nelements 3\nlabels 0 a 1\ncovers\n0 1\n1 2\nend\n";
  std::ofstream(dir / "f.mor") << "morphism f from c3.lat to C4\nmap 0 0\nmap a b\nmap 2 3\n";
  std::ofstream(dir / "bad.mor") << "morphism g from c3.lat to C4\nmap 0 0\nmap 2 3\n";
  const FrameMorphism f = load_morphism(dir / "f.mor");
  EXPECT_EQ(f.table(), (std::vector<Element>{0, 2, 3}));
  EXPECT_THROW(load_morphism(dir / "bad.mor"), ParseError);
  EXPECT_THROW(resolve_element(f.dom().poset(), "zz"), ParseError);
  EXPECT_THROW(resolve_element(f.dom().poset(), "9"), ParseError);
  std::filesystem::remove_all(dir);
}
