#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smoothloc/corpus.hpp"
#include "smoothloc/frame.hpp"
#include "smoothloc/semilattice.hpp"

namespace fixtures {

using namespace smoothloc;

inline std::shared_ptr<const FiniteFrame> frame(const std::string& builtin) {
  return std::make_shared<const FiniteFrame>(build_frame(*builtin_poset(builtin), builtin));
}

inline std::shared_ptr<const FiniteFrame> frame(const FinitePoset& p, const std::string& name) {
  return std::make_shared<const FiniteFrame>(build_frame(p, name));
}

// Id of the element carrying `label`.
inline Element el(const FinitePoset& p, const std::string& label) {
  for (int i = 0; i < p.size(); ++i)
    if (p.label(i) == label) return i;
  throw Error("no element " + label);
}
inline Element el(const FiniteFrame& L, const std::string& label) { return el(L.poset(), label); }
inline Element el(const JoinSemilattice& S, const std::string& label) { return el(S.poset(), label); }

inline FinitePoset pentagon() {
  return FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "x", "y", "z", "1"});
}

inline FinitePoset m3() {
  return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "x", "y", "z", "1"});
}

// m < a, b < t
inline std::shared_ptr<const JoinSemilattice> diamond_semilattice() {
  return std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(
      FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"m", "a", "b", "t"}), "diamond"));
}

inline std::shared_ptr<const JoinSemilattice> chain_semilattice(int n) {
  return std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(chain_poset(n), "C" + std::to_string(n)));
}

// The corpus the acceptance criteria quantify over, shared across tests.
inline const std::vector<CorpusFrame>& corpus_frames() {
  static const std::vector<CorpusFrame> frames = gen_frames(CorpusSpec{});
  return frames;
}

inline ElementSet set_of(std::initializer_list<int> ids) { return ElementSet::of(std::vector<int>(ids)); }

}  // namespace fixtures
