#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smoothloc/errors.hpp"
#include "smoothloc/frame.hpp"
#include "smoothloc/lattice_io.hpp"
#include "smoothloc/semilattice.hpp"

namespace smoothloc {

class SpecTooLarge : public Error {
 public:
  using Error::Error;
};

struct CorpusSpec {
  int max_frame_size = 8;
  int max_semilattice_size = 6;
  /// Morphisms are generated between frames at most this large.
  int max_morphism_frame_size = 6;
  int max_topology_points = 4;
  bool chains = true;
  bool booleans = true;
  bool products = true;
  bool topologies = true;
  bool all_distributive = true;
  std::uint64_t seed = 20240917;
  /// Exhaustive morphism enumeration when |L|·|M| is at most this.
  int exhaustive_morphism_product = 36;
  /// Above the threshold, at most this many seeded samples per pair.
  int morphism_samples = 32;
  SweepLimits families;
  /// Extra frame fixtures; ones that fail validation become failed records.
  std::vector<NamedPoset> fixtures;
};

struct CorpusFrame {
  std::string name;
  /// Generator that first produced it: chain, boolean, product, topology, distributive.
  std::string source;
  std::shared_ptr<const FiniteFrame> frame;
};

struct CorpusSemilattice {
  std::string name;
  std::shared_ptr<const JoinSemilattice> semilattice;
};

/// Frames in generation order, without two order-isomorphic ones. Throws
/// SpecTooLarge when the requested sizes exceed what the library handles.
std::vector<CorpusFrame> gen_frames(const CorpusSpec& spec);

/// Every finite join-semilattice up to the size cap, up to isomorphism.
std::vector<CorpusSemilattice> gen_semilattices(const CorpusSpec& spec);

/// All maps preserving 0, 1, ∧, ∨ (seeded sample above the threshold).
std::vector<FrameMorphism> gen_morphisms(const std::shared_ptr<const FiniteFrame>& L,
                                         const std::shared_ptr<const FiniteFrame>& M, const CorpusSpec& spec);

/// All maps preserving binary joins and the top.
std::vector<JoinHom> gen_join_homs(const std::shared_ptr<const JoinSemilattice>& S,
                                   const std::shared_ptr<const JoinSemilattice>& T);

/// Posets up to isomorphism on exactly n elements, built by adding maximal
/// elements. `keep` prunes candidates (and everything grown from them).
std::vector<FinitePoset> enumerate_posets(int n, const std::function<bool(const FinitePoset&)>& keep = {});

/// Lattice of down-sets of P ordered by inclusion; labels name the maximal
/// elements of each down-set.
FinitePoset downset_lattice(const FinitePoset& P);

/// Open-set lattices of all topologies on n points (not deduplicated).
std::vector<FinitePoset> topology_frames(int points);

FinitePoset chain_poset(int n);
FinitePoset boolean_poset(int atoms);
FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b);

/// "2", "C<k>", "B<k>" (the Boolean algebra with k atoms), "2x2" style
/// products of those.
std::optional<FinitePoset> builtin_poset(const std::string& name);

/// One line per object with a content hash of its canonical text form.
std::string corpus_manifest(const std::vector<CorpusFrame>& frames, const std::vector<CorpusSemilattice>& semilattices);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string content_hash(const std::string& text);

}  // namespace smoothloc
