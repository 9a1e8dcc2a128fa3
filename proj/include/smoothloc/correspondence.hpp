#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smoothloc/lc.hpp"
#include "smoothloc/semilattice.hpp"
#include "smoothloc/sublocale.hpp"

namespace smoothloc {

enum class Flavor {
  /// S_c(L) against upper sets of L, generator a ↦ c(a)
  Closed,
  /// S_b(L) against upper sets of LC(L), generator (a, b) ↦ c(a) ∩ o(b)
  Smooth,
};

std::string to_string(Flavor flavor);

/// The monotone maps φ: S(L) → U(index) and ψ: U(index) → S(L) for one
/// flavor. Both flavors are the same construction over a different index
/// semilattice and generator map.
class Correspondence {
 public:
  Correspondence(std::shared_ptr<const SublocaleLattice> SL, Flavor flavor);

  Flavor flavor() const { return flavor_; }
  const SublocaleLattice& sublocales() const { return *SL_; }
  const JoinSemilattice& index() const { return *index_; }
  const std::shared_ptr<const JoinSemilattice>& index_ptr() const { return index_; }
  /// Present for the smooth flavor only.
  const std::shared_ptr<const LcSemilattice>& lc() const { return lc_; }
  const std::shared_ptr<const AUFrame>& au() const { return au_; }

  /// Sublocale id of the generator attached to an index element.
  int generator(Element i) const { return generator_[i]; }
  /// S_c(L) or S_b(L), sorted ids.
  const std::vector<int>& collection() const { return collection_; }

  /// {i | generator(i) ⊆ S}
  ElementSet phi(int s) const;
  /// ⋁ {generator(i) | i ∈ U}
  int psi(ElementSet u) const;

 private:
  std::shared_ptr<const SublocaleLattice> SL_;
  Flavor flavor_;
  std::shared_ptr<const LcSemilattice> lc_;
  std::shared_ptr<const JoinSemilattice> index_;
  std::shared_ptr<const AUFrame> au_;
  std::vector<int> generator_;
  std::vector<int> collection_;
};

/// Upper sets of the index: all of them up to 20 elements, otherwise the
/// principal ones plus seeded samples. The flag reports exhaustiveness.
std::pair<std::vector<ElementSet>, bool> index_upper_sets(const JoinSemilattice& S, const SweepLimits& limits = {});

/// Adjunction, ψφ = id on the collection, φψ = A and its fixpoints, and
/// compatibility with the generators.
CheckList verify_fixpoints(const Correspondence& corr, const SweepLimits& limits = {});

/// One row per element of the collection: sublocale id and AU id.
struct IsoTable {
  std::vector<std::pair<int, int>> rows;
};

/// φ restricted to the collection, checked to be an order isomorphism onto
/// AU(index) with inverse ψ. Throws IsoFailure with a witness.
IsoTable build_iso(const Correspondence& corr);

/// Two-column text, one "sublocale<TAB>upper set" line per row.
std::string format_iso(const Correspondence& corr, const IsoTable& table);

/// Every nonempty family of elements is exact iff ⋁ c(a_i) is closed.
CheckOutcome exact_iff_closed_check(const SublocaleLattice& SL);

/// For families of LC(L) with a meet: admissible iff the embedding sends the
/// meet to the join, plus the hypotheses making the converse hold.
CheckList psi_detection_check(const SublocaleLattice& SL, const LcSemilattice& LC, const SweepLimits& limits = {});

}  // namespace smoothloc
