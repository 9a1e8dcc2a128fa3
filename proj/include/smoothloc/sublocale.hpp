#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smoothloc/frame.hpp"
#include "smoothloc/report.hpp"

namespace smoothloc {

/// A subset of frame elements closed under all meets and under x -> (-).
struct Sublocale {
  ElementSet carrier;

  bool contains(Element x) const { return carrier.contains(x); }
  bool subset_of(const Sublocale& o) const { return carrier.subset_of(o.carrier); }
  bool operator==(const Sublocale&) const = default;
  auto operator<=>(const Sublocale&) const = default;
};

bool is_sublocale(const FiniteFrame& L, ElementSet subset);

/// c(a) = ↑a
Sublocale closed(const FiniteFrame& L, Element a);
/// o(a) = {a -> b | b in L}
Sublocale open_(const FiniteFrame& L, Element a);

/// {⋀M | M ⊆ X}; for X a union of sublocales this is their join.
Sublocale meet_closure(const FiniteFrame& L, ElementSet subset);
Sublocale join(const FiniteFrame& L, const Sublocale& s, const Sublocale& t);
inline Sublocale intersect(const Sublocale& s, const Sublocale& t) { return {s.carrier & t.carrier}; }

/// ν_S(a): the least element of S above a.
Element nu(const FiniteFrame& L, const Sublocale& s, Element a);
/// c(⋀S)
Sublocale closure(const FiniteFrame& L, const Sublocale& s);

/// c(a) ∩ o(b)
Sublocale locally_closed(const FiniteFrame& L, Element a, Element b);

/// The coframe S(L) of all sublocales with its inclusion order, join/meet
/// tables and supplements, all computed at construction.
class SublocaleLattice {
 public:
  static constexpr int kDefaultFrameCap = 16;
  static constexpr int kMaxSublocales = 1024;

  /// Exhaustive subset scan. Throws SizeCapExceeded when the frame has more
  /// than `frame_cap` elements or S(L) exceeds kMaxSublocales.
  explicit SublocaleLattice(std::shared_ptr<const FiniteFrame> frame, int frame_cap = kDefaultFrameCap);

  const FiniteFrame& frame() const { return *frame_; }
  const std::shared_ptr<const FiniteFrame>& frame_ptr() const { return frame_; }

  int size() const { return static_cast<int>(all_.size()); }
  const Sublocale& operator[](int id) const { return all_[id]; }
  const std::vector<Sublocale>& all() const { return all_; }
  std::optional<int> find(ElementSet carrier) const;
  /// Throws Error when the set is not a sublocale.
  int id_of(const Sublocale& s) const;

  bool leq(int s, int t) const { return all_[s].subset_of(all_[t]); }
  int join(int s, int t) const { return join_[s * size() + t]; }
  int meet(int s, int t) const { return meet_[s * size() + t]; }
  template <class Range>
  int join_all(const Range& ids) const {
    int acc = bottom();
    for (int s : ids) acc = join(acc, s);
    return acc;
  }
  template <class Range>
  int meet_all(const Range& ids) const {
    int acc = top();
    for (int s : ids) acc = meet(acc, s);
    return acc;
  }

  /// O = {1}
  int bottom() const { return bottom_; }
  /// L itself
  int top() const { return top_; }
  int closed(Element a) const { return closed_[a]; }
  int open(Element a) const { return open_[a]; }
  int locally_closed(Element a, Element b) const { return meet(closed(a), open(b)); }
  /// S^#, the least T with S ∨ T = L.
  int supplement(int s) const { return supplement_[s]; }

  /// Carrier listed with element labels, e.g. "{0,a,1}".
  std::string label(int s) const;

 private:
  std::shared_ptr<const FiniteFrame> frame_;
  std::vector<Sublocale> all_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> join_, meet_;
  std::vector<int> closed_, open_, supplement_;
  int bottom_ = 0, top_ = 0;
};

Sublocale supplement(const SublocaleLattice& SL, const Sublocale& s);

/// Sorted ids of the sublocales with S^## = S.
std::vector<int> smooth_sublocales(const SublocaleLattice& SL);
/// Ids of all joins of subsets of {c(a)}, including the empty join O.
std::vector<int> closed_joins(const SublocaleLattice& SL);
/// Ids of all intersections of subsets of {o(a)}, including the empty one L.
std::vector<int> open_meets(const SublocaleLattice& SL);
/// Ids of the sublocales of the form c(a) ∩ o(b).
std::vector<int> locally_closed_sublocales(const SublocaleLattice& SL);
/// Ids of all joins of locally closed sublocales.
std::vector<int> joins_of_locally_closed(const SublocaleLattice& SL);

/// Inclusion order restricted to `members`, labelled by sublocale. Throws
/// SizeCapExceeded past ElementSet::kCapacity members.
FinitePoset inclusion_order(const SublocaleLattice& SL, const std::vector<int>& members);

struct LocallyClosedWitness {
  Element a;  // ⋀S
  Element b;  // ν_{S^#}(⋀S)
};

/// Scans every pair (a, b) for S = c(a) ∩ o(b). On success returns the
/// canonical representation (⋀S, ν_{S^#}(⋀S)).
std::optional<LocallyClosedWitness> is_locally_closed(const SublocaleLattice& SL, int s);

/// All pairs (a, b) with S ⊆ o(a) ∨ c(b); S is the intersection of these
/// (the empty intersection being L).
std::vector<std::pair<Element, Element>> zero_dim_decomposition(const SublocaleLattice& SL, int s);
/// Intersection of o(a) ∨ c(b) over the given pairs.
int zero_dim_recompose(const SublocaleLattice& SL, const std::vector<std::pair<Element, Element>>& pairs);

/// For all a ≰ b there is c with a ∨ c = 1 ≠ b ∨ c.
bool is_subfit(const FiniteFrame& L);

/// Lattice structure of a sub-collection of S(L) under inclusion.
LatticeTables collection_tables(const SublocaleLattice& SL, const std::vector<int>& members);

/// Identities of the closed/open calculus, ν, closure and the smooth and
/// closed-join collections, evaluated exhaustively on one frame.
CheckList verify_sublocale_calculus(const SublocaleLattice& SL);

}  // namespace smoothloc
