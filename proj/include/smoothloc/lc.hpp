#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smoothloc/frame.hpp"
#include "smoothloc/semilattice.hpp"
#include "smoothloc/sublocale.hpp"

namespace smoothloc {

/// A pair of frame elements; canonical when a <= b and b -> a = a, in which
/// case it stands for the locally closed sublocale c(a) ∩ o(b).
struct LcPair {
  Element a = 0;
  Element b = 0;
  bool operator==(const LcPair&) const = default;
  auto operator<=>(const LcPair&) const = default;
};

/// lc(a, b) = (b -> a, (b -> a) ∨ b)
LcPair lc_normalize(const FiniteFrame& L, Element a, Element b);
bool is_canonical(const FiniteFrame& L, LcPair p);
/// (x, y) ⊑ (a, b) iff x <= a and b <= a ∨ y. Both pairs must be canonical.
bool lc_leq(const FiniteFrame& L, LcPair xy, LcPair ab);
/// (x, y) ⊔ (u, v) = lc(x ∨ u, y ∧ v)
LcPair lc_join(const FiniteFrame& L, LcPair xy, LcPair uv);
std::string lc_label(const FiniteFrame& L, LcPair p);

/// LC(L): the canonical pairs ordered by ⊑, as a join-semilattice.
class LcSemilattice {
 public:
  /// Throws SizeCapExceeded when LC(L) has more than ElementSet::kCapacity
  /// elements.
  explicit LcSemilattice(std::shared_ptr<const FiniteFrame> frame);

  const FiniteFrame& frame() const { return *frame_; }
  const std::shared_ptr<const FiniteFrame>& frame_ptr() const { return frame_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const LcPair& operator[](int id) const { return pairs_[id]; }
  const std::vector<LcPair>& pairs() const { return pairs_; }
  std::optional<int> find(LcPair p) const;
  /// Throws NotLocallyClosed when the pair is not canonical.
  int id_of(LcPair p) const;
  /// Id of lc(a, b).
  int normalized(Element a, Element b) const { return id_of(lc_normalize(*frame_, a, b)); }

  bool leq(int p, int q) const { return semilattice_->leq(p, q); }
  int join(int p, int q) const { return semilattice_->join(p, q); }
  /// (1, 1)
  int top() const { return semilattice_->top(); }
  /// (0, 1)
  int bottom() const { return id_of({frame_->bottom(), frame_->top()}); }

  const JoinSemilattice& semilattice() const { return *semilattice_; }
  const std::shared_ptr<const JoinSemilattice>& semilattice_ptr() const { return semilattice_; }
  std::string label(int id) const { return lc_label(*frame_, pairs_[id]); }

 private:
  std::shared_ptr<const FiniteFrame> frame_;
  std::vector<LcPair> pairs_;
  std::vector<int> index_;  // a * n + b -> id or -1
  std::shared_ptr<const JoinSemilattice> semilattice_;
};

/// Id in S(L) of c(a) ∩ o(b).
inline int locally_closed_sublocale(const SublocaleLattice& SL, LcPair p) { return SL.locally_closed(p.a, p.b); }
/// Id in S(L) of ⋁ c(a_i) ∩ o(b_i) over a set of LC ids.
int family_sublocale(const SublocaleLattice& SL, const LcSemilattice& LC, ElementSet family);

/// (⋀S, ν_{S^#}(⋀S)); throws NotLocallyClosed unless S = c(a) ∩ o(b) for
/// some pair.
LcPair canonical_rep(const SublocaleLattice& SL, int s);

/// ⋀_x ((⋀_i (b_i -> (x ∨ a_i))) -> (x ∨ ⋀_j (b_j -> a_j))), evaluated
/// literally over a nonempty family.
Element nu_supp_formula(const FiniteFrame& L, const std::vector<LcPair>& family);

struct LocalExactness {
  /// The join of the family's sublocales is locally closed.
  bool direct = false;
  /// b_i <= ν_{S^#}(⋀S) ∨ a_i for every i.
  bool inequality = false;
  bool agree() const { return direct == inequality; }
};

LocalExactness is_locally_exact(const SublocaleLattice& SL, const LcSemilattice& LC, ElementSet family);

struct LcMeet {
  /// Greatest lower bound under ⊑, by scan.
  std::optional<LcPair> meet;
  bool admissible = false;
  /// A b in LC(L) with b ⊔ ⊓F ≠ ⊓(b ⊔ p_i), when the meet exists.
  std::optional<LcPair> witness;
  /// (⋀ a_i, ⋀_x ((⋀_i (b_i -> (x ∨ a_i))) -> (x ∨ ⋀_j a_j)))
  LcPair formula;
};

/// Order-theoretic meet and admissibility of a nonempty family of LC ids.
LcMeet lc_meet(const LcSemilattice& LC, ElementSet family);
LcPair lc_meet_formula(const FiniteFrame& L, const std::vector<LcPair>& family);

/// lc(f(a), f(b))
LcPair lc_image(const FrameMorphism& f, LcPair p);

/// LC(f) as a map of join-semilattices.
JoinHom lc_hom(const FrameMorphism& f, const LcSemilattice& dom, const LcSemilattice& cod);

std::vector<LcPair> pairs_of(const LcSemilattice& LC, ElementSet family);

/// Canonical representation lemma, ordering lemma, joins, lc, the ν_{S^#}
/// formula, local exactness versus admissibility and the meet formula.
CheckList verify_lc(const SublocaleLattice& SL, const LcSemilattice& LC, const SweepLimits& limits = {});

}  // namespace smoothloc
