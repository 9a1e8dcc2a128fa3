#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "smoothloc/errors.hpp"
#include "smoothloc/lattice.hpp"
#include "smoothloc/poset.hpp"
#include "smoothloc/report.hpp"

namespace smoothloc {

/// A finite poset with all binary joins and a top element. Meets need not
/// exist.
class JoinSemilattice {
 public:
  /// Throws NotALattice when a pair has no join, or when the poset is empty.
  static JoinSemilattice from_poset(FinitePoset poset, std::string name = {});

  int size() const { return poset_.size(); }
  ElementSet all() const { return poset_.all(); }
  Element top() const { return top_; }
  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  /// Join of a nonempty set.
  Element join_of(ElementSet s) const;
  ElementSet up(Element a) const { return poset_.up(a); }
  ElementSet down(Element a) const { return poset_.down(a); }

  /// Greatest lower bound of a nonempty family, if it exists.
  std::optional<Element> meet_of(ElementSet family) const;

  const FinitePoset& poset() const { return poset_; }
  const std::string& name() const { return name_; }
  std::string label(Element a) const { return poset_.label(a); }
  std::string label(ElementSet s) const;
  /// Join table and top; the meet table is left empty.
  LatticeTables join_tables() const;

 private:
  std::string name_;
  FinitePoset poset_;
  Element top_ = 0;
  std::vector<Element> join_;
};

std::optional<Element> meet_exists(const JoinSemilattice& S, ElementSet family);

struct Admissibility {
  bool admissible = false;
  std::optional<Element> meet;
  /// On failure with an existing meet: a b with b ∨ ⋀F ≠ ⋀(b ∨ a_i). Among
  /// several, the one whose ⋀(b ∨ a_i) has the largest down-set (a missing
  /// meet ranks above all), then the smallest id.
  std::optional<Element> witness;
};

/// F (nonempty) is admissible when its meet exists and b ∨ ⋀F = ⋀(b ∨ a_i)
/// for every b in S, the right-hand meet existing.
Admissibility check_admissible(const JoinSemilattice& S, ElementSet family);
/// The meet of an admissible family, nullopt otherwise. Stops at the first
/// failing b, so it is the cheap test when no witness is needed.
std::optional<Element> admissible_meet(const JoinSemilattice& S, ElementSet family);
inline bool is_admissible_family(const JoinSemilattice& S, ElementSet family) {
  return admissible_meet(S, family).has_value();
}

bool is_upper_set(const JoinSemilattice& S, ElementSet u);
ElementSet up_closure(const JoinSemilattice& S, ElementSet x);

/// A(U) = {⋀F | F ⊆ U admissible}. Uses that an admissible F with meet m
/// can be enlarged to U ∩ ↑m without changing either property.
ElementSet admissible_closure(const JoinSemilattice& S, ElementSet u);
bool is_admissible_upper_set(const JoinSemilattice& S, ElementSet u);

/// Every nonempty upper set, in increasing bit order.
std::vector<ElementSet> enumerate_upper_sets(const JoinSemilattice& S);

inline ElementSet up_embed(const JoinSemilattice& S, Element x) { return S.up(x); }

/// The frame AU(S) of admissible upper sets: meets are intersections and
/// joins are A(U ∪ V).
class AUFrame {
 public:
  static constexpr int kMaxElements = 1024;

  explicit AUFrame(std::shared_ptr<const JoinSemilattice> S);

  const JoinSemilattice& semilattice() const { return *S_; }
  const std::shared_ptr<const JoinSemilattice>& semilattice_ptr() const { return S_; }
  int size() const { return static_cast<int>(sets_.size()); }
  ElementSet operator[](int id) const { return sets_[id]; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::optional<int> find(ElementSet u) const;
  /// Throws Error when u is not an admissible upper set.
  int id_of(ElementSet u) const;

  bool leq(int u, int v) const { return sets_[u].subset_of(sets_[v]); }
  int join(int u, int v) const { return tables_.join_of(u, v); }
  int meet(int u, int v) const { return tables_.meet_of(u, v); }
  /// {⊤}
  int bottom() const { return tables_.bottom; }
  int top() const { return tables_.top; }
  /// Id of ↑x.
  int principal(Element x) const { return principal_[x]; }
  const LatticeTables& tables() const { return tables_; }
  std::string label(int id) const { return S_->label(sets_[id]); }

 private:
  std::shared_ptr<const JoinSemilattice> S_;
  std::vector<ElementSet> sets_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> principal_;
  LatticeTables tables_;
};

/// A map of join-semilattices preserving binary joins and the top.
class JoinHom {
 public:
  /// Throws Error unless joins and top are preserved.
  JoinHom(std::shared_ptr<const JoinSemilattice> dom, std::shared_ptr<const JoinSemilattice> cod,
          std::vector<Element> map, std::string name = {});

  Element operator()(Element x) const { return map_[x]; }
  ElementSet image(ElementSet s) const;
  const JoinSemilattice& dom() const { return *dom_; }
  const JoinSemilattice& cod() const { return *cod_; }
  const std::shared_ptr<const JoinSemilattice>& dom_ptr() const { return dom_; }
  const std::shared_ptr<const JoinSemilattice>& cod_ptr() const { return cod_; }
  const std::vector<Element>& table() const { return map_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const JoinSemilattice> dom_, cod_;
  std::vector<Element> map_;
  std::string name_;
};

/// How many families of a semilattice a sweep visits.
struct SweepLimits {
  /// Every nonempty subset when the carrier is at most this large.
  int exhaustive_up_to = 12;
  /// Otherwise every family of at most this many elements ...
  int max_family_size = 4;
  /// ... plus this many seeded random larger families.
  int samples = 256;
  std::uint64_t seed = 20240917;
};

/// Visits nonempty families of {0..n-1} as prescribed by `limits`.
/// Returns false if the sweep was not exhaustive.
bool for_each_family(int n, const SweepLimits& limits, const std::function<void(ElementSet)>& fn);

struct LiftFailure {
  enum class Mode { MeetMissing, MeetNotAdmissible, MeetNotPreserved };
  Mode mode;
  ElementSet family;
};

std::string to_string(LiftFailure::Mode mode);

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(LiftFailure failure, const std::string& what)
      : Error("morphism is not admissible: " + what), failure_(failure) {}
  const LiftFailure& failure() const { return failure_; }

 private:
  LiftFailure failure_;
};

ElementSet minimal_elements(const JoinSemilattice& S, ElementSet u);

/// First admissible family F of the domain such that f[F] has no meet, a
/// non-admissible meet, or a meet different from f(⋀F). Up to 20 elements
/// the search runs over the antichains of the domain, which is exhaustive;
/// beyond that it follows `limits`.
std::optional<LiftFailure> admissibility_violation(const JoinHom& f, const SweepLimits& limits = {});
inline bool is_admissible_morphism(const JoinHom& f, const SweepLimits& limits = {}) {
  return !admissibility_violation(f, limits).has_value();
}

/// A map between AU frames given by its table over AUFrame ids.
struct AUMap {
  std::shared_ptr<const AUFrame> dom, cod;
  std::vector<int> table;
};

/// U ↦ A(⋃{↑f(x) | x ∈ U}), computed without any admissibility precheck.
AUMap candidate_lift(const JoinHom& f, std::shared_ptr<const AUFrame> dom, std::shared_ptr<const AUFrame> cod);

struct LiftVerification {
  /// The empty meet, kept apart from binary meets.
  bool preserves_top = true;
  bool preserves_meets = true;
  bool preserves_joins = true;
  bool extends_f = true;
  bool ok() const { return preserves_top && ok_below_top(); }
  bool ok_below_top() const { return preserves_meets && preserves_joins && extends_f; }
};

/// (i) top, binary meets and all joins of AU preserved, (ii) h(↑x) = ↑f(x).
LiftVerification verify_lift(const JoinHom& f, const AUMap& h);

/// The lift AU(f) when f is admissible; throws NotAdmissible otherwise.
/// The result preserves all joins and binary meets. It preserves the top
/// when f sends a least element of its domain to one of its codomain, and
/// may miss it otherwise (a one-element domain is the smallest case).
AUMap lift_AU(const JoinHom& f, std::shared_ptr<const AUFrame> dom, std::shared_ptr<const AUFrame> cod,
              const SweepLimits& limits = {});

/// All frame maps AU(dom) → AU(cod) sending ↑x to ↑f(x), found by
/// backtracking independently of the lift formula.
std::vector<AUMap> frame_maps_extending(const JoinHom& f, std::shared_ptr<const AUFrame> dom,
                                        std::shared_ptr<const AUFrame> cod, std::size_t limit = 0,
                                        bool require_top = true);

/// Lemmas on admissible families, A(U), AU(S) and the embedding ↑.
CheckList verify_bruns_lakser(const JoinSemilattice& S, const AUFrame& au, const SweepLimits& limits = {});

/// Lift exists ⇔ f admissible, cross-validated against frame_maps_extending,
/// where a lift preserves all joins and binary meets; plus the check that a
/// bottom-preserving f lifts to a top-preserving map.
CheckList verify_lift_theorem(const JoinHom& f, const std::shared_ptr<const AUFrame>& dom,
                              const std::shared_ptr<const AUFrame>& cod, const SweepLimits& limits = {});

}  // namespace smoothloc
