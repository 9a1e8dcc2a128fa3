#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smoothloc/correspondence.hpp"
#include "smoothloc/frame.hpp"
#include "smoothloc/lc.hpp"
#include "smoothloc/semilattice.hpp"
#include "smoothloc/sublocale.hpp"

namespace smoothloc {

/// Everything derived from one frame that the lifting checks need.
struct FrameAnalysis {
  std::shared_ptr<const FiniteFrame> frame;
  std::shared_ptr<const SublocaleLattice> sublocales;
  std::shared_ptr<const Correspondence> smooth;
  /// Lattice tables of S_b in the order of smooth->collection().
  LatticeTables sb_tables;
  /// Position inside smooth->collection() per sublocale id, or -1.
  std::vector<int> sb_pos;
  /// Sublocale id per AU id, and AU id per sublocale id (-1 outside S_b).
  std::vector<int> sublocale_of_au, au_of_sublocale;

  static std::shared_ptr<const FrameAnalysis> of(std::shared_ptr<const FiniteFrame> frame);

  const LcSemilattice& lc() const { return *smooth->lc(); }
  const std::shared_ptr<const LcSemilattice>& lc_ptr() const { return smooth->lc(); }
};

/// Families for the well-definedness conditions: exhaustive up to 16
/// generators, bounded size plus samples beyond.
SweepLimits lift_sweep_limits();

/// c(x) ⊆ ⋁ c(x_i) implies c(f x) ⊆ ⋁ c(f x_i)
CheckOutcome check_WDc(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);
/// ⋂ o(x_i) ⊆ o(x) implies ⋂ o(f x_i) ⊆ o(f x)
CheckOutcome check_WDo(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);
/// ⋂ c(x_i) ∨ o(y_i) ⊆ c(x) ∨ o(y) implies the same for the images.
CheckOutcome check_WDs(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);
/// c(x) ∩ o(y) ⊆ ⋁ c(x_i) ∩ o(y_i) implies the same for the images.
CheckOutcome check_WDb(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

/// ⋂ o(x_i) = o(⋀ x_i) for a set of elements.
bool is_strongly_exact_meet(const SublocaleLattice& SL, ElementSet family);

/// f preserves every strongly exact meet: f(⋀F) = ⋀ f[F] and f[F] is again
/// strongly exact.
CheckOutcome check_strongly_exact_preserved(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

/// LC(f) is an admissible morphism of join-semilattices.
CheckOutcome is_locally_exact_morphism(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

class NoLift : public Error {
 public:
  NoLift(std::string witness) : Error("no lift to smooth sublocales: " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

struct SbLift {
  /// Indexed by sublocale id of L; -1 outside S_b(L).
  std::vector<int> table;
  bool frame_map = false;
  /// f̄(o(x)) = o(f x) and f̄(c(x)) = c(f x)
  bool square = false;
  /// Agrees with AU(LC(f)) carried across both isomorphisms.
  bool matches_au = false;
  bool verified() const { return frame_map && square && matches_au; }
};

/// c(a) ∩ o(b) ↦ c(f a) ∩ o(f b), extended by joins. Throws NoLift when
/// WDb fails.
SbLift build_sb_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

/// A lift to S_c (generators c(a), extended by joins) or to S_o
/// (generators o(a), extended by intersections).
struct CollectionLift {
  /// Members of the collection in L and in M, sorted sublocale ids.
  std::vector<int> dom, cod;
  /// Indexed by sublocale id of L; -1 outside the collection.
  std::vector<int> table;
  /// Preserves top, bottom, binary meets and binary joins of the collection.
  bool lattice_map = false;
  /// Sends each generator of L to the matching generator of M.
  bool square = false;
  bool verified() const { return lattice_map && square; }
};

/// Throw NoLift when WDc (resp. WDo) fails.
CollectionLift build_sc_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);
CollectionLift build_so_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

/// Number of frame maps S_b(L) → S_b(M) with h(o(x)) = o(f x), or nullopt
/// when S_b(L) exceeds `cap` elements.
std::optional<std::size_t> count_sb_lifts(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M,
                                          int cap = 16);

/// WDs plus the assignment o(x) ∨ c(y) ↦ o(f x) ∨ c(f y) extended by
/// intersections: well defined, monotone and meet preserving.
CheckList check_s_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

/// lc(f a, f b) = LC(f)(lc(a, b)) for all a, b.
CheckOutcome check_lc_equivariance(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

/// c(x) ∩ o(y) ⊆ ⋁ c(x_i) ∩ o(y_i) iff lc(x, y) ∈ A(↑{lc(x_i, y_i)}) for
/// arbitrary pairs of L × L.
CheckOutcome verify_wd_link(const FrameAnalysis& L, const SweepLimits& limits = lift_sweep_limits());

struct MorphismVerdict {
  CheckList checks;
  bool wdb = false;
  bool locally_exact = false;
  bool lifts = false;
};

/// Every per-morphism check: the four conditions, strongly exact meets, the
/// three-way lifting equivalence, uniqueness and the square.
MorphismVerdict verify_morphism(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M);

}  // namespace smoothloc
