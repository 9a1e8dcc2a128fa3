#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smoothloc/lattice.hpp"
#include "smoothloc/poset.hpp"

namespace smoothloc {

/// A finite distributive lattice with its Heyting arrow, i.e. a finite
/// frame. Immutable once built; obtain one through build_frame.
class FiniteFrame {
 public:
  int size() const { return tables_.n; }
  ElementSet all() const { return poset_.all(); }
  Element bottom() const { return tables_.bottom; }
  Element top() const { return tables_.top; }

  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  Element meet(Element a, Element b) const { return tables_.meet_of(a, b); }
  Element join(Element a, Element b) const { return tables_.join_of(a, b); }
  /// a -> b, the largest c with c ∧ a <= b.
  Element arrow(Element a, Element b) const { return arrow_[a * tables_.n + b]; }
  Element pseudocomplement(Element a) const { return arrow(a, bottom()); }

  /// Meet of a set; the empty meet is top.
  Element meet_of(ElementSet s) const;
  /// Join of a set; the empty join is bottom.
  Element join_of(ElementSet s) const;

  ElementSet up(Element a) const { return poset_.up(a); }
  ElementSet down(Element a) const { return poset_.down(a); }

  const FinitePoset& poset() const { return poset_; }
  const LatticeTables& tables() const { return tables_; }
  const std::string& name() const { return name_; }
  std::string label(Element a) const { return poset_.label(a); }
  std::string label(ElementSet s) const;

 private:
  friend FiniteFrame build_frame(const FinitePoset& poset, std::string name);

  std::string name_;
  FinitePoset poset_;
  LatticeTables tables_;
  std::vector<Element> arrow_;
};

/// Validates the order as a distributive lattice and fills every table.
/// Throws NotALattice or NotDistributive (with a witness triple).
FiniteFrame build_frame(const FinitePoset& poset, std::string name = {});

Element heyting(const FiniteFrame& frame, Element a, Element b);
Element pseudocomplement(const FiniteFrame& frame, Element a);

struct LawResult {
  std::string law;  // "H1" .. "H12"
  bool passed = true;
  std::vector<Element> witness;  // offending (a, b, c) or, for H11/H12, b followed by the family
};

struct LawReport {
  std::vector<LawResult> laws;
  bool all_passed() const;
};

/// Evaluates H1..H12 exhaustively; H11 and H12 range over every subset.
LawReport verify_heyting_laws(const FiniteFrame& frame);

/// A map between finite frames preserving 0, 1, binary meets and joins.
class FrameMorphism {
 public:
  /// Throws Error if the table is malformed or fails to preserve structure.
  FrameMorphism(std::shared_ptr<const FiniteFrame> dom, std::shared_ptr<const FiniteFrame> cod,
                std::vector<Element> map, std::string name = {});

  static FrameMorphism identity(std::shared_ptr<const FiniteFrame> frame);

  Element operator()(Element x) const { return map_[x]; }
  const FiniteFrame& dom() const { return *dom_; }
  const FiniteFrame& cod() const { return *cod_; }
  const std::shared_ptr<const FiniteFrame>& dom_ptr() const { return dom_; }
  const std::shared_ptr<const FiniteFrame>& cod_ptr() const { return cod_; }
  const std::vector<Element>& table() const { return map_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const FiniteFrame> dom_;
  std::shared_ptr<const FiniteFrame> cod_;
  std::vector<Element> map_;
  std::string name_;
};

}  // namespace smoothloc
