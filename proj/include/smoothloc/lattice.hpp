#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "smoothloc/poset.hpp"

namespace smoothloc {

/// Binary meet/join tables of a finite lattice, row-major n*n.
struct LatticeTables {
  int n = 0;
  Element bottom = 0;
  Element top = 0;
  std::vector<Element> meet;
  std::vector<Element> join;

  Element meet_of(Element a, Element b) const { return meet[a * n + b]; }
  Element join_of(Element a, Element b) const { return join[a * n + b]; }
};

/// Greatest element of `candidates` that lies above all of them, if any.
std::optional<Element> greatest_in(const FinitePoset& p, ElementSet candidates);
/// Least element of `candidates` below all of them, if any.
std::optional<Element> least_in(const FinitePoset& p, ElementSet candidates);

/// Order-theoretic meet/join tables. Throws NotALattice naming the first
/// pair without an infimum or supremum.
LatticeTables lattice_tables(const FinitePoset& p);

std::optional<std::array<Element, 3>> distributivity_violation(const LatticeTables& t);

/// Complemented distributive lattice.
bool is_boolean(const LatticeTables& t);

struct HomSearch {
  bool preserve_meets = true;
  bool preserve_joins = true;
  bool preserve_bottom = true;
  bool preserve_top = true;
  /// prefilled[i] >= 0 pins the image of i.
  std::vector<Element> prefilled;
  /// Stop after this many solutions (0 = unlimited).
  std::size_t limit = 0;
};

/// Backtracking enumeration of maps a -> b preserving the selected
/// operations. Calls `emit(map)` for each; returns the number emitted.
std::size_t enumerate_homomorphisms(const LatticeTables& a, const LatticeTables& b, const HomSearch& search,
                                    const std::function<void(const std::vector<Element>&)>& emit);

}  // namespace smoothloc
