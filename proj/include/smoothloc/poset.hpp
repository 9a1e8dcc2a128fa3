#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smoothloc/bits.hpp"

namespace smoothloc {

using Cover = std::pair<Element, Element>;

/// A finite partial order on ids 0..n-1, stored as principal up- and
/// down-sets. At most ElementSet::kCapacity elements.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Transitive-reflexive closure of the cover pairs (i, j), meaning i < j.
  /// Throws InvalidPoset on an out-of-range id or a cycle.
  static FinitePoset from_covers(int n, const std::vector<Cover>& covers,
                                 std::vector<std::string> labels = {});
  /// `up[i]` is the set of j with i <= j. Validates reflexivity,
  /// antisymmetry and transitivity.
  static FinitePoset from_up_sets(std::vector<ElementSet> up, std::vector<std::string> labels = {});
  /// Builds the order from a predicate leq(i, j); validates it like from_up_sets.
  template <class Leq>
  static FinitePoset from_relation(int n, Leq&& leq, std::vector<std::string> labels = {}) {
    std::vector<ElementSet> up(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq(i, j)) up[i].insert(j);
    return from_up_sets(std::move(up), std::move(labels));
  }

  int size() const { return n_; }
  ElementSet all() const { return ElementSet::first_n(n_); }
  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  ElementSet up(Element a) const { return up_[a]; }
  ElementSet down(Element a) const { return down_[a]; }
  ElementSet upper_covers(Element a) const;

  /// Cover pairs (i, j) sorted lexicographically.
  std::vector<Cover> covers() const;
  /// Ids ordered so that every element comes after everything below it.
  std::vector<Element> linear_extension() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The label when present, the decimal id otherwise.
  std::string label(Element a) const;
  /// Throws InvalidPoset if the count differs from size().
  void set_labels(std::vector<std::string> labels);

  FinitePoset dual() const;
  /// Same order with element i renamed to perm[i].
  FinitePoset relabeled(const std::vector<int>& perm) const;

  bool operator==(const FinitePoset& o) const { return n_ == o.n_ && up_ == o.up_; }

 private:
  int n_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

/// Isomorphism-invariant fingerprint; equal posets up to isomorphism get
/// equal hashes, collisions must be confirmed with find_isomorphism.
std::uint64_t invariant_hash(const FinitePoset& p);

/// An order isomorphism a -> b (perm[i] is the image of i), if one exists.
std::optional<std::vector<int>> find_isomorphism(const FinitePoset& a, const FinitePoset& b);

inline bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return find_isomorphism(a, b).has_value();
}

/// Lexicographically minimal order matrix over all relabelings, as a 0/1
/// string of n*n characters. Brute force; throws SizeCapExceeded above 8.
std::string canonical_form(const FinitePoset& p);

}  // namespace smoothloc
