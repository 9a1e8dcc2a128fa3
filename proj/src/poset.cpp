#include "smoothloc/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "smoothloc/errors.hpp"

namespace smoothloc {

namespace {

void check_size(int n) {
  if (n < 0) throw InvalidPoset("negative element count");
  if (n > ElementSet::kCapacity) throw SizeCapExceeded("poset", n, ElementSet::kCapacity);
}

}  // namespace

FinitePoset FinitePoset::from_covers(int n, const std::vector<Cover>& covers,
                                     std::vector<std::string> labels) {
  check_size(n);
  std::vector<ElementSet> up(n);
  for (int i = 0; i < n; ++i) up[i].insert(i);
  for (auto [i, j] : covers) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InvalidPoset("cover (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (i == j) throw InvalidPoset("element " + std::to_string(i) + " covers itself");
    up[i].insert(j);
  }
  // Warshall over bitset rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (up[i].contains(j) && up[j].contains(i))
        throw InvalidPoset("cover relation has a cycle through " + std::to_string(i) + " and " +
                           std::to_string(j));
  return from_up_sets(std::move(up), std::move(labels));
}

FinitePoset FinitePoset::from_up_sets(std::vector<ElementSet> up, std::vector<std::string> labels) {
  const int n = static_cast<int>(up.size());
  check_size(n);
  FinitePoset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.down_.assign(n, ElementSet{});
  const ElementSet all = ElementSet::first_n(n);
  for (int i = 0; i < n; ++i) {
    ElementSet row = p.up_[i];
    if (!row.subset_of(all)) throw InvalidPoset("relation mentions ids beyond the element count");
    if (!row.contains(i)) throw InvalidPoset("relation is not reflexive at " + std::to_string(i));
    for (int j : row) p.down_[j].insert(i);
  }
  for (int i = 0; i < n; ++i) {
    for (int j : p.up_[i]) {
      if (j != i && p.up_[j].contains(i))
        throw InvalidPoset("relation is not antisymmetric at " + std::to_string(i) + "," + std::to_string(j));
      if (!p.up_[j].subset_of(p.up_[i]))
        throw InvalidPoset("relation is not transitive through " + std::to_string(j));
    }
  }
  p.set_labels(std::move(labels));
  return p;
}

ElementSet FinitePoset::upper_covers(Element a) const {
  ElementSet strict = up(a) - ElementSet::single(a);
  ElementSet result;
  for (int j : strict)
    if ((strict & down(j)) == ElementSet::single(j)) result.insert(j);
  return result;
}

std::vector<Cover> FinitePoset::covers() const {
  std::vector<Cover> out;
  for (int i = 0; i < n_; ++i)
    for (int j : upper_covers(i)) out.emplace_back(i, j);
  return out;  // already lexicographic: i ascending, j ascending
}

std::vector<Element> FinitePoset::linear_extension() const {
  std::vector<Element> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down(a).size() < down(b).size(); });
  return order;
}

std::string FinitePoset::label(Element a) const {
  if (labels_.empty()) return std::to_string(a);
  return labels_[a];
}

void FinitePoset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw InvalidPoset("expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
  labels_ = std::move(labels);
}

FinitePoset FinitePoset::dual() const {
  FinitePoset d = *this;
  std::swap(d.up_, d.down_);
  return d;
}

FinitePoset FinitePoset::relabeled(const std::vector<int>& perm) const {
  std::vector<ElementSet> up(n_);
  for (int i = 0; i < n_; ++i)
    for (int j : up_[i])
      up[perm[i]].insert(perm[j]);
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(n_);
    for (int i = 0; i < n_; ++i) labels[perm[i]] = labels_[i];
  }
  return from_up_sets(std::move(up), std::move(labels));
}

namespace {

// Per-element signature refined once through neighbours.
std::vector<std::uint64_t> signatures(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> sig(n);
  for (int i = 0; i < n; ++i) {
    sig[i] = (static_cast<std::uint64_t>(p.down(i).size()) << 32) |
                                       (static_cast<std::uint64_t>(p.up(i).size()) << 16) |
                                       static_cast<std::uint64_t>(p.upper_covers(i).size());
  }
  std::vector<std::uint64_t> refined(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> below, above;
    for (int j : p.down(i)) below.push_back(sig[j]);
    for (int j : p.up(i)) above.push_back(sig[j]);
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    std::uint64_t h = sig[i] * 0x9E3779B97F4A7C15ULL;
    for (auto v : below) h = (h ^ v) * 0x100000001B3ULL;
    h ^= 0xABCDEFULL;
    for (auto v : above) h = (h ^ (v + 0x51ED27ULL)) * 0x100000001B3ULL;
    refined[i] = h;
  }
  return refined;
}

}  // namespace

std::uint64_t invariant_hash(const FinitePoset& p) {
  auto sig = signatures(p);
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = 0xCBF29CE484222325ULL ^ static_cast<std::uint64_t>(p.size());
  for (auto v : sig) h = (h ^ v) * 0x100000001B3ULL;
  return h;
}

std::optional<std::vector<int>> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  auto sa = signatures(a);
  auto sb = signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  // Assign a's elements bottom-up; each candidate must agree on signature and
  // on the order relation with everything already assigned.
  const auto order = a.linear_extension();
  std::vector<int> perm(n, -1);
  ElementSet used;
  std::function<bool(int)> extend = [&](int k) -> bool {
    if (k == n) return true;
    const int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used.contains(y) || sa[x] != sb[y]) continue;
      bool ok = true;
      for (int t = 0; t < k && ok; ++t) {
        const int u = order[t];
        const int v = perm[u];
        ok = a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v);
      }
      if (!ok) continue;
      perm[x] = y;
      used.insert(y);
      if (extend(k + 1)) return true;
      used.erase(y);
      perm[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

std::string canonical_form(const FinitePoset& p) {
  const int n = p.size();
  if (n > 8) throw SizeCapExceeded("canonical form input", n, 8);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur((n * n), '0');
  // perm[k] is the original element placed at position k.
  do {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        cur[(r * n + c)] = p.leq(perm[r], perm[c]) ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace smoothloc
