#include "smoothloc/lattice.hpp"

#include <algorithm>

#include "smoothloc/errors.hpp"

namespace smoothloc {

std::optional<Element> greatest_in(const FinitePoset& p, ElementSet candidates) {
  for (int g : candidates)
    if (candidates.subset_of(p.down(g))) return g;
  return std::nullopt;
}

std::optional<Element> least_in(const FinitePoset& p, ElementSet candidates) {
  for (int g : candidates)
    if (candidates.subset_of(p.up(g))) return g;
  return std::nullopt;
}

LatticeTables lattice_tables(const FinitePoset& p) {
  LatticeTables t;
  t.n = p.size();
  if (t.n == 0) throw NotALattice(0, 0, "elements (empty poset)");
  t.meet.resize(t.n * t.n);
  t.join.resize(t.n * t.n);
  for (int a = 0; a < t.n; ++a) {
    for (int b = a; b < t.n; ++b) {
      auto m = greatest_in(p, p.down(a) & p.down(b));
      if (!m) throw NotALattice(a, b, "infimum");
      auto j = least_in(p, p.up(a) & p.up(b));
      if (!j) throw NotALattice(a, b, "supremum");
      t.meet[a * t.n + b] = t.meet[b * t.n + a] = *m;
      t.join[a * t.n + b] = t.join[b * t.n + a] = *j;
    }
  }
  t.bottom = *least_in(p, p.all());
  t.top = *greatest_in(p, p.all());
  return t;
}

std::optional<std::array<Element, 3>> distributivity_violation(const LatticeTables& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (int z = y + 1; z < t.n; ++z)
        if (t.meet_of(x, t.join_of(y, z)) != t.join_of(t.meet_of(x, y), t.meet_of(x, z)))
          return std::array<Element, 3>{x, y, z};
  return std::nullopt;
}

bool is_boolean(const LatticeTables& t) {
  if (distributivity_violation(t)) return false;
  for (int a = 0; a < t.n; ++a) {
    bool complemented = false;
    for (int b = 0; b < t.n && !complemented; ++b)
      complemented = t.meet_of(a, b) == t.bottom && t.join_of(a, b) == t.top;
    if (!complemented) return false;
  }
  return true;
}

namespace {

struct Search {
  const LatticeTables& a;
  const LatticeTables& b;
  const HomSearch& opts;
  const std::function<void(const std::vector<Element>&)>& emit;
  std::vector<Element> image;
  std::vector<Element> order;  // elements of a still to assign
  std::size_t found = 0;
  // Pairs (y, z) with y ∧ z = x, resp. y ∨ z = x, for each x.
  std::vector<std::vector<std::pair<Element, Element>>> meet_pre, join_pre;

  // Every constraint touching x whose other participants are already assigned.
  bool consistent(Element x) const {
    const Element fx = image[x];
    if (opts.preserve_bottom && x == a.bottom && fx != b.bottom) return false;
    if (opts.preserve_top && x == a.top && fx != b.top) return false;
    for (Element y = 0; y < a.n; ++y) {
      const Element fy = image[y];
      if (fy < 0) continue;
      if (opts.preserve_meets) {
        const Element m = a.meet_of(x, y);
        if (image[m] >= 0 && image[m] != b.meet_of(fx, fy)) return false;
      }
      if (opts.preserve_joins) {
        const Element j = a.join_of(x, y);
        if (image[j] >= 0 && image[j] != b.join_of(fx, fy)) return false;
      }
    }
    if (opts.preserve_meets)
      for (auto [y, z] : meet_pre[x])
        if (image[y] >= 0 && image[z] >= 0 && fx != b.meet_of(image[y], image[z])) return false;
    if (opts.preserve_joins)
      for (auto [y, z] : join_pre[x])
        if (image[y] >= 0 && image[z] >= 0 && fx != b.join_of(image[y], image[z])) return false;
    return true;
  }

  bool done() const { return opts.limit != 0 && found >= opts.limit; }

  void run(std::size_t k) {
    if (done()) return;
    if (k == order.size()) {
      ++found;
      emit(image);
      return;
    }
    const Element x = order[k];
    for (Element v = 0; v < b.n && !done(); ++v) {
      image[x] = v;
      if (consistent(x)) run(k + 1);
    }
    image[x] = -1;
  }
};

}  // namespace

std::size_t enumerate_homomorphisms(const LatticeTables& a, const LatticeTables& b, const HomSearch& search,
                                    const std::function<void(const std::vector<Element>&)>& emit) {
  Search s{a, b, search, emit, std::vector<Element>(a.n, -1), {}, 0, {}, {}};
  s.meet_pre.resize(a.n);
  s.join_pre.resize(a.n);
  for (int y = 0; y < a.n; ++y)
    for (int z = y + 1; z < a.n; ++z) {
      if (search.preserve_meets) s.meet_pre[a.meet_of(y, z)].emplace_back(y, z);
      if (search.preserve_joins) s.join_pre[a.join_of(y, z)].emplace_back(y, z);
    }
  if (!search.prefilled.empty()) {
    for (int i = 0; i < a.n; ++i) s.image[i] = search.prefilled[i];
    for (int i = 0; i < a.n; ++i)
      if (s.image[i] >= 0 && !s.consistent(i)) return 0;
  }
  // Bottom-up by join-rank so that join constraints bite as early as possible.
  std::vector<int> rank(a.n, 0);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.join_of(x, y) == x) ++rank[x];
  for (int i = 0; i < a.n; ++i)
    if (s.image[i] < 0) s.order.push_back(i);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) { return rank[x] < rank[y]; });
  s.run(0);
  return s.found;
}

}  // namespace smoothloc
