#include "smoothloc/sublocale.hpp"

#include <algorithm>
#include <set>

#include "smoothloc/errors.hpp"

namespace smoothloc {

bool is_sublocale(const FiniteFrame& L, ElementSet subset) {
  if (!subset.subset_of(L.all()) || !subset.contains(L.top())) return false;
  for (int x : subset)
    for (int y : subset)
      if (y > x && !subset.contains(L.meet(x, y))) return false;
  for (int s : subset)
    for (int a = 0; a < L.size(); ++a)
      if (!subset.contains(L.arrow(a, s))) return false;
  return true;
}

Sublocale closed(const FiniteFrame& L, Element a) { return {L.up(a)}; }

Sublocale open_(const FiniteFrame& L, Element a) {
  ElementSet out;
  for (int b = 0; b < L.size(); ++b) out.insert(L.arrow(a, b));
  return {out};
}

Sublocale meet_closure(const FiniteFrame& L, ElementSet subset) {
  ElementSet out = subset;
  out.insert(L.top());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : out)
      for (int y : out) {
        const Element m = L.meet(x, y);
        if (!out.contains(m)) {
          out.insert(m);
          grew = true;
        }
      }
  }
  return {out};
}

Sublocale join(const FiniteFrame& L, const Sublocale& s, const Sublocale& t) {
  return meet_closure(L, s.carrier | t.carrier);
}

Element nu(const FiniteFrame& L, const Sublocale& s, Element a) { return L.meet_of(s.carrier & L.up(a)); }

Sublocale closure(const FiniteFrame& L, const Sublocale& s) { return closed(L, L.meet_of(s.carrier)); }

Sublocale locally_closed(const FiniteFrame& L, Element a, Element b) {
  return intersect(closed(L, a), open_(L, b));
}

SublocaleLattice::SublocaleLattice(std::shared_ptr<const FiniteFrame> frame, int frame_cap)
    : frame_(std::move(frame)) {
  const FiniteFrame& L = *frame_;
  if (L.size() > frame_cap) throw SizeCapExceeded("frame " + L.name(), L.size(), frame_cap);

  ElementSet rest = L.all();
  rest.erase(L.top());
  for_each_subset(rest, [&](ElementSet s) {
    s.insert(L.top());
    if (is_sublocale(L, s)) {
      if (static_cast<int>(all_.size()) == kMaxSublocales)
        throw SizeCapExceeded("sublocale lattice of " + L.name(), kMaxSublocales + 1, kMaxSublocales);
      index_.emplace(s.bits(), static_cast<int>(all_.size()));
      all_.push_back({s});
    }
  });

  const int k = size();
  bottom_ = index_.at(ElementSet::single(L.top()).bits());
  top_ = index_.at(L.all().bits());
  join_.assign(k * k, 0);
  meet_.assign(k * k, 0);
  for (int s = 0; s < k; ++s)
    for (int t = s; t < k; ++t) {
      const int j = id_of(smoothloc::join(L, all_[s], all_[t]));
      const int m = id_of(intersect(all_[s], all_[t]));
      join_[s * k + t] = join_[t * k + s] = j;
      meet_[s * k + t] = meet_[t * k + s] = m;
    }

  for (int a = 0; a < L.size(); ++a) {
    closed_.push_back(id_of(smoothloc::closed(L, a)));
    open_.push_back(id_of(smoothloc::open_(L, a)));
  }

  supplement_.resize(k);
  for (int s = 0; s < k; ++s) {
    ElementSet acc = L.all();
    for (int t = 0; t < k; ++t)
      if (join(s, t) == top_) acc &= all_[t].carrier;
    supplement_[s] = id_of({acc});
  }
}

std::optional<int> SublocaleLattice::find(ElementSet carrier) const {
  auto it = index_.find(carrier.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SublocaleLattice::id_of(const Sublocale& s) const {
  if (auto id = find(s.carrier)) return *id;
  throw Error(frame_->label(s.carrier) + " is not a sublocale of " + frame_->name());
}

std::string SublocaleLattice::label(int s) const { return frame_->label(all_[s].carrier); }

Sublocale supplement(const SublocaleLattice& SL, const Sublocale& s) { return SL[SL.supplement(SL.id_of(s))]; }

std::vector<int> smooth_sublocales(const SublocaleLattice& SL) {
  std::vector<int> out;
  for (int s = 0; s < SL.size(); ++s)
    if (SL.supplement(SL.supplement(s)) == s) out.push_back(s);
  return out;
}

namespace {

// Closure of `seed` under the binary operation `op` against each generator.
template <class Op>
std::vector<int> generated(int seed, const std::vector<int>& generators, Op op) {
  std::set<int> out{seed};
  std::vector<int> frontier{seed};
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (int g : generators) {
      const int y = op(x, g);
      if (out.insert(y).second) frontier.push_back(y);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<int> closed_joins(const SublocaleLattice& SL) {
  std::vector<int> gens;
  for (int a = 0; a < SL.frame().size(); ++a) gens.push_back(SL.closed(a));
  return generated(SL.bottom(), sorted_unique(gens), [&](int x, int g) { return SL.join(x, g); });
}

std::vector<int> open_meets(const SublocaleLattice& SL) {
  std::vector<int> gens;
  for (int a = 0; a < SL.frame().size(); ++a) gens.push_back(SL.open(a));
  return generated(SL.top(), sorted_unique(gens), [&](int x, int g) { return SL.meet(x, g); });
}

std::vector<int> locally_closed_sublocales(const SublocaleLattice& SL) {
  std::vector<int> out;
  const int n = SL.frame().size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back(SL.locally_closed(a, b));
  return sorted_unique(out);
}

std::vector<int> joins_of_locally_closed(const SublocaleLattice& SL) {
  return generated(SL.bottom(), locally_closed_sublocales(SL), [&](int x, int g) { return SL.join(x, g); });
}

FinitePoset inclusion_order(const SublocaleLattice& SL, const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  if (k > ElementSet::kCapacity) throw SizeCapExceeded("sublocale collection", k, ElementSet::kCapacity);
  std::vector<std::string> labels;
  for (int s : members) labels.push_back(SL.label(s));
  return FinitePoset::from_relation(
      k, [&](int i, int j) { return SL.leq(members[i], members[j]); }, std::move(labels));
}

std::optional<LocallyClosedWitness> is_locally_closed(const SublocaleLattice& SL, int s) {
  const FiniteFrame& L = SL.frame();
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (SL.locally_closed(a, b) == s) {
        const Element m = L.meet_of(SL[s].carrier);
        return LocallyClosedWitness{m, nu(L, SL[SL.supplement(s)], m)};
      }
  return std::nullopt;
}

std::vector<std::pair<Element, Element>> zero_dim_decomposition(const SublocaleLattice& SL, int s) {
  std::vector<std::pair<Element, Element>> out;
  const int n = SL.frame().size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (SL.leq(s, SL.join(SL.open(a), SL.closed(b)))) out.emplace_back(a, b);
  return out;
}

int zero_dim_recompose(const SublocaleLattice& SL, const std::vector<std::pair<Element, Element>>& pairs) {
  int acc = SL.top();
  for (auto [a, b] : pairs) acc = SL.meet(acc, SL.join(SL.open(a), SL.closed(b)));
  return acc;
}

bool is_subfit(const FiniteFrame& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (L.leq(a, b)) continue;
      bool separated = false;
      for (int c = 0; c < n && !separated; ++c)
        separated = L.join(a, c) == L.top() && L.join(b, c) != L.top();
      if (!separated) return false;
    }
  return true;
}

LatticeTables collection_tables(const SublocaleLattice& SL, const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  if (k == 0) throw NotALattice(0, 0, "members (empty collection)");
  auto extreme = [&](const std::vector<int>& cands, bool least) -> std::optional<int> {
    if (cands.empty()) return std::nullopt;
    int best = cands.front();
    for (int c : cands) {
      const int sz = SL[members[c]].carrier.size(), bsz = SL[members[best]].carrier.size();
      if (least ? sz < bsz : sz > bsz) best = c;
    }
    for (int c : cands)
      if (least ? !SL.leq(members[best], members[c]) : !SL.leq(members[c], members[best])) return std::nullopt;
    return best;
  };

  LatticeTables t;
  t.n = k;
  t.meet.assign(k * k, 0);
  t.join.assign(k * k, 0);
  std::vector<int> every(k);
  for (int i = 0; i < k; ++i) every[i] = i;
  auto lo = extreme(every, true), hi = extreme(every, false);
  if (!lo || !hi) throw NotALattice(0, 0, "least or greatest member");
  t.bottom = *lo;
  t.top = *hi;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      std::vector<int> ub, lb;
      for (int c = 0; c < k; ++c) {
        if (SL.leq(members[i], members[c]) && SL.leq(members[j], members[c])) ub.push_back(c);
        if (SL.leq(members[c], members[i]) && SL.leq(members[c], members[j])) lb.push_back(c);
      }
      auto jn = extreme(ub, true), mt = extreme(lb, false);
      if (!jn) throw NotALattice(i, j, "join in the collection");
      if (!mt) throw NotALattice(i, j, "meet in the collection");
      t.join[i * k + j] = t.join[j * k + i] = *jn;
      t.meet[i * k + j] = t.meet[j * k + i] = *mt;
    }
  return t;
}

namespace {

std::string pair_label(const FiniteFrame& L, Element a, Element b) {
  return "(" + L.label(a) + ", " + L.label(b) + ")";
}

}  // namespace

CheckList verify_sublocale_calculus(const SublocaleLattice& SL) {
  const FiniteFrame& L = SL.frame();
  const int n = L.size();
  const int k = SL.size();
  CheckList out;

  CheckAccumulator enumerated("sublocale_enumeration");
  for (int s = 0; s < k; ++s) {
    enumerated.expect(is_sublocale(L, SL[s].carrier), [&] { return SL.label(s); });
    for (int t = 0; t < k; ++t) {
      const Sublocale j = SL[SL.join(s, t)];
      // All meets of subsets of the union; pairwise meets suffice once the union is large.
      const ElementSet uni = SL[s].carrier | SL[t].carrier;
      ElementSet expected;
      if (uni.size() <= 12) {
        for_each_subset(uni, [&](ElementSet m) { expected.insert(L.meet_of(m)); });
      } else {
        for (int x : SL[s].carrier)
          for (int y : SL[t].carrier) expected.insert(L.meet(x, y));
      }
      enumerated.expect(j.carrier == expected, [&] { return SL.label(s) + " v " + SL.label(t); });
    }
  }
  out.push_back(enumerated.result());

  CheckAccumulator complement("closed_open_complement");
  CheckAccumulator closed_binary("closed_join_is_closed_meet");
  CheckAccumulator open_binary("open_meet_is_open_meet");
  for (int a = 0; a < n; ++a) {
    complement.expect(SL.meet(SL.closed(a), SL.open(a)) == SL.bottom() &&
                          SL.join(SL.closed(a), SL.open(a)) == SL.top() &&
                          SL.supplement(SL.closed(a)) == SL.open(a) && SL.supplement(SL.open(a)) == SL.closed(a),
                      [&] { return L.label(a); });
    for (int b = 0; b < n; ++b) {
      closed_binary.expect(SL.join(SL.closed(a), SL.closed(b)) == SL.closed(L.meet(a, b)),
                           [&] { return pair_label(L, a, b); });
      open_binary.expect(SL.meet(SL.open(a), SL.open(b)) == SL.open(L.meet(a, b)),
                         [&] { return pair_label(L, a, b); });
    }
  }
  out.push_back(complement.result());
  out.push_back(closed_binary.result());
  out.push_back(open_binary.result());

  CheckAccumulator closed_meets("closed_intersection_is_closed_join");
  CheckAccumulator open_joins("open_join_is_open_join");
  for_each_subset(L.all(), [&](ElementSet fam) {
    int inter = SL.top(), uni = SL.bottom();
    for (int a : fam) {
      inter = SL.meet(inter, SL.closed(a));
      uni = SL.join(uni, SL.open(a));
    }
    const Element j = L.join_of(fam);
    closed_meets.expect(inter == SL.closed(j), [&] { return L.label(fam); });
    open_joins.expect(uni == SL.open(j), [&] { return L.label(fam); });
  });
  out.push_back(closed_meets.result());
  out.push_back(open_joins.result());

  CheckAccumulator nu_basic("nu_is_least_above");
  CheckAccumulator nu_joins("nu_of_join_is_meet_of_nu");
  CheckAccumulator coframe("coframe_law");
  for (int s = 0; s < k; ++s) {
    const Sublocale& S = SL[s];
    for (int x = 0; x < n; ++x) {
      const Element v = nu(L, S, x);
      nu_basic.expect(S.contains(v) && L.leq(x, v) && nu(L, S, v) == v, [&] { return SL.label(s) + " at " + L.label(x); });
      for (int y = 0; y < n; ++y)
        if (L.leq(x, y))
          nu_basic.expect(L.leq(v, nu(L, S, y)), [&] { return SL.label(s) + " monotone at " + pair_label(L, x, y); });
    }
    for (int t = 0; t < k; ++t) {
      const Sublocale& J = SL[SL.join(s, t)];
      for (int x = 0; x < n; ++x)
        nu_joins.expect(nu(L, J, x) == L.meet(nu(L, S, x), nu(L, SL[t], x)),
                        [&] { return SL.label(s) + " v " + SL.label(t) + " at " + L.label(x); });
      for (int u = t; u < k && !coframe.failed(); ++u)
        coframe.expect(SL.join(s, SL.meet(t, u)) == SL.meet(SL.join(s, t), SL.join(s, u)),
                       [&] { return SL.label(s) + ", " + SL.label(t) + ", " + SL.label(u); });
    }
  }
  for (int x = 0; x < n; ++x)
    nu_joins.expect(nu(L, SL[SL.bottom()], x) == L.top(), [&] { return "empty family at " + L.label(x); });
  out.push_back(nu_basic.result());
  out.push_back(nu_joins.result());
  out.push_back(coframe.result());

  CheckAccumulator nu_closed("nu_closed_is_join");
  CheckAccumulator nu_lc("nu_locally_closed_formula");
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      nu_closed.expect(nu(L, SL[SL.closed(a)], x) == L.join(a, x), [&] { return pair_label(L, a, x); });
      for (int b = 0; b < n; ++b)
        nu_lc.expect(nu(L, SL[SL.locally_closed(a, b)], x) == L.arrow(b, L.join(a, x)),
                     [&] { return "a,b,x = " + L.label(a) + "," + L.label(b) + "," + L.label(x); });
    }
  out.push_back(nu_closed.result());
  out.push_back(nu_lc.result());

  CheckAccumulator closure_check("closure_is_smallest_closed");
  for (int s = 0; s < k; ++s) {
    int smallest = SL.top();
    for (int a = 0; a < n; ++a)
      if (SL.leq(s, SL.closed(a)) && SL.leq(SL.closed(a), smallest)) smallest = SL.closed(a);
    closure_check.expect(SL.id_of(closure(L, SL[s])) == smallest, [&] { return SL.label(s); });
  }
  out.push_back(closure_check.result());

  CheckAccumulator supp("supplement_is_least_complement");
  for (int s = 0; s < k; ++s) {
    const int sh = SL.supplement(s);
    supp.expect(SL.join(s, sh) == SL.top(), [&] { return SL.label(s); });
    for (int t = 0; t < k; ++t)
      if (SL.join(s, t) == SL.top()) supp.expect(SL.leq(sh, t), [&] { return SL.label(s) + " vs " + SL.label(t); });
  }
  out.push_back(supp.result());

  const std::vector<int> smooth = smooth_sublocales(SL);
  CheckAccumulator smooth_check("smooth_is_join_of_locally_closed_and_boolean");
  smooth_check.expect(smooth == joins_of_locally_closed(SL), [&] { return std::string("collections differ"); });
  smooth_check.expect(is_boolean(collection_tables(SL, smooth)), [&] { return std::string("S_b not Boolean"); });
  out.push_back(smooth_check.result());

  CheckAccumulator lc_scan("locally_closed_canonical_witness");
  for (int s = 0; s < k; ++s)
    if (auto w = is_locally_closed(SL, s))
      lc_scan.expect(SL.locally_closed(w->a, w->b) == s, [&] { return SL.label(s); });
  out.push_back(lc_scan.result());

  CheckAccumulator zero_dim("zero_dimensional_recomposition");
  for (int s = 0; s < k; ++s)
    zero_dim.expect(zero_dim_recompose(SL, zero_dim_decomposition(SL, s)) == s, [&] { return SL.label(s); });
  out.push_back(zero_dim.result());

  const std::vector<int> sc = closed_joins(SL);
  const LatticeTables sc_tables = collection_tables(SL, sc);
  CheckAccumulator sc_frame("closed_joins_form_a_frame");
  sc_frame.expect(!distributivity_violation(sc_tables), [&] { return std::string("S_c not distributive"); });
  out.push_back(sc_frame.result());

  CheckAccumulator subfit("subfit_equivalence");
  const bool sub = is_subfit(L);
  const bool equal = sc == smooth;
  const bool boolean = is_boolean(sc_tables);
  subfit.expect(sub == equal && equal == boolean, [&] {
    return std::string("subfit=") + (sub ? "true" : "false") + " S_c=S_b=" + (equal ? "true" : "false") +
           " S_c Boolean=" + (boolean ? "true" : "false");
  });
  out.push_back(subfit.result());

  return out;
}

}  // namespace smoothloc
