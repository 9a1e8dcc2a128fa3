#include "smoothloc/semilattice.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace smoothloc {

JoinSemilattice JoinSemilattice::from_poset(FinitePoset poset, std::string name) {
  const int n = poset.size();
  if (n == 0) throw NotALattice(0, 0, "top (empty poset)");
  JoinSemilattice S;
  S.join_.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto j = least_in(poset, poset.up(a) & poset.up(b));
      if (!j) throw NotALattice(a, b, "join");
      S.join_[a * n + b] = S.join_[b * n + a] = *j;
    }
  auto top = greatest_in(poset, poset.all());
  if (!top) throw NotALattice(0, 0, "top");
  S.top_ = *top;
  S.poset_ = std::move(poset);
  S.name_ = std::move(name);
  return S;
}

Element JoinSemilattice::join_of(ElementSet s) const {
  Element acc = s.first();
  for (int x : s) acc = join(acc, x);
  return acc;
}

std::optional<Element> JoinSemilattice::meet_of(ElementSet family) const {
  ElementSet lower = all();
  for (int a : family) lower &= down(a);
  return greatest_in(poset_, lower);
}

std::string JoinSemilattice::label(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ", ";
    out += label(x);
    first = false;
  }
  return out + "}";
}

LatticeTables JoinSemilattice::join_tables() const {
  LatticeTables t;
  t.n = size();
  t.top = top_;
  t.bottom = least_in(poset_, all()).value_or(top_);
  t.join = join_;
  return t;
}

std::optional<Element> meet_exists(const JoinSemilattice& S, ElementSet family) { return S.meet_of(family); }

std::optional<Element> admissible_meet(const JoinSemilattice& S, ElementSet family) {
  const auto meet = S.meet_of(family);
  if (!meet) return std::nullopt;
  for (int b = 0; b < S.size(); ++b) {
    ElementSet joined;
    for (int a : family) joined.insert(S.join(b, a));
    const auto m = S.meet_of(joined);
    if (!m || *m != S.join(b, *meet)) return std::nullopt;
  }
  return meet;
}

Admissibility check_admissible(const JoinSemilattice& S, ElementSet family) {
  Admissibility out;
  out.meet = S.meet_of(family);
  if (!out.meet) return out;
  // Among all failing b, report the one whose right-hand side lands highest
  // (a missing meet counts as highest); ties go to the smallest id.
  int best_height = -1;
  for (int b = 0; b < S.size(); ++b) {
    ElementSet joined;
    for (int a : family) joined.insert(S.join(b, a));
    auto m = S.meet_of(joined);
    if (m && *m == S.join(b, *out.meet)) continue;
    const int height = m ? S.down(*m).size() : S.size() + 1;
    if (height > best_height) {
      best_height = height;
      out.witness = b;
    }
  }
  out.admissible = !out.witness.has_value();
  return out;
}

bool is_upper_set(const JoinSemilattice& S, ElementSet u) {
  if (u.empty()) return false;
  for (int x : u)
    if (!S.up(x).subset_of(u)) return false;
  return true;
}

ElementSet up_closure(const JoinSemilattice& S, ElementSet x) {
  ElementSet out;
  for (int a : x) out |= S.up(a);
  return out;
}

ElementSet admissible_closure(const JoinSemilattice& S, ElementSet u) {
  ElementSet out;
  for (int m = 0; m < S.size(); ++m) {
    const ElementSet above = u & S.up(m);
    if (above.empty()) continue;
    if (admissible_meet(S, above) == m) out.insert(m);
  }
  return out;
}

bool is_admissible_upper_set(const JoinSemilattice& S, ElementSet u) {
  return is_upper_set(S, u) && admissible_closure(S, u) == u;
}

std::vector<ElementSet> enumerate_upper_sets(const JoinSemilattice& S) {
  std::vector<Element> order = S.poset().linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<ElementSet> out;
  std::function<void(std::size_t, ElementSet)> rec = [&](std::size_t i, ElementSet cur) {
    if (i == order.size()) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    const Element x = order[i];
    rec(i + 1, cur);
    ElementSet strictly_above = S.up(x);
    strictly_above.erase(x);
    if (strictly_above.subset_of(cur)) {
      cur.insert(x);
      rec(i + 1, cur);
    }
  };
  rec(0, {});
  std::sort(out.begin(), out.end());
  return out;
}

AUFrame::AUFrame(std::shared_ptr<const JoinSemilattice> S) : S_(std::move(S)) {
  const JoinSemilattice& sl = *S_;
  std::set<ElementSet> found{sl.up(sl.top())};
  std::vector<ElementSet> frontier{sl.up(sl.top())};
  while (!frontier.empty()) {
    const ElementSet u = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < sl.size(); ++x) {
      const ElementSet v = admissible_closure(sl, u | sl.up(x));
      if (found.insert(v).second) {
        if (static_cast<int>(found.size()) > kMaxElements)
          throw SizeCapExceeded("AU(" + sl.name() + ")", static_cast<int>(found.size()), kMaxElements);
        frontier.push_back(v);
      }
    }
  }
  sets_.assign(found.begin(), found.end());
  for (int i = 0; i < size(); ++i) index_.emplace(sets_[i].bits(), i);

  const int k = size();
  tables_.n = k;
  tables_.bottom = id_of(sl.up(sl.top()));
  tables_.top = id_of(sl.all());
  tables_.meet.assign(k * k, 0);
  tables_.join.assign(k * k, 0);
  for (int u = 0; u < k; ++u)
    for (int v = u; v < k; ++v) {
      const int m = id_of(sets_[u] & sets_[v]);
      const int j = id_of(admissible_closure(sl, sets_[u] | sets_[v]));
      tables_.meet[u * k + v] = tables_.meet[v * k + u] = m;
      tables_.join[u * k + v] = tables_.join[v * k + u] = j;
    }
  for (int x = 0; x < sl.size(); ++x) principal_.push_back(id_of(sl.up(x)));
}

std::optional<int> AUFrame::find(ElementSet u) const {
  auto it = index_.find(u.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int AUFrame::id_of(ElementSet u) const {
  if (auto id = find(u)) return *id;
  throw Error(S_->label(u) + " is not an admissible upper set of " + S_->name());
}

JoinHom::JoinHom(std::shared_ptr<const JoinSemilattice> dom, std::shared_ptr<const JoinSemilattice> cod,
                 std::vector<Element> map, std::string name)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)), name_(std::move(name)) {
  const int n = dom_->size();
  if (static_cast<int>(map_.size()) != n) throw Error("join-hom table has the wrong length");
  for (Element y : map_)
    if (y < 0 || y >= cod_->size()) throw Error("join-hom image out of range");
  if (map_[dom_->top()] != cod_->top()) throw Error("join-hom does not preserve the top");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (map_[dom_->join(a, b)] != cod_->join(map_[a], map_[b]))
        throw Error("join-hom does not preserve the join of " + dom_->label(a) + " and " + dom_->label(b));
}

ElementSet JoinHom::image(ElementSet s) const {
  ElementSet out;
  for (int x : s) out.insert(map_[x]);
  return out;
}

bool for_each_family(int n, const SweepLimits& limits, const std::function<void(ElementSet)>& fn) {
  const ElementSet universe = ElementSet::first_n(n);
  if (n <= limits.exhaustive_up_to) {
    for_each_subset(universe, [&](ElementSet s) {
      if (!s.empty()) fn(s);
    });
    return true;
  }
  // Small families in colexicographic order of their members.
  std::function<void(int, int, ElementSet)> rec = [&](int next, int left, ElementSet cur) {
    if (!cur.empty()) fn(cur);
    if (left == 0) return;
    for (int x = next; x < n; ++x) {
      ElementSet grown = cur;
      grown.insert(x);
      rec(x + 1, left - 1, grown);
    }
  };
  rec(0, limits.max_family_size, {});

  std::mt19937_64 rng(limits.seed);
  for (int drawn = 0; drawn < limits.samples;) {
    const ElementSet s = ElementSet(rng()) & universe;
    if (s.size() <= limits.max_family_size) continue;
    fn(s);
    ++drawn;
  }
  return false;
}

std::string to_string(LiftFailure::Mode mode) {
  switch (mode) {
    case LiftFailure::Mode::MeetMissing: return "meet-missing";
    case LiftFailure::Mode::MeetNotAdmissible: return "meet-not-admissible";
    case LiftFailure::Mode::MeetNotPreserved: return "meet-not-preserved";
  }
  return "unknown";
}

ElementSet minimal_elements(const JoinSemilattice& S, ElementSet u) {
  ElementSet out;
  for (int x : u)
    if ((S.down(x) & u) == ElementSet::single(x)) out.insert(x);
  return out;
}

std::optional<LiftFailure> admissibility_violation(const JoinHom& f, const SweepLimits& limits) {
  std::optional<LiftFailure> found;
  auto test = [&](ElementSet F) {
    if (found) return;
    const auto meet = admissible_meet(f.dom(), F);
    if (!meet) return;
    const ElementSet image = f.image(F);
    const auto img = f.cod().meet_of(image);
    if (!img)
      found = LiftFailure{LiftFailure::Mode::MeetMissing, F};
    else if (!admissible_meet(f.cod(), image))
      found = LiftFailure{LiftFailure::Mode::MeetNotAdmissible, F};
    else if (*img != f(*meet))
      found = LiftFailure{LiftFailure::Mode::MeetNotPreserved, F};
  };
  // Meets and admissibility of a family only depend on its up-closure, so
  // one antichain per upper set covers every family.
  if (f.dom().size() <= 20) {
    for (ElementSet u : enumerate_upper_sets(f.dom())) {
      test(minimal_elements(f.dom(), u));
      if (found) break;
    }
  } else {
    for_each_family(f.dom().size(), limits, test);
  }
  return found;
}

AUMap candidate_lift(const JoinHom& f, std::shared_ptr<const AUFrame> dom, std::shared_ptr<const AUFrame> cod) {
  if (&dom->semilattice() != &f.dom() || &cod->semilattice() != &f.cod())
    throw Error("AU frames do not belong to the morphism's semilattices");
  AUMap h{dom, cod, {}};
  for (int u = 0; u < dom->size(); ++u) {
    const ElementSet generated = up_closure(f.cod(), f.image((*dom)[u]));
    const ElementSet closed = admissible_closure(f.cod(), generated);
    h.table.push_back(cod->id_of(closed));
  }
  return h;
}

LiftVerification verify_lift(const JoinHom& f, const AUMap& h) {
  const AUFrame& A = *h.dom;
  const AUFrame& B = *h.cod;
  LiftVerification v;
  v.preserves_top = h.table[A.top()] == B.top();
  v.preserves_joins = h.table[A.bottom()] == B.bottom();
  for (int u = 0; u < A.size(); ++u)
    for (int w = u; w < A.size(); ++w) {
      v.preserves_meets = v.preserves_meets && h.table[A.meet(u, w)] == B.meet(h.table[u], h.table[w]);
      v.preserves_joins = v.preserves_joins && h.table[A.join(u, w)] == B.join(h.table[u], h.table[w]);
    }
  for (int x = 0; x < f.dom().size(); ++x)
    v.extends_f = v.extends_f && h.table[A.principal(x)] == B.principal(f(x));
  return v;
}

AUMap lift_AU(const JoinHom& f, std::shared_ptr<const AUFrame> dom, std::shared_ptr<const AUFrame> cod,
              const SweepLimits& limits) {
  if (auto bad = admissibility_violation(f, limits))
    throw NotAdmissible(*bad, to_string(bad->mode) + " on " + f.dom().label(bad->family));
  AUMap h = candidate_lift(f, std::move(dom), std::move(cod));
  if (!verify_lift(f, h).ok_below_top()) throw Error("AU(" + f.name() + ") failed verification");
  return h;
}

std::vector<AUMap> frame_maps_extending(const JoinHom& f, std::shared_ptr<const AUFrame> dom,
                                        std::shared_ptr<const AUFrame> cod, std::size_t limit, bool require_top) {
  HomSearch search;
  search.preserve_top = require_top;
  search.prefilled.assign(dom->size(), -1);
  for (int x = 0; x < f.dom().size(); ++x) {
    int& slot = search.prefilled[dom->principal(x)];
    const int want = cod->principal(f(x));
    if (slot >= 0 && slot != want) return {};
    slot = want;
  }
  search.limit = limit;
  std::vector<AUMap> out;
  enumerate_homomorphisms(dom->tables(), cod->tables(), search,
                          [&](const std::vector<Element>& m) { out.push_back(AUMap{dom, cod, m}); });
  return out;
}

CheckList verify_bruns_lakser(const JoinSemilattice& S, const AUFrame& au, const SweepLimits& limits) {
  CheckList out;
  const int n = S.size();
  const bool exhaustive_upsets = n <= 20;

  std::vector<ElementSet> upsets;
  if (exhaustive_upsets) {
    upsets = enumerate_upper_sets(S);
  } else {
    std::set<ElementSet> sample;
    for (int x = 0; x < n; ++x) sample.insert(S.up(x));
    std::mt19937_64 rng(limits.seed);
    for (int i = 0; i < limits.samples; ++i) sample.insert(up_closure(S, ElementSet(rng()) & S.all()) | S.up(S.top()));
    upsets.assign(sample.begin(), sample.end());
  }

  CheckAccumulator enumeration("au_enumeration");
  if (exhaustive_upsets) {
    std::vector<ElementSet> admissible;
    for (ElementSet u : upsets)
      if (is_admissible_upper_set(S, u)) admissible.push_back(u);
    enumeration.expect(admissible == au.sets(), [&] {
      return "scan found " + std::to_string(admissible.size()) + ", join closure found " + std::to_string(au.size());
    });
  } else {
    enumeration.set_note("sampled");
    for (ElementSet u : au.sets())
      enumeration.expect(is_admissible_upper_set(S, u), [&] { return S.label(u); });
  }
  out.push_back(enumeration.result());

  CheckAccumulator closure("admissible_closure_one_step");
  CheckAccumulator brute("admissible_closure_matches_definition");
  for (ElementSet u : upsets) {
    const ElementSet a = admissible_closure(S, u);
    closure.expect(u.subset_of(a) && is_admissible_upper_set(S, a), [&] { return S.label(u); });
    for (ElementSet v : au.sets())
      if (u.subset_of(v)) closure.expect(a.subset_of(v), [&] { return S.label(u) + " vs " + S.label(v); });
    if (u.size() <= 8) {
      ElementSet direct;
      for_each_subset(u, [&](ElementSet F) {
        if (F.empty()) return;
        if (auto m = admissible_meet(S, F)) direct.insert(*m);
      });
      brute.expect(direct == a, [&] { return S.label(u); });
    }
  }
  if (!exhaustive_upsets) closure.set_note("sampled");
  out.push_back(closure.result());
  out.push_back(brute.result());

  CheckAccumulator frame_law("au_is_frame");
  for (int u = 0; u < au.size(); ++u)
    for (int v = 0; v < au.size(); ++v)
      frame_law.expect(au[au.meet(u, v)] == (au[u] & au[v]), [&] { return au.label(u) + " ∩ " + au.label(v); });
  if (auto bad = distributivity_violation(au.tables()))
    frame_law.expect(false, [&] { return au.label((*bad)[0]) + ", " + au.label((*bad)[1]) + ", " + au.label((*bad)[2]); });
  out.push_back(frame_law.result());

  std::vector<ElementSet> admissible_families;
  std::vector<Element> family_meets;
  CheckAccumulator stable("admissible_stable_under_joins");
  CheckAccumulator embed("up_embedding_meets_to_joins");
  const bool exhaustive_families = for_each_family(n, limits, [&](ElementSet F) {
    const auto meet = S.meet_of(F);
    if (!meet) return;
    const bool admissible = is_admissible_family(S, F);
    int j = au.bottom();
    for (int a : F) j = au.join(j, au.principal(a));
    embed.expect((j == au.principal(*meet)) == admissible, [&] { return S.label(F); });
    if (!admissible) return;
    if (admissible_families.size() < 256) {
      admissible_families.push_back(F);
      family_meets.push_back(*meet);
    }
    for (int b = 0; b < n; ++b) {
      ElementSet joined;
      for (int a : F) joined.insert(S.join(a, b));
      stable.expect(is_admissible_family(S, joined), [&] { return S.label(F) + " with " + S.label(b); });
    }
  });
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      embed.expect(S.up(S.join(x, y)) == (S.up(x) & S.up(y)), [&] { return S.label(x) + ", " + S.label(y); });
  if (!exhaustive_families) {
    stable.set_note("sampled");
    embed.set_note("sampled");
  }
  out.push_back(stable.result());
  out.push_back(embed.result());

  CheckAccumulator unions("union_of_admissible_families");
  for (std::size_t i = 0; i < admissible_families.size(); ++i)
    for (std::size_t j = i + 1; j < admissible_families.size(); ++j) {
      ElementSet meets;
      meets.insert(family_meets[i]);
      meets.insert(family_meets[j]);
      if (!is_admissible_family(S, meets)) continue;
      unions.expect(is_admissible_family(S, admissible_families[i] | admissible_families[j]),
                    [&] { return S.label(admissible_families[i]) + " ∪ " + S.label(admissible_families[j]); });
    }
  out.push_back(unions.result());
  return out;
}

CheckList verify_lift_theorem(const JoinHom& f, const std::shared_ptr<const AUFrame>& dom,
                              const std::shared_ptr<const AUFrame>& cod, const SweepLimits& limits) {
  const auto violation = admissibility_violation(f, limits);
  const auto extending = frame_maps_extending(f, dom, cod, 0, false);
  const AUMap candidate = candidate_lift(f, dom, cod);
  const LiftVerification verdict = verify_lift(f, candidate);

  CheckAccumulator iff("lift_iff_admissible");
  const bool admissible = !violation;
  iff.expect(admissible == !extending.empty() && admissible == verdict.ok_below_top(), [&] {
    std::string w = f.name() + ": admissible=" + (admissible ? "true" : "false") +
                    " extending maps=" + std::to_string(extending.size());
    if (violation) w += " failure " + to_string(violation->mode) + " on " + f.dom().label(violation->family);
    return w;
  });
  CheckAccumulator unique("lift_unique_and_matches_formula");
  unique.expect(extending.size() <= 1, [&] { return f.name() + ": " + std::to_string(extending.size()) + " lifts"; });
  if (admissible && extending.size() == 1)
    unique.expect(extending.front().table == candidate.table, [&] { return f.name(); });

  CheckAccumulator top("lift_preserves_top_when_f_preserves_bottom");
  const auto bottom_dom = least_in(f.dom().poset(), f.dom().all());
  const auto bottom_cod = least_in(f.cod().poset(), f.cod().all());
  if (admissible && bottom_dom && bottom_cod && f(*bottom_dom) == *bottom_cod)
    top.expect(verdict.preserves_top, [&] { return f.name(); });
  return {iff.result(), unique.result(), top.result()};
}

}  // namespace smoothloc
