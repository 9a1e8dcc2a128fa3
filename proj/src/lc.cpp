#include "smoothloc/lc.hpp"

#include <algorithm>

namespace smoothloc {

LcPair lc_normalize(const FiniteFrame& L, Element a, Element b) {
  const Element x = L.arrow(b, a);
  return {x, L.join(x, b)};
}

bool is_canonical(const FiniteFrame& L, LcPair p) { return L.leq(p.a, p.b) && L.arrow(p.b, p.a) == p.a; }

bool lc_leq(const FiniteFrame& L, LcPair xy, LcPair ab) { return L.leq(xy.a, ab.a) && L.leq(ab.b, L.join(ab.a, xy.b)); }

LcPair lc_join(const FiniteFrame& L, LcPair xy, LcPair uv) {
  return lc_normalize(L, L.join(xy.a, uv.a), L.meet(xy.b, uv.b));
}

std::string lc_label(const FiniteFrame& L, LcPair p) { return "(" + L.label(p.a) + ", " + L.label(p.b) + ")"; }

LcSemilattice::LcSemilattice(std::shared_ptr<const FiniteFrame> frame) : frame_(std::move(frame)) {
  const FiniteFrame& L = *frame_;
  const int n = L.size();
  index_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (is_canonical(L, {a, b})) {
        if (size() == ElementSet::kCapacity) throw SizeCapExceeded("LC(" + L.name() + ")", size() + 1, ElementSet::kCapacity);
        index_[a * n + b] = size();
        pairs_.push_back({a, b});
      }
  std::vector<std::string> labels;
  for (const LcPair& p : pairs_) labels.push_back(lc_label(L, p));
  auto order = FinitePoset::from_relation(
      size(), [&](int i, int j) { return lc_leq(L, pairs_[i], pairs_[j]); }, std::move(labels));
  semilattice_ = std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(std::move(order), "LC(" + L.name() + ")"));
}

std::optional<int> LcSemilattice::find(LcPair p) const {
  const int n = frame_->size();
  if (p.a < 0 || p.b < 0 || p.a >= n || p.b >= n || index_[p.a * n + p.b] < 0) return std::nullopt;
  return index_[p.a * n + p.b];
}

int LcSemilattice::id_of(LcPair p) const {
  if (auto id = find(p)) return *id;
  throw NotLocallyClosed(lc_label(*frame_, p) + " is not a canonical pair");
}

int family_sublocale(const SublocaleLattice& SL, const LcSemilattice& LC, ElementSet family) {
  int acc = SL.bottom();
  for (int p : family) acc = SL.join(acc, locally_closed_sublocale(SL, LC[p]));
  return acc;
}

LcPair canonical_rep(const SublocaleLattice& SL, int s) {
  auto w = is_locally_closed(SL, s);
  if (!w) throw NotLocallyClosed(SL.label(s) + " is not locally closed");
  return {w->a, w->b};
}

Element nu_supp_formula(const FiniteFrame& L, const std::vector<LcPair>& family) {
  Element tail = L.top();
  for (const LcPair& p : family) tail = L.meet(tail, L.arrow(p.b, p.a));
  Element out = L.top();
  for (int x = 0; x < L.size(); ++x) {
    Element head = L.top();
    for (const LcPair& p : family) head = L.meet(head, L.arrow(p.b, L.join(x, p.a)));
    out = L.meet(out, L.arrow(head, L.join(x, tail)));
  }
  return out;
}

LcPair lc_meet_formula(const FiniteFrame& L, const std::vector<LcPair>& family) {
  Element first = L.top();
  for (const LcPair& p : family) first = L.meet(first, p.a);
  Element second = L.top();
  for (int x = 0; x < L.size(); ++x) {
    Element head = L.top();
    for (const LcPair& p : family) head = L.meet(head, L.arrow(p.b, L.join(x, p.a)));
    second = L.meet(second, L.arrow(head, L.join(x, first)));
  }
  return {first, second};
}

std::vector<LcPair> pairs_of(const LcSemilattice& LC, ElementSet family) {
  std::vector<LcPair> out;
  for (int p : family) out.push_back(LC[p]);
  return out;
}

LocalExactness is_locally_exact(const SublocaleLattice& SL, const LcSemilattice& LC, ElementSet family) {
  const FiniteFrame& L = SL.frame();
  const int s = family_sublocale(SL, LC, family);
  LocalExactness out;
  out.direct = is_locally_closed(SL, s).has_value();
  const Element m = L.meet_of(SL[s].carrier);
  const Element v = nu(L, SL[SL.supplement(s)], m);
  out.inequality = true;
  for (int p : family) out.inequality = out.inequality && L.leq(LC[p].b, L.join(v, LC[p].a));
  return out;
}

LcMeet lc_meet(const LcSemilattice& LC, ElementSet family) {
  LcMeet out;
  const Admissibility adm = check_admissible(LC.semilattice(), family);
  if (adm.meet) out.meet = LC[*adm.meet];
  out.admissible = adm.admissible;
  if (adm.witness) out.witness = LC[*adm.witness];
  out.formula = lc_meet_formula(LC.frame(), pairs_of(LC, family));
  return out;
}

LcPair lc_image(const FrameMorphism& f, LcPair p) { return lc_normalize(f.cod(), f(p.a), f(p.b)); }

JoinHom lc_hom(const FrameMorphism& f, const LcSemilattice& dom, const LcSemilattice& cod) {
  std::vector<Element> map;
  for (const LcPair& p : dom.pairs()) map.push_back(cod.id_of(lc_image(f, p)));
  return JoinHom(dom.semilattice_ptr(), cod.semilattice_ptr(), std::move(map), "LC(" + f.name() + ")");
}

CheckList verify_lc(const SublocaleLattice& SL, const LcSemilattice& LC, const SweepLimits& limits) {
  const FiniteFrame& L = SL.frame();
  const int n = L.size();
  const int k = LC.size();
  CheckList out;

  CheckAccumulator anti("lc_anti_isomorphism");
  {
    std::vector<int> image;
    for (int p = 0; p < k; ++p) image.push_back(locally_closed_sublocale(SL, LC[p]));
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    anti.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), [] { return std::string("not injective"); });
    anti.expect(sorted == locally_closed_sublocales(SL), [] { return std::string("image is not the locally closed sublocales"); });
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        const bool by_formula = lc_leq(L, LC[p], LC[q]);
        const bool by_inclusion = SL.leq(image[q], image[p]);
        anti.expect(by_formula == by_inclusion && by_formula == LC.leq(p, q),
                    [&] { return LC.label(p) + " vs " + LC.label(q); });
        anti.expect(SL.meet(image[p], image[q]) == image[LC.join(p, q)],
                    [&] { return "join of " + LC.label(p) + ", " + LC.label(q); });
      }
  }
  out.push_back(anti.result());

  CheckAccumulator joins("lc_join_formula");
  for (int p = 0; p < k; ++p) {
    joins.expect(LC.leq(LC.bottom(), p), [&] { return LC.label(p) + " below (0, 1)"; });
    for (int q = 0; q < k; ++q)
      joins.expect(LC.join(p, q) == LC.id_of(lc_join(L, LC[p], LC[q])), [&] { return LC.label(p) + ", " + LC.label(q); });
  }
  joins.expect(LC[LC.top()] == LcPair{L.top(), L.top()}, [] { return std::string("top is not (1, 1)"); });
  out.push_back(joins.result());

  CheckAccumulator normal("lc_normalize");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const LcPair p = lc_normalize(L, a, b);
      normal.expect(is_canonical(L, p) && lc_normalize(L, p.a, p.b) == p &&
                        locally_closed_sublocale(SL, p) == SL.locally_closed(a, b),
                    [&] { return lc_label(L, {a, b}); });
      if (n <= 8)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            normal.expect(lc_join(L, p, lc_normalize(L, x, y)) == lc_normalize(L, L.join(a, x), L.meet(y, b)),
                          [&] { return lc_label(L, {a, b}) + " ⊔ " + lc_label(L, {x, y}); });
    }
  out.push_back(normal.result());

  CheckAccumulator item1("canonical_rep_item1");
  CheckAccumulator item2("canonical_rep_item2");
  CheckAccumulator item3("canonical_rep_item3");
  for (int s = 0; s < SL.size(); ++s) {
    const Element m = L.meet_of(SL[s].carrier);
    const Element v = nu(L, SL[SL.supplement(s)], m);
    const int rep = SL.locally_closed(m, v);
    const int double_supp = SL.supplement(SL.supplement(s));
    item1.expect(SL.leq(rep, double_supp), [&] { return SL.label(s); });
    const bool scanned = is_locally_closed(SL, s).has_value();
    const bool criterion = SL.leq(s, SL.open(v));
    item2.expect(scanned == criterion && (!scanned || rep == s), [&] { return SL.label(s); });
  }
  for (int p = 0; p < k; ++p)
    item3.expect(canonical_rep(SL, locally_closed_sublocale(SL, LC[p])) == LC[p], [&] { return LC.label(p); });
  out.push_back(item1.result());
  out.push_back(item2.result());
  out.push_back(item3.result());

  CheckAccumulator nu_formula("nu_supplement_formula");
  CheckAccumulator central("locally_exact_iff_admissible");
  CheckAccumulator meet_formula("lc_meet_formula");
  const bool exhaustive = for_each_family(k, limits, [&](ElementSet F) {
    const std::vector<LcPair> fam = pairs_of(LC, F);
    const int s = family_sublocale(SL, LC, F);
    const Element m = L.meet_of(SL[s].carrier);
    nu_formula.expect(nu_supp_formula(L, fam) == nu(L, SL[SL.supplement(s)], m), [&] { return LC.semilattice().label(F); });
    const LocalExactness le = is_locally_exact(SL, LC, F);
    const LcMeet meet = lc_meet(LC, F);
    central.expect(le.agree() && le.direct == meet.admissible, [&] { return LC.semilattice().label(F); });
    if (le.direct)
      meet_formula.expect(meet.meet && *meet.meet == meet.formula && *meet.meet == canonical_rep(SL, s),
                          [&] { return LC.semilattice().label(F); });
  });
  // The ν formula is stated for arbitrary pairs, not only canonical ones.
  if (n <= 8) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const int s = SL.join(SL.locally_closed(a, b), SL.locally_closed(c, d));
            nu_formula.expect(nu_supp_formula(L, {{a, b}, {c, d}}) == nu(L, SL[SL.supplement(s)], L.meet_of(SL[s].carrier)),
                              [&] { return lc_label(L, {a, b}) + ", " + lc_label(L, {c, d}); });
          }
  }
  if (!exhaustive) {
    nu_formula.set_note("sampled families");
    central.set_note("sampled families");
    meet_formula.set_note("sampled families");
  }
  out.push_back(nu_formula.result());
  out.push_back(central.result());
  out.push_back(meet_formula.result());
  return out;
}

}  // namespace smoothloc
