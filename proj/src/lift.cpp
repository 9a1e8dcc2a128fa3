#include "smoothloc/lift.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace smoothloc {

std::shared_ptr<const FrameAnalysis> FrameAnalysis::of(std::shared_ptr<const FiniteFrame> frame) {
  auto out = std::make_shared<FrameAnalysis>();
  out->frame = frame;
  out->sublocales = std::make_shared<const SublocaleLattice>(frame);
  out->smooth = std::make_shared<const Correspondence>(out->sublocales, Flavor::Smooth);
  const std::vector<int>& sb = out->smooth->collection();
  out->sb_tables = collection_tables(*out->sublocales, sb);
  out->sb_pos.assign(out->sublocales->size(), -1);
  for (int i = 0; i < static_cast<int>(sb.size()); ++i) out->sb_pos[sb[i]] = i;
  out->sublocale_of_au.assign(out->smooth->au()->size(), -1);
  out->au_of_sublocale.assign(out->sublocales->size(), -1);
  for (const auto& [s, u] : build_iso(*out->smooth).rows) {
    out->sublocale_of_au[u] = s;
    out->au_of_sublocale[s] = u;
  }
  return out;
}

SweepLimits lift_sweep_limits() {
  SweepLimits limits;
  limits.exhaustive_up_to = 16;
  return limits;
}

namespace {

// A well-definedness condition in one of two shapes over k generators:
//   join mode: g(i) ⊆ ⋁_F g  implies  g'(i) ⊆ ⋁_F g'
//   meet mode: ⋂_F g ⊆ g(i)  implies  ⋂_F g' ⊆ g'(i)
// where g lands in S(L) and g' (the image generator) in S(M). Everything is
// reduced to one subset test per family through the tables `holds_dom` and
// `holds_cod`, indexed by sublocale id.
struct Condition {
  std::string name;
  const SublocaleLattice& SL;
  const SublocaleLattice& SM;
  std::vector<int> dom_gen;
  std::vector<int> cod_gen;
  bool join_mode = true;
  std::function<std::string(int)> label;
};

CheckOutcome evaluate(const Condition& c, const SweepLimits& limits) {
  const int k = static_cast<int>(c.dom_gen.size());
  auto relation = [&](const SublocaleLattice& S, int gen, int acc) {
    return c.join_mode ? S.leq(gen, acc) : S.leq(acc, gen);
  };
  std::vector<ElementSet> holds_dom(c.SL.size()), holds_cod(c.SM.size());
  for (int s = 0; s < c.SL.size(); ++s)
    for (int i = 0; i < k; ++i)
      if (relation(c.SL, c.dom_gen[i], s)) holds_dom[s].insert(i);
  for (int t = 0; t < c.SM.size(); ++t)
    for (int i = 0; i < k; ++i)
      if (relation(c.SM, c.cod_gen[i], t)) holds_cod[t].insert(i);

  auto combine = [&](const SublocaleLattice& S, int acc, int gen) { return c.join_mode ? S.join(acc, gen) : S.meet(acc, gen); };
  const int start_dom = c.join_mode ? c.SL.bottom() : c.SL.top();
  const int start_cod = c.join_mode ? c.SM.bottom() : c.SM.top();

  CheckAccumulator acc(c.name);
  auto visit = [&](ElementSet F, int s, int t) {
    const ElementSet bad = holds_dom[s] - holds_cod[t];
    return acc.expect(bad.empty(), [&] {
      std::string fam = "{";
      for (int i : F) fam += (fam.size() > 1 ? ", " : "") + c.label(i);
      return "family " + fam + "} target " + c.label(bad.first());
    });
  };

  if (k <= limits.exhaustive_up_to) {
    std::function<void(int, ElementSet, int, int)> rec = [&](int next, ElementSet F, int s, int t) {
      if (!visit(F, s, t)) return;
      for (int i = next; i < k && !acc.failed(); ++i) {
        ElementSet G = F;
        G.insert(i);
        rec(i + 1, G, combine(c.SL, s, c.dom_gen[i]), combine(c.SM, t, c.cod_gen[i]));
      }
    };
    rec(0, {}, start_dom, start_cod);
  } else {
    acc.set_note("sampled families");
    visit({}, start_dom, start_cod);
    for_each_family(k, limits, [&](ElementSet F) {
      if (acc.failed()) return;
      int s = start_dom, t = start_cod;
      for (int i : F) {
        s = combine(c.SL, s, c.dom_gen[i]);
        t = combine(c.SM, t, c.cod_gen[i]);
      }
      visit(F, s, t);
    });
  }
  return acc.result();
}

Condition element_condition(std::string name, const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M,
                            bool closed_gens) {
  Condition c{std::move(name), *L.sublocales, *M.sublocales, {}, {}, closed_gens, {}};
  for (int x = 0; x < L.frame->size(); ++x) {
    c.dom_gen.push_back(closed_gens ? L.sublocales->closed(x) : L.sublocales->open(x));
    c.cod_gen.push_back(closed_gens ? M.sublocales->closed(f(x)) : M.sublocales->open(f(x)));
  }
  c.label = [&L](int x) { return L.frame->label(x); };
  return c;
}

std::string note_join(std::string a, const std::string& b) {
  if (a.empty()) return b;
  return a + "; " + b;
}

}  // namespace

CheckOutcome check_WDc(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  CheckOutcome out = evaluate(element_condition("WDc", f, L, M, true), lift_sweep_limits());
  out.note = note_join(out.note, "finite-trivial");
  return out;
}

CheckOutcome check_WDo(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  CheckOutcome out = evaluate(element_condition("WDo", f, L, M, false), lift_sweep_limits());
  out.note = note_join(out.note, "finite-trivial");
  return out;
}

CheckOutcome check_WDs(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  // c(x) ∨ o(y) is the complement of c(y) ∩ o(x), so the generators are
  // indexed by the canonical pair p = lc(y, x) and read o(p.a) ∨ c(p.b).
  const LcSemilattice& LC = L.lc();
  const SublocaleLattice& SL = *L.sublocales;
  const SublocaleLattice& SM = *M.sublocales;
  Condition c{"WDs", SL, SM, {}, {}, false, {}};
  for (const LcPair& p : LC.pairs()) {
    c.dom_gen.push_back(SL.join(SL.open(p.a), SL.closed(p.b)));
    c.cod_gen.push_back(SM.join(SM.open(f(p.a)), SM.closed(f(p.b))));
  }
  c.label = [&](int i) { return "c(" + L.frame->label(LC[i].b) + ") ∨ o(" + L.frame->label(LC[i].a) + ")"; };
  return evaluate(c, lift_sweep_limits());
}

CheckOutcome check_WDb(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  const LcSemilattice& LC = L.lc();
  const SublocaleLattice& SM = *M.sublocales;
  Condition c{"WDb", *L.sublocales, SM, {}, {}, true, {}};
  for (const LcPair& p : LC.pairs()) {
    c.dom_gen.push_back(locally_closed_sublocale(*L.sublocales, p));
    c.cod_gen.push_back(SM.locally_closed(f(p.a), f(p.b)));
  }
  c.label = [&](int i) { return LC.label(i); };
  return evaluate(c, lift_sweep_limits());
}

bool is_strongly_exact_meet(const SublocaleLattice& SL, ElementSet family) {
  int acc = SL.top();
  for (int x : family) acc = SL.meet(acc, SL.open(x));
  return acc == SL.open(SL.frame().meet_of(family));
}

CheckOutcome check_strongly_exact_preserved(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  CheckAccumulator acc("strongly_exact_meets_preserved", "finite-trivial");
  const FiniteFrame& A = *L.frame;
  const FiniteFrame& B = *M.frame;
  for_each_subset(A.all(), [&](ElementSet F) {
    if (acc.failed()) return;
    const bool strongly = is_strongly_exact_meet(*L.sublocales, F);
    acc.expect(strongly, [&] { return "not strongly exact: " + A.label(F); });
    if (!strongly) return;
    ElementSet image;
    for (int x : F) image.insert(f(x));
    acc.expect(f(A.meet_of(F)) == B.meet_of(image) && is_strongly_exact_meet(*M.sublocales, image),
               [&] { return A.label(F); });
  });
  return acc.result();
}

CheckOutcome is_locally_exact_morphism(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  CheckOutcome out{"locally_exact", true, {}, {}};
  try {
    const JoinHom h = lc_hom(f, L.lc(), M.lc());
    if (auto bad = admissibility_violation(h, lift_sweep_limits())) {
      out.passed = false;
      out.witness = to_string(bad->mode) + " on " + L.lc().semilattice().label(bad->family);
    }
  } catch (const Error& e) {
    out.passed = false;
    out.witness = e.what();
  }
  if (L.lc().size() > lift_sweep_limits().exhaustive_up_to) out.note = "sampled families";
  return out;
}

namespace {

SbLift assemble_sb_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  const SublocaleLattice& SL = *L.sublocales;
  const SublocaleLattice& SM = *M.sublocales;
  const Correspondence& CL = *L.smooth;
  const LcSemilattice& LC = L.lc();

  SbLift lift;
  lift.table.assign(SL.size(), -1);
  for (int s : CL.collection()) {
    int acc = SM.bottom();
    for (int p : CL.phi(s)) acc = SM.join(acc, SM.locally_closed(f(LC[p].a), f(LC[p].b)));
    lift.table[s] = acc;
  }

  const std::vector<int>& bl = CL.collection();
  const LatticeTables& tl = L.sb_tables;
  const LatticeTables& tm = M.sb_tables;
  auto img = [&](int i) { return M.sb_pos[lift.table[bl[i]]]; };
  lift.frame_map = true;
  for (int i = 0; i < tl.n && lift.frame_map; ++i)
    if (img(i) < 0) lift.frame_map = false;
  lift.frame_map = lift.frame_map && img(tl.bottom) == tm.bottom && img(tl.top) == tm.top;
  for (int i = 0; i < tl.n && lift.frame_map; ++i)
    for (int j = i; j < tl.n; ++j)
      if (img(tl.meet_of(i, j)) != tm.meet_of(img(i), img(j)) || img(tl.join_of(i, j)) != tm.join_of(img(i), img(j))) {
        lift.frame_map = false;
        break;
      }

  lift.square = true;
  for (int x = 0; x < L.frame->size(); ++x)
    lift.square = lift.square && lift.table[SL.open(x)] == SM.open(f(x)) && lift.table[SL.closed(x)] == SM.closed(f(x));

  try {
    const JoinHom h = lc_hom(f, LC, M.lc());
    const AUMap au = lift_AU(h, CL.au(), M.smooth->au(), lift_sweep_limits());
    lift.matches_au = true;
    for (int s : bl)
      lift.matches_au = lift.matches_au && M.sublocale_of_au[au.table[L.au_of_sublocale[s]]] == lift.table[s];
  } catch (const Error&) {
    lift.matches_au = false;
  }
  return lift;
}

}  // namespace

SbLift build_sb_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  const CheckOutcome wdb = check_WDb(f, L, M);
  if (!wdb.passed) throw NoLift(wdb.witness);
  return assemble_sb_lift(f, L, M);
}

namespace {

CollectionLift collection_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M, bool closed) {
  const SublocaleLattice& SL = *L.sublocales;
  const SublocaleLattice& SM = *M.sublocales;
  auto gen = [closed](const SublocaleLattice& S, Element a) { return closed ? S.closed(a) : S.open(a); };
  CollectionLift lift;
  lift.dom = closed ? closed_joins(SL) : open_meets(SL);
  lift.cod = closed ? closed_joins(SM) : open_meets(SM);
  lift.table.assign(SL.size(), -1);
  for (int s : lift.dom) {
    int acc = closed ? SM.bottom() : SM.top();
    for (int a = 0; a < L.frame->size(); ++a) {
      const int g = gen(SL, a);
      if (closed && SL.leq(g, s)) acc = SM.join(acc, gen(SM, f(a)));
      if (!closed && SL.leq(s, g)) acc = SM.meet(acc, gen(SM, f(a)));
    }
    lift.table[s] = acc;
  }

  std::vector<int> pos(SM.size(), -1);
  for (int i = 0; i < static_cast<int>(lift.cod.size()); ++i) pos[lift.cod[i]] = i;
  const LatticeTables tl = collection_tables(SL, lift.dom);
  const LatticeTables tm = collection_tables(SM, lift.cod);
  auto img = [&](int i) { return pos[lift.table[lift.dom[i]]]; };
  lift.lattice_map = true;
  for (int i = 0; i < tl.n; ++i) lift.lattice_map = lift.lattice_map && img(i) >= 0;
  lift.lattice_map = lift.lattice_map && img(tl.bottom) == tm.bottom && img(tl.top) == tm.top;
  for (int i = 0; i < tl.n && lift.lattice_map; ++i)
    for (int j = i; j < tl.n; ++j)
      if (img(tl.meet_of(i, j)) != tm.meet_of(img(i), img(j)) || img(tl.join_of(i, j)) != tm.join_of(img(i), img(j))) {
        lift.lattice_map = false;
        break;
      }
  lift.square = true;
  for (int a = 0; a < L.frame->size(); ++a) lift.square = lift.square && lift.table[gen(SL, a)] == gen(SM, f(a));
  return lift;
}

}  // namespace

CollectionLift build_sc_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  const CheckOutcome wd = check_WDc(f, L, M);
  if (!wd.passed) throw NoLift(wd.witness);
  return collection_lift(f, L, M, true);
}

CollectionLift build_so_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  const CheckOutcome wd = check_WDo(f, L, M);
  if (!wd.passed) throw NoLift(wd.witness);
  return collection_lift(f, L, M, false);
}

std::optional<std::size_t> count_sb_lifts(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M,
                                          int cap) {
  const std::vector<int>& bl = L.smooth->collection();
  if (static_cast<int>(bl.size()) > cap) return std::nullopt;
  const SublocaleLattice& SL = *L.sublocales;
  const SublocaleLattice& SM = *M.sublocales;
  const std::vector<int>& pos_l = L.sb_pos;
  const std::vector<int>& pos_m = M.sb_pos;
  HomSearch search;
  search.prefilled.assign(bl.size(), -1);
  for (int x = 0; x < L.frame->size(); ++x) {
    const int from = pos_l[SL.open(x)], to = pos_m[SM.open(f(x))];
    if (from < 0 || to < 0) return 0;
    if (search.prefilled[from] >= 0 && search.prefilled[from] != to) return 0;
    search.prefilled[from] = to;
  }
  return enumerate_homomorphisms(L.sb_tables, M.sb_tables, search,
                                 [](const std::vector<Element>&) {});
}

CheckList check_s_lift(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  CheckList out{check_WDs(f, L, M)};
  const SublocaleLattice& SL = *L.sublocales;
  const SublocaleLattice& SM = *M.sublocales;
  const int n = L.frame->size();

  std::vector<int> image(SL.size());
  for (int s = 0; s < SL.size(); ++s) {
    int acc = SM.top();
    for (auto [x, y] : zero_dim_decomposition(SL, s)) acc = SM.meet(acc, SM.join(SM.open(f(x)), SM.closed(f(y))));
    image[s] = acc;
  }
  CheckAccumulator acc("s_lift_generator_assignment");
  std::vector<int> gens;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int g = SL.join(SL.open(x), SL.closed(y));
      gens.push_back(g);
      acc.expect(image[g] == SM.join(SM.open(f(x)), SM.closed(f(y))),
                 [&] { return "o(" + L.frame->label(x) + ") ∨ c(" + L.frame->label(y) + ") not well defined"; });
    }
  for (int s = 0; s < SL.size(); ++s)
    for (int t = 0; t < SL.size(); ++t)
      if (SL.leq(s, t)) acc.expect(SM.leq(image[s], image[t]), [&] { return "not monotone at " + SL.label(s) + " ⊆ " + SL.label(t); });
  for (int g : gens)
    for (int h : gens)
      acc.expect(image[SL.meet(g, h)] == SM.meet(image[g], image[h]),
                 [&] { return "meet of " + SL.label(g) + " and " + SL.label(h) + " not preserved"; });
  out.push_back(acc.result());
  return out;
}

CheckOutcome check_lc_equivariance(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  CheckAccumulator acc("lc_commutes_with_f");
  const FiniteFrame& A = *L.frame;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      acc.expect(lc_normalize(*M.frame, f(a), f(b)) == lc_image(f, lc_normalize(A, a, b)),
                 [&] { return lc_label(A, {a, b}); });
  return acc.result();
}

CheckOutcome verify_wd_link(const FrameAnalysis& L, const SweepLimits& limits) {
  const FiniteFrame& A = *L.frame;
  const SublocaleLattice& SL = *L.sublocales;
  const LcSemilattice& LC = L.lc();
  const int n = A.size();
  CheckAccumulator acc("wd_link");

  auto check_family = [&](const std::vector<LcPair>& family) {
    int s = SL.bottom();
    ElementSet gens;
    for (const LcPair& p : family) {
      s = SL.join(s, SL.locally_closed(p.a, p.b));
      gens.insert(LC.normalized(p.a, p.b));
    }
    const ElementSet closure = admissible_closure(LC.semilattice(), up_closure(LC.semilattice(), gens));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const bool contained = SL.leq(SL.locally_closed(x, y), s);
        acc.expect(contained == closure.contains(LC.normalized(x, y)), [&] {
          std::string fam;
          for (const LcPair& p : family) fam += (fam.empty() ? "" : ", ") + lc_label(A, p);
          return lc_label(A, {x, y}) + " against {" + fam + "}";
        });
      }
  };

  std::vector<LcPair> all_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) all_pairs.push_back({a, b});
  const int m = static_cast<int>(all_pairs.size());
  for (int i = 0; i < m && !acc.failed(); ++i) {
    check_family({all_pairs[i]});
    if (n <= 8)
      for (int j = i + 1; j < m && !acc.failed(); ++j) check_family({all_pairs[i], all_pairs[j]});
  }
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<int> pick(0, m - 1), size(2, 4);
  for (int i = 0; i < limits.samples && !acc.failed(); ++i) {
    std::vector<LcPair> family(size(rng));
    for (LcPair& p : family) p = all_pairs[pick(rng)];
    check_family(family);
  }
  if (n > 8) acc.set_note("sampled families");
  return acc.result();
}

MorphismVerdict verify_morphism(const FrameMorphism& f, const FrameAnalysis& L, const FrameAnalysis& M) {
  MorphismVerdict v;
  v.checks.push_back(check_WDc(f, L, M));
  v.checks.push_back(check_WDo(f, L, M));
  v.checks.push_back(check_strongly_exact_preserved(f, L, M));
  v.checks.push_back(check_lc_equivariance(f, L, M));
  for (auto& c : check_s_lift(f, L, M)) v.checks.push_back(std::move(c));

  const CheckOutcome wdb = check_WDb(f, L, M);
  const CheckOutcome le = is_locally_exact_morphism(f, L, M);
  v.wdb = wdb.passed;
  v.locally_exact = le.passed;

  CheckOutcome built{"sb_lift_verified", true, {}, {}};
  if (v.wdb) {
    const SbLift lift = assemble_sb_lift(f, L, M);
    v.lifts = true;
    built.passed = lift.verified();
    if (!built.passed)
      built.witness = std::string("frame_map=") + (lift.frame_map ? "1" : "0") + " square=" + (lift.square ? "1" : "0") +
                      " matches_au=" + (lift.matches_au ? "1" : "0");
  } else {
    built.note = "no lift";
  }

  CheckOutcome equivalence{"lift_equivalence", v.wdb == v.locally_exact && v.wdb == v.lifts, {}, {}};
  equivalence.note = v.wdb ? "WDb holds" : "WDb fails: " + wdb.witness;
  if (!equivalence.passed)
    equivalence.witness = std::string("WDb=") + (v.wdb ? "1" : "0") + " locally_exact=" + (v.locally_exact ? "1" : "0") +
                          " lifts=" + (v.lifts ? "1" : "0") + (le.witness.empty() ? "" : " (" + le.witness + ")");

  CheckOutcome unique{"sb_lift_unique", true, {}, {}};
  if (auto count = count_sb_lifts(f, L, M)) {
    unique.passed = *count == (v.lifts ? 1U : 0U);
    if (!unique.passed) unique.witness = std::to_string(*count) + " frame maps make the square commute";
  } else {
    unique.note = "skipped: |S_b| > 16";
  }
  v.checks.push_back(std::move(equivalence));
  v.checks.push_back(std::move(built));
  v.checks.push_back(std::move(unique));
  return v;
}

}  // namespace smoothloc
