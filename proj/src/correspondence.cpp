#include "smoothloc/correspondence.hpp"

#include <random>
#include <set>
#include <sstream>

namespace smoothloc {

std::string to_string(Flavor flavor) { return flavor == Flavor::Closed ? "closed" : "smooth"; }

Correspondence::Correspondence(std::shared_ptr<const SublocaleLattice> SL, Flavor flavor)
    : SL_(std::move(SL)), flavor_(flavor) {
  const FiniteFrame& L = SL_->frame();
  if (flavor_ == Flavor::Closed) {
    index_ = std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(L.poset(), L.name()));
    for (int a = 0; a < L.size(); ++a) generator_.push_back(SL_->closed(a));
    collection_ = closed_joins(*SL_);
  } else {
    lc_ = std::make_shared<const LcSemilattice>(SL_->frame_ptr());
    index_ = lc_->semilattice_ptr();
    for (const LcPair& p : lc_->pairs()) generator_.push_back(locally_closed_sublocale(*SL_, p));
    collection_ = smooth_sublocales(*SL_);
  }
  au_ = std::make_shared<const AUFrame>(index_);
}

ElementSet Correspondence::phi(int s) const {
  ElementSet out;
  for (int i = 0; i < index_->size(); ++i)
    if (SL_->leq(generator_[i], s)) out.insert(i);
  return out;
}

int Correspondence::psi(ElementSet u) const {
  int acc = SL_->bottom();
  for (int i : u) acc = SL_->join(acc, generator_[i]);
  return acc;
}

std::pair<std::vector<ElementSet>, bool> index_upper_sets(const JoinSemilattice& S, const SweepLimits& limits) {
  if (S.size() <= 20) return {enumerate_upper_sets(S), true};
  std::set<ElementSet> sample;
  for (int x = 0; x < S.size(); ++x) sample.insert(S.up(x));
  std::mt19937_64 rng(limits.seed);
  for (int i = 0; i < limits.samples; ++i) {
    // Sparse random generators so the samples are not all nearly everything.
    const ElementSet gens = ElementSet(rng() & rng() & rng()) & S.all();
    sample.insert(up_closure(S, gens) | S.up(S.top()));
  }
  return {{sample.begin(), sample.end()}, false};
}

CheckList verify_fixpoints(const Correspondence& corr, const SweepLimits& limits) {
  const SublocaleLattice& SL = corr.sublocales();
  const JoinSemilattice& S = corr.index();
  const auto [upsets, exhaustive] = index_upper_sets(S, limits);
  auto label_u = [&](ElementSet u) { return S.label(u); };

  CheckAccumulator adjunction("adjunction");
  CheckAccumulator closure_eq("phi_psi_is_admissible_closure");
  CheckAccumulator fixpoints("fixpoints_are_admissible");
  for (ElementSet u : upsets) {
    const int p = corr.psi(u);
    for (int s = 0; s < SL.size(); ++s)
      adjunction.expect(SL.leq(p, s) == u.subset_of(corr.phi(s)), [&] { return label_u(u) + " vs " + SL.label(s); });
    const ElementSet pp = corr.phi(p);
    closure_eq.expect(u.subset_of(pp) && pp == admissible_closure(S, u), [&] { return label_u(u); });
    fixpoints.expect((pp == u) == is_admissible_upper_set(S, u), [&] { return label_u(u); });
  }
  if (!exhaustive)
    for (auto* acc : {&adjunction, &closure_eq, &fixpoints}) acc->set_note("sampled upper sets");

  CheckAccumulator retract("psi_phi_identity");
  const std::set<int> members(corr.collection().begin(), corr.collection().end());
  for (int s = 0; s < SL.size(); ++s) {
    const int back = corr.psi(corr.phi(s));
    retract.expect(SL.leq(back, s) && (!members.count(s) || back == s), [&] { return SL.label(s); });
  }

  CheckAccumulator generators("generators_map_to_principal");
  for (int i = 0; i < S.size(); ++i)
    generators.expect(corr.phi(corr.generator(i)) == S.up(i), [&] { return S.label(i); });

  CheckList out{adjunction.result(), closure_eq.result(), fixpoints.result(), retract.result(), generators.result()};
  for (auto& c : out) c.check = to_string(corr.flavor()) + "_" + c.check;
  return out;
}

IsoTable build_iso(const Correspondence& corr) {
  const SublocaleLattice& SL = corr.sublocales();
  const AUFrame& au = *corr.au();
  const std::vector<int>& coll = corr.collection();
  if (static_cast<int>(coll.size()) != au.size())
    throw IsoFailure("|collection| = " + std::to_string(coll.size()) + " but |AU| = " + std::to_string(au.size()));
  IsoTable table;
  std::vector<bool> hit(au.size(), false);
  for (int s : coll) {
    const ElementSet u = corr.phi(s);
    auto id = au.find(u);
    if (!id) throw IsoFailure("φ(" + SL.label(s) + ") = " + corr.index().label(u) + " is not admissible");
    if (hit[*id]) throw IsoFailure("φ is not injective at " + SL.label(s));
    hit[*id] = true;
    if (corr.psi(u) != s) throw IsoFailure("ψ(φ(" + SL.label(s) + ")) differs");
    table.rows.emplace_back(s, *id);
  }
  for (const auto& [s, u] : table.rows)
    for (const auto& [t, v] : table.rows)
      if (SL.leq(s, t) != au.leq(u, v))
        throw IsoFailure("order not preserved between " + SL.label(s) + " and " + SL.label(t));
  // The generators go where the embedding ↑ sends their index.
  for (int i = 0; i < corr.index().size(); ++i)
    if (corr.phi(corr.generator(i)) != au[au.principal(i)])
      throw IsoFailure("generator " + corr.index().label(i) + " is not sent to its principal upper set");
  return table;
}

std::string format_iso(const Correspondence& corr, const IsoTable& table) {
  std::ostringstream out;
  for (const auto& [s, u] : table.rows)
    out << corr.sublocales().label(s) << '\t' << corr.au()->label(u) << '\n';
  return out.str();
}

CheckOutcome exact_iff_closed_check(const SublocaleLattice& SL) {
  const FiniteFrame& L = SL.frame();
  const JoinSemilattice S = JoinSemilattice::from_poset(L.poset(), L.name());
  std::vector<bool> is_closed(SL.size(), false);
  for (int a = 0; a < L.size(); ++a) is_closed[SL.closed(a)] = true;
  CheckAccumulator acc("exact_iff_closed", "finite-trivial");
  for_each_subset(L.all(), [&](ElementSet F) {
    if (F.empty()) return;
    int j = SL.bottom();
    for (int a : F) j = SL.join(j, SL.closed(a));
    const bool exact = is_admissible_family(S, F);
    acc.expect(exact == is_closed[j] && exact, [&] { return L.label(F); });
  });
  return acc.result();
}

CheckList psi_detection_check(const SublocaleLattice& SL, const LcSemilattice& LC, const SweepLimits& limits) {
  CheckAccumulator detect("psi_detects_admissible_meets");
  const bool exhaustive = for_each_family(LC.size(), limits, [&](ElementSet F) {
    const auto meet = LC.semilattice().meet_of(F);
    if (!meet) return;
    const bool preserved = locally_closed_sublocale(SL, LC[*meet]) == family_sublocale(SL, LC, F);
    detect.expect(preserved == is_admissible_family(LC.semilattice(), F), [&] { return LC.semilattice().label(F); });
  });
  if (!exhaustive) detect.set_note("sampled families");

  CheckAccumulator hyp("psi_detection_hypotheses");
  for (int p = 0; p < LC.size(); ++p) {
    const int g = locally_closed_sublocale(SL, LC[p]);
    const int gc = SL.supplement(g);
    hyp.expect(SL.meet(g, gc) == SL.bottom() && SL.join(g, gc) == SL.top(), [&] { return LC.label(p) + " not complemented"; });
    for (int q = 0; q < LC.size(); ++q)
      hyp.expect(SL.meet(g, locally_closed_sublocale(SL, LC[q])) == locally_closed_sublocale(SL, LC[LC.join(p, q)]),
                 [&] { return LC.label(p) + ", " + LC.label(q) + " meet not preserved"; });
  }
  for (int s = 0; s < SL.size(); ++s) {
    int acc = SL.top();
    for (int u = 0; u < LC.size(); ++u)
      for (int v = 0; v < LC.size(); ++v) {
        const int bound = SL.join(locally_closed_sublocale(SL, LC[u]), SL.supplement(locally_closed_sublocale(SL, LC[v])));
        if (SL.leq(s, bound)) acc = SL.meet(acc, bound);
      }
    hyp.expect(acc == s, [&] { return SL.label(s) + " not generated"; });
  }
  return {detect.result(), hyp.result()};
}

}  // namespace smoothloc
