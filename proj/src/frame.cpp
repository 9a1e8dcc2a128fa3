#include "smoothloc/frame.hpp"

#include <map>

#include "smoothloc/errors.hpp"

namespace smoothloc {

Element FiniteFrame::meet_of(ElementSet s) const {
  Element m = top();
  for (int x : s) m = meet(m, x);
  return m;
}

Element FiniteFrame::join_of(ElementSet s) const {
  Element j = bottom();
  for (int x : s) j = join(j, x);
  return j;
}

std::string FiniteFrame::label(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += label(x);
    first = false;
  }
  return out + "}";
}

FiniteFrame build_frame(const FinitePoset& poset, std::string name) {
  if (poset.size() == 0) throw InvalidPoset("a frame needs at least one element");
  FiniteFrame f;
  f.name_ = std::move(name);
  f.poset_ = poset;
  f.tables_ = lattice_tables(poset);
  if (auto w = distributivity_violation(f.tables_)) throw NotDistributive(*w);
  const int n = f.tables_.n;
  f.arrow_.resize(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // In a finite distributive lattice the join of all c with c∧a <= b
      // again satisfies the inequality, so it is the maximum.
      Element best = f.tables_.bottom;
      for (int c = 0; c < n; ++c)
        if (poset.leq(f.tables_.meet_of(c, a), b)) best = f.tables_.join_of(best, c);
      f.arrow_[a * n + b] = best;
    }
  }
  return f;
}

Element heyting(const FiniteFrame& frame, Element a, Element b) { return frame.arrow(a, b); }

Element pseudocomplement(const FiniteFrame& frame, Element a) { return frame.pseudocomplement(a); }

bool LawReport::all_passed() const {
  for (const auto& l : laws)
    if (!l.passed) return false;
  return true;
}

namespace {

class LawChecker {
 public:
  explicit LawChecker(const FiniteFrame& f) : f_(f) {}

  LawReport run() {
    const int n = f_.size();
    const Element one = f_.top();
    auto imp = [&](Element a, Element b) { return f_.arrow(a, b); };
    auto mt = [&](Element a, Element b) { return f_.meet(a, b); };
    auto jn = [&](Element a, Element b) { return f_.join(a, b); };

    for (int a = 0; a < n; ++a) check("H1", imp(one, a) == a, {a});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        check("H2", f_.leq(a, b) == (imp(a, b) == one), {a, b});
        check("H3", f_.leq(a, imp(b, a)), {a, b});
        check("H4", imp(a, b) == imp(a, mt(a, b)), {a, b});
        check("H5", mt(a, imp(a, b)) == mt(a, b), {a, b});
        check("H8", a == mt(jn(a, b), imp(b, a)), {a, b});
        check("H9", f_.leq(a, imp(imp(a, b), b)), {a, b});
        check("H10", imp(imp(imp(a, b), b), b) == imp(a, b), {a, b});
        for (int c = 0; c < n; ++c) {
          check("H6", (mt(a, b) == mt(a, c)) == (imp(a, b) == imp(a, c)), {a, b, c});
          const Element lhs = imp(mt(a, b), c);
          check("H7", lhs == imp(a, imp(b, c)) && lhs == imp(b, imp(a, c)), {a, b, c});
        }
      }
    for_each_subset(f_.all(), [&](ElementSet family) {
      const Element j = f_.join_of(family);
      const Element m = f_.meet_of(family);
      for (int b = 0; b < n; ++b) {
        Element rhs11 = one, rhs12 = one;
        for (int a : family) {
          rhs11 = mt(rhs11, imp(a, b));
          rhs12 = mt(rhs12, imp(b, a));
        }
        if (imp(j, b) != rhs11) fail_family("H11", b, family);
        if (imp(b, m) != rhs12) fail_family("H12", b, family);
      }
    });

    LawReport report;
    for (int i = 1; i <= 12; ++i) {
      const std::string name = "H" + std::to_string(i);
      auto it = failures_.find(name);
      report.laws.push_back(it == failures_.end() ? LawResult{name, true, {}} : it->second);
    }
    return report;
  }

 private:
  void check(const char* law, bool ok, std::vector<Element> witness) {
    if (ok || failures_.count(law)) return;
    failures_[law] = LawResult{law, false, std::move(witness)};
  }
  void fail_family(const char* law, Element b, ElementSet family) {
    if (failures_.count(law)) return;
    std::vector<Element> w{b};
    for (int a : family) w.push_back(a);
    failures_[law] = LawResult{law, false, std::move(w)};
  }

  const FiniteFrame& f_;
  std::map<std::string, LawResult> failures_;
};

}  // namespace

LawReport verify_heyting_laws(const FiniteFrame& frame) { return LawChecker(frame).run(); }

FrameMorphism::FrameMorphism(std::shared_ptr<const FiniteFrame> dom, std::shared_ptr<const FiniteFrame> cod,
                             std::vector<Element> map, std::string name)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)), name_(std::move(name)) {
  const auto& L = *dom_;
  const auto& M = *cod_;
  if (static_cast<int>(map_.size()) != L.size())
    throw Error("morphism table has " + std::to_string(map_.size()) + " entries, domain has " +
                std::to_string(L.size()));
  for (Element v : map_)
    if (v < 0 || v >= M.size()) throw Error("morphism value " + std::to_string(v) + " out of range");
  if (map_[L.bottom()] != M.bottom()) throw Error("morphism does not preserve 0");
  if (map_[L.top()] != M.top()) throw Error("morphism does not preserve 1");
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (map_[L.meet(a, b)] != M.meet(map_[a], map_[b]))
        throw Error("morphism does not preserve the meet of " + L.label(a) + " and " + L.label(b));
      if (map_[L.join(a, b)] != M.join(map_[a], map_[b]))
        throw Error("morphism does not preserve the join of " + L.label(a) + " and " + L.label(b));
    }
}

FrameMorphism FrameMorphism::identity(std::shared_ptr<const FiniteFrame> frame) {
  std::vector<Element> map(frame->size());
  for (int i = 0; i < frame->size(); ++i) map[i] = i;
  auto name = "id_" + frame->name();
  return FrameMorphism(frame, frame, std::move(map), std::move(name));
}

}  // namespace smoothloc
