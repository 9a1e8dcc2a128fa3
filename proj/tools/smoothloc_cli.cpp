// Command-line front end. Exit status: 0 success, 1 a check failed or the
// input is not the structure it claims to be, 2 unreadable input or usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smoothloc/correspondence.hpp"
#include "smoothloc/lc.hpp"
#include "smoothloc/lift.hpp"
#include "smoothloc/loading.hpp"
#include "smoothloc/sublocale.hpp"
#include "smoothloc/suite.hpp"

using namespace smoothloc;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string pad(std::string s, std::size_t width) {
  // Labels contain multi-byte symbols, so count code points rather than bytes.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

std::string describe(const SublocaleLattice& SL, int s) {
  const FiniteFrame& L = SL.frame();
  if (auto w = is_locally_closed(SL, s)) {
    if (w->b == L.top()) return "c(" + L.label(w->a) + ")";
    if (w->a == L.bottom()) return "o(" + L.label(w->b) + ")";
    return "c(" + L.label(w->a) + ") ∩ o(" + L.label(w->b) + ")";
  }
  return "not locally closed";
}

void print_checks(const CheckList& checks, std::ostream& out) {
  for (const CheckOutcome& c : checks) {
    out << "  " << pad(c.check, 44) << status_of(c);
    if (!c.witness.empty()) out << "  witness: " << c.witness;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << '\n';
  }
}

int cmd_validate(const std::string& ref) {
  const NamedPoset np = resolve_poset(ref);
  std::shared_ptr<const FiniteFrame> L;
  try {
    L = std::make_shared<const FiniteFrame>(build_frame(np.poset, np.name));
  } catch (const NotALattice& e) {
    std::cout << "not a lattice: " << np.poset.label(e.first()) << " and " << np.poset.label(e.second())
              << " lack a meet or a join\n";
    return kCheckFailed;
  } catch (const NotDistributive& e) {
    const auto [x, y, z] = e.witness();
    const auto l = [&](int i) { return np.poset.label(i); };
    std::cout << "not distributive: " << l(x) << " ∧ (" << l(y) << " ∨ " << l(z) << ") ≠ (" << l(x) << " ∧ " << l(y)
              << ") ∨ (" << l(x) << " ∧ " << l(z) << ")\n";
    return kCheckFailed;
  }
  std::cout << "frame " << L->name() << ": " << L->size() << " elements, distributive\n";
  const LawReport laws = verify_heyting_laws(*L);
  int held = 0;
  for (const LawResult& r : laws.laws) held += r.passed;
  std::cout << "Heyting laws: " << held << " of " << laws.laws.size() << " hold\n";
  for (const LawResult& r : laws.laws) {
    if (r.passed) continue;
    std::cout << "  " << r.law << " fails at (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? ", " : "") << L->label(r.witness[i]);
    std::cout << ")\n";
  }
  return laws.all_passed() ? kOk : kCheckFailed;
}

int cmd_sublocales(const std::string& ref, const std::string& which) {
  auto L = load_frame(ref);
  const SublocaleLattice SL(L);
  std::vector<int> ids;
  std::string noun;
  if (which == "all") {
    for (int s = 0; s < SL.size(); ++s) ids.push_back(s);
    noun = "sublocales";
  } else if (which == "smooth") {
    ids = smooth_sublocales(SL);
    noun = "smooth sublocales";
  } else if (which == "closed-joins") {
    ids = closed_joins(SL);
    noun = "joins of closed sublocales";
  } else {
    ids = open_meets(SL);
    noun = "intersections of open sublocales";
  }
  std::cout << ids.size() << ' ' << noun << '\n';
  for (int s : ids) std::cout << "  " << pad(SL.label(s), 24) << describe(SL, s) << '\n';
  return kOk;
}

int cmd_lc(const std::string& ref) {
  auto L = load_frame(ref);
  auto SL = std::make_shared<const SublocaleLattice>(L);
  const LcSemilattice LC(L);
  std::cout << LC.size() << " locally closed pairs\n";
  for (int p = 0; p < LC.size(); ++p)
    std::cout << "  " << pad(LC.label(p), 12) << SL->label(locally_closed_sublocale(*SL, LC[p])) << '\n';
  std::cout << "covers (lower ⊏ upper)\n";
  for (auto [i, j] : LC.semilattice().poset().covers())
    std::cout << "  " << LC.label(i) << " ⊏ " << LC.label(j) << '\n';
  return kOk;
}

int cmd_bruns_lakser(const std::string& ref) {
  auto S = load_semilattice(ref);
  const AUFrame au(S);
  std::cout << "semilattice " << S->name() << ": " << S->size() << " elements\n";
  std::cout << "AU: " << au.size() << " admissible upper sets\n";
  for (int u = 0; u < au.size(); ++u) std::cout << "  " << au.label(u) << '\n';
  const CheckList checks = verify_bruns_lakser(*S, au);
  std::cout << "checks\n";
  print_checks(checks, std::cout);
  return all_passed(checks) ? kOk : kCheckFailed;
}

int cmd_iso(const std::string& ref, const std::string& flavor) {
  auto L = load_frame(ref);
  auto SL = std::make_shared<const SublocaleLattice>(L);
  const Correspondence corr(SL, flavor == "closed" ? Flavor::Closed : Flavor::Smooth);
  const std::string head = flavor == "closed" ? "S_c ≅ AU(L)" : "S_b ≅ AU(LC)";
  try {
    const IsoTable table = build_iso(corr);
    std::cout << head << ": " << corr.collection().size() << " ↔ " << corr.au()->size() << ", verified\n";
    std::cout << format_iso(corr, table);
    return kOk;
  } catch (const IsoFailure& e) {
    std::cout << head << ": " << corr.collection().size() << " ↔ " << corr.au()->size() << ", failed: " << e.what()
              << '\n';
    return kCheckFailed;
  }
}

void print_table(const SublocaleLattice& SL, const SublocaleLattice& SM, const std::vector<int>& dom,
                 const std::vector<int>& table) {
  for (int s : dom) std::cout << "  " << pad(SL.label(s), 24) << "↦ " << SM.label(table[s]) << '\n';
}

int cmd_lift(const std::string& path, const std::string& target) {
  const FrameMorphism f = load_morphism(path);
  const auto L = FrameAnalysis::of(f.dom_ptr());
  const auto M = FrameAnalysis::of(f.cod_ptr());
  const SublocaleLattice& SL = *L->sublocales;
  const SublocaleLattice& SM = *M->sublocales;
  std::cout << "morphism " << f.name() << ": " << f.dom().name() << " → " << f.cod().name() << '\n';

  if (target == "sb") {
    const CheckOutcome wdb = check_WDb(f, *L, *M);
    const CheckOutcome le = is_locally_exact_morphism(f, *L, *M);
    if (!wdb.passed) {
      std::cout << "no lift: WDb fails on " << wdb.witness << '\n';
      std::cout << "locally exact: " << (le.passed ? "yes" : "no") << '\n';
      return le.passed ? kCheckFailed : kOk;
    }
    const SbLift lift = build_sb_lift(f, *L, *M);
    if (!le.passed || !lift.verified()) {
      std::cout << "lift exists; verification failed (frame map " << lift.frame_map << ", square " << lift.square
                << ", matches AU " << lift.matches_au << ", locally exact " << le.passed << ")\n";
      return kCheckFailed;
    }
    std::cout << "lift exists; verified\n";
    print_table(SL, SM, L->smooth->collection(), lift.table);
    return kOk;
  }
  if (target == "sc" || target == "so") {
    try {
      const CollectionLift lift = target == "sc" ? build_sc_lift(f, *L, *M) : build_so_lift(f, *L, *M);
      if (!lift.verified()) {
        std::cout << "lift exists; verification failed (lattice map " << lift.lattice_map << ", square "
                  << lift.square << ")\n";
        return kCheckFailed;
      }
      std::cout << "lift exists; verified\n";
      print_table(SL, SM, lift.dom, lift.table);
      return kOk;
    } catch (const NoLift& e) {
      std::cout << "no lift: " << (target == "sc" ? "WDc" : "WDo") << " fails on " << e.witness() << '\n';
      return kOk;
    }
  }
  const CheckList checks = check_s_lift(f, *L, *M);
  std::cout << (all_passed(checks) ? "generator assignment well defined; verified\n"
                                   : "generator assignment not verified\n");
  print_checks(checks, std::cout);
  return all_passed(checks) ? kOk : kCheckFailed;
}

struct VerifyArgs {
  int max_size = 8;
  std::uint64_t seed = CorpusSpec{}.seed;
  std::string out;
  std::string manifest;
  std::vector<std::string> modules;
  int threads = 0;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions options;
  options.corpus.max_frame_size = a.max_size;
  options.corpus.max_morphism_frame_size = std::min(a.max_size, options.corpus.max_morphism_frame_size);
  options.corpus.max_semilattice_size = std::min(a.max_size, options.corpus.max_semilattice_size);
  options.corpus.seed = a.seed;
  options.corpus.families.seed = a.seed;
  options.modules = a.modules;
  options.threads = a.threads;
  const SuiteReport report = run_suite(options);

  std::ostream& summary = a.out.empty() ? std::cerr : std::cout;
  if (a.out.empty()) std::cout << to_jsonl(report, !a.no_timing);
  else write_report(report, a.out, !a.no_timing);
  if (!a.manifest.empty()) {
    std::ofstream m(a.manifest);
    if (!(m << report.manifest)) throw IOFailure("cannot write " + a.manifest);
  }
  summary << report.frames << " frames, " << report.semilattices << " semilattices, " << report.morphisms
          << " frame morphisms, " << report.join_homs << " join-homs\n";
  summary << report.records.size() << " records, " << report.failures() << " failed\n";
  summary << "WDb counterexample search: " << report.wdb_violations << " of " << report.morphisms
          << " morphisms violate WDb\n";
  for (const SuiteRecord& r : report.records)
    if (r.failed()) summary << "FAIL " << r.id << ' ' << r.check << ": " << r.witness << '\n';
  return report.failures() == 0 ? kOk : kCheckFailed;
}

int cmd_hasse(const std::string& ref, const std::string& of) {
  if (of == "poset") {
    const NamedPoset np = resolve_poset(ref);
    std::cout << emit_dot(np.name, np.poset);
    return kOk;
  }
  if (of == "au") {
    auto S = load_semilattice(ref);
    const AUFrame au(S);
    std::vector<std::string> labels;
    for (int u = 0; u < au.size(); ++u) labels.push_back(au.label(u));
    const FinitePoset order = FinitePoset::from_relation(au.size(), [&](int u, int v) { return au.leq(u, v); }, labels);
    std::cout << emit_dot("AU(" + S->name() + ")", order);
    return kOk;
  }
  auto L = load_frame(ref);
  if (of == "lc") {
    const LcSemilattice LC(L);
    std::cout << emit_dot(LC.semilattice().name(), LC.semilattice().poset());
    return kOk;
  }
  const SublocaleLattice SL(L);
  std::vector<int> members;
  std::string name;
  if (of == "sublocales") {
    for (int s = 0; s < SL.size(); ++s) members.push_back(s);
    name = "S(" + L->name() + ")";
  } else if (of == "smooth") {
    members = smooth_sublocales(SL);
    name = "S_b(" + L->name() + ")";
  } else if (of == "closed-joins") {
    members = closed_joins(SL);
    name = "S_c(" + L->name() + ")";
  } else {
    members = open_meets(SL);
    name = "S_o(" + L->name() + ")";
  }
  std::cout << emit_dot(name, inclusion_order(SL, members));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublocales, smooth sublocales and Bruns-Lakser completions of finite frames"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "smoothloc 0.1.0");

  std::string object, which = "all", flavor = "smooth", target = "sb", format, of = "poset";
  VerifyArgs verify;

  auto* validate = app.add_subcommand("validate", "Check that a lattice file is a frame and run the Heyting laws");
  validate->add_option("frame", object, "Lattice file or builtin name (2, C4, B2, 2xC3)")->required();

  auto* sublocales = app.add_subcommand("sublocales", "List sublocales of a frame");
  sublocales->add_option("frame", object)->required();
  sublocales->add_option("--which", which)->check(CLI::IsMember({"all", "smooth", "closed-joins", "open-meets"}));

  auto* lc = app.add_subcommand("lc", "List the join-semilattice LC(L) of canonical pairs");
  lc->add_option("frame", object)->required();

  auto* bl = app.add_subcommand("bruns-lakser", "Admissible upper sets AU(S) of a join-semilattice");
  bl->add_option("semilattice", object, "Lattice file (joins only), builtin, or corpus name like J4_3")->required();

  auto* iso = app.add_subcommand("iso", "Completion isomorphism S_b ≅ AU(LC(L)) or S_c ≅ AU(L)");
  iso->add_option("frame", object)->required();
  iso->add_option("--flavor", flavor)->check(CLI::IsMember({"smooth", "closed"}));

  auto* lift = app.add_subcommand("lift", "Decide and build the lift of a frame morphism");
  lift->add_option("morphism", object, "Morphism file")->required()->check(CLI::ExistingFile);
  lift->add_option("--target", target)->check(CLI::IsMember({"sb", "sc", "so", "s"}));

  auto* ver = app.add_subcommand("verify", "Run the verification suite over the generated corpus");
  ver->add_option("--max-size", verify.max_size, "Size bound for chains, Boolean algebras, products and distributive lattices; topologies on up to 4 points are always included")->check(CLI::Range(1, 16));
  ver->add_option("--seed", verify.seed);
  ver->add_option("--out", verify.out, "JSON-lines report (stdout when absent)");
  ver->add_option("--manifest", verify.manifest, "Write the corpus manifest here");
  ver->add_option("--modules", verify.modules, "Restrict to these check modules")
      ->check(CLI::IsMember(registered_modules()));
  ver->add_option("--threads", verify.threads)->check(CLI::NonNegativeNumber);
  ver->add_flag("--no-timing", verify.no_timing, "Omit the millis field");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of an object");
  hasse->add_option("object", object)->required();
  hasse->add_option("--format", format)->required()->check(CLI::IsMember({"dot"}));
  hasse->add_option("--of", of, "What to draw for the object")
      ->check(CLI::IsMember({"poset", "sublocales", "smooth", "closed-joins", "open-meets", "lc", "au"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(object);
    if (*sublocales) return cmd_sublocales(object, which);
    if (*lc) return cmd_lc(object);
    if (*bl) return cmd_bruns_lakser(object);
    if (*iso) return cmd_iso(object, flavor);
    if (*lift) return cmd_lift(object, target);
    if (*ver) return cmd_verify(verify);
    if (*hasse) return cmd_hasse(object, of);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const IOFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidPoset& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
