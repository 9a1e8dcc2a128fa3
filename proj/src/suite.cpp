#include "smoothloc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <json.hpp>
#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "smoothloc/correspondence.hpp"
#include "smoothloc/lc.hpp"
#include "smoothloc/lift.hpp"
#include "smoothloc/sublocale.hpp"

namespace smoothloc {

const std::vector<std::string>& registered_modules() {
  static const std::vector<std::string> modules{"order-core",     "sublocale-engine", "lc-semilattice",
                                                "bruns-lakser",   "correspondence",   "lift-checker"};
  return modules;
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const SuiteRecord& r) { return r.failed(); }));
}

std::string status_of(const CheckOutcome& outcome) {
  if (!outcome.passed) return "fail";
  if (outcome.note.find("finite-trivial") != std::string::npos) return "finite-trivial";
  if (outcome.note.rfind("skipped", 0) == 0) return "skipped";
  return "pass";
}

namespace {

using Clock = std::chrono::steady_clock;

struct JobOutput {
  std::vector<SuiteRecord> records;
  std::size_t morphisms = 0;
  std::size_t wdb_violations = 0;
  std::string first_wdb_violation;
  std::size_t join_homs = 0;
};

// Runs fn, appending its checks under `id` with the elapsed time split
// evenly among them.
void run_checks(JobOutput& out, const std::string& id, const std::function<CheckList()>& fn) {
  const auto start = Clock::now();
  CheckList list;
  try {
    list = fn();
  } catch (const Error& e) {
    list.push_back({"exception", false, e.what(), {}});
  }
  const double millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const double each = list.empty() ? 0.0 : millis / static_cast<double>(list.size());
  for (const CheckOutcome& c : list) out.records.push_back({id, c.check, status_of(c), c.witness, c.note, each});
}

// Folds the outcomes of one check over many objects into a single outcome:
// the first failure wins, notes are tallied.
class Aggregate {
 public:
  void add(const std::string& object, const CheckOutcome& c) {
    auto [it, fresh] = entries_.try_emplace(c.check);
    if (fresh) order_.push_back(c.check);
    Entry& e = it->second;
    ++e.count;
    if (!c.passed && e.passed) {
      e.passed = false;
      e.witness = object + ": " + c.witness;
    }
    if (!c.note.empty()) ++e.notes[c.note];
  }

  CheckList result() const {
    CheckList out;
    for (const std::string& name : order_) {
      const Entry& e = entries_.at(name);
      CheckOutcome c{name, e.passed, e.witness, {}};
      if (e.notes.size() == 1 && e.notes.begin()->second == e.count) {
        c.note = e.notes.begin()->first;
      } else {
        for (const auto& [note, k] : e.notes) {
          if (!c.note.empty()) c.note += "; ";
          c.note += note + " (" + std::to_string(k) + " of " + std::to_string(e.count) + ")";
        }
      }
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  struct Entry {
    bool passed = true;
    std::string witness;
    std::size_t count = 0;
    std::map<std::string, std::size_t> notes;
  };
  std::vector<std::string> order_;
  std::map<std::string, Entry> entries_;
};

CheckList heyting_checks(const FiniteFrame& L) {
  CheckList out;
  for (const LawResult& r : verify_heyting_laws(L).laws) {
    CheckOutcome c{"heyting_" + r.law, r.passed, {}, {}};
    if (!r.passed) {
      std::string w;
      for (Element e : r.witness) w += (w.empty() ? "" : ", ") + L.label(e);
      c.witness = "(" + w + ")";
    }
    out.push_back(std::move(c));
  }
  CheckAccumulator again("build_frame_idempotent");
  const FiniteFrame rebuilt = build_frame(L.poset(), L.name());
  again.expect(rebuilt.tables().meet == L.tables().meet && rebuilt.tables().join == L.tables().join,
               [] { return std::string("tables differ after rebuilding"); });
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      again.expect(rebuilt.arrow(a, b) == L.arrow(a, b), [&] { return L.label(a) + " → " + L.label(b); });
  out.push_back(again.result());
  return out;
}

CheckOutcome iso_check(const Correspondence& corr) {
  const std::string side = corr.flavor() == Flavor::Smooth ? "S_b" : "S_c";
  CheckOutcome c{to_string(corr.flavor()) + "_iso", true, {}, {}};
  try {
    const IsoTable table = build_iso(corr);
    c.note = side + " " + std::to_string(corr.collection().size()) + " ↔ AU " + std::to_string(corr.au()->size());
    c.passed = table.rows.size() == corr.collection().size();
  } catch (const IsoFailure& e) {
    c.passed = false;
    c.witness = e.what();
  }
  return c;
}

bool selected(const std::vector<std::string>& modules, const std::string& name) {
  return modules.empty() || std::find(modules.begin(), modules.end(), name) != modules.end();
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  for (const std::string& m : options.modules)
    if (std::find(registered_modules().begin(), registered_modules().end(), m) == registered_modules().end())
      throw Error("unknown check module: " + m);
  const CorpusSpec& spec = options.corpus;
  auto want = [&](const std::string& m) { return selected(options.modules, m); };

  SuiteReport report;
  JobOutput fixtures;
  std::vector<CorpusFrame> frames = gen_frames(spec);
  for (const NamedPoset& fx : spec.fixtures) {
    try {
      frames.push_back({fx.name, "fixture", std::make_shared<const FiniteFrame>(build_frame(fx.poset, fx.name))});
    } catch (const Error& e) {
      fixtures.records.push_back({"fixture:" + fx.name, "build_frame", "fail", e.what(), {}, 0.0});
    }
  }
  const std::vector<CorpusSemilattice> semilattices = gen_semilattices(spec);
  report.frames = frames.size();
  report.semilattices = semilattices.size();
  report.manifest = corpus_manifest(frames, semilattices);

  std::optional<tbb::task_arena> arena;
  if (options.threads > 0) arena.emplace(options.threads);
  auto parallel = [&](std::size_t n, const std::function<void(std::size_t)>& body) {
    auto loop = [&] {
      tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n, 1), [&](const tbb::blocked_range<std::size_t>& r) {
        for (std::size_t i = r.begin(); i != r.end(); ++i) body(i);
      });
    };
    if (arena) arena->execute(loop);
    else loop();
  };

  // Shared per-object data, built once.
  std::vector<std::shared_ptr<const FrameAnalysis>> analyses(frames.size());
  std::vector<std::string> analysis_errors(frames.size());
  parallel(frames.size(), [&](std::size_t i) {
    try {
      analyses[i] = FrameAnalysis::of(frames[i].frame);
    } catch (const Error& e) {
      analysis_errors[i] = e.what();
    }
  });
  std::vector<std::shared_ptr<const AUFrame>> au(semilattices.size());
  if (want("bruns-lakser"))
    parallel(semilattices.size(), [&](std::size_t i) { au[i] = std::make_shared<const AUFrame>(semilattices[i].semilattice); });

  std::vector<std::function<void(JobOutput&)>> jobs;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    jobs.push_back([&, i](JobOutput& out) {
      const std::string id = "frame:" + frames[i].name;
      const FiniteFrame& L = *frames[i].frame;
      if (want("order-core")) run_checks(out, id, [&] { return heyting_checks(L); });
      if (!analyses[i]) {
        out.records.push_back({id, "analysis", "fail", analysis_errors[i], {}, 0.0});
        return;
      }
      const FrameAnalysis& A = *analyses[i];
      if (want("sublocale-engine")) run_checks(out, id, [&] { return verify_sublocale_calculus(*A.sublocales); });
      if (want("lc-semilattice")) run_checks(out, id, [&] { return verify_lc(*A.sublocales, A.lc()); });
      if (want("correspondence")) {
        run_checks(out, id, [&] {
          const Correspondence closed(A.sublocales, Flavor::Closed);
          CheckList list = verify_fixpoints(*A.smooth);
          for (auto& c : verify_fixpoints(closed)) list.push_back(std::move(c));
          list.push_back(iso_check(*A.smooth));
          list.push_back(iso_check(closed));
          list.push_back(exact_iff_closed_check(*A.sublocales));
          for (auto& c : psi_detection_check(*A.sublocales, A.lc())) list.push_back(std::move(c));
          return list;
        });
      }
      if (want("lift-checker")) run_checks(out, id, [&] { return CheckList{verify_wd_link(A)}; });
    });
  }
  if (want("bruns-lakser")) {
    for (std::size_t i = 0; i < semilattices.size(); ++i)
      jobs.push_back([&, i](JobOutput& out) {
        run_checks(out, "semilattice:" + semilattices[i].name,
                   [&] { return verify_bruns_lakser(*semilattices[i].semilattice, *au[i], spec.families); });
      });
    for (std::size_t i = 0; i < semilattices.size(); ++i)
      jobs.push_back([&, i](JobOutput& out) {
        run_checks(out, "joinhoms:" + semilattices[i].name, [&] {
          Aggregate agg;
          for (std::size_t j = 0; j < semilattices.size(); ++j)
            for (const JoinHom& h : gen_join_homs(semilattices[i].semilattice, semilattices[j].semilattice)) {
              ++out.join_homs;
              for (const CheckOutcome& c : verify_lift_theorem(h, au[i], au[j], spec.families)) agg.add(h.name(), c);
            }
          return agg.result();
        });
      });
  }
  if (want("lift-checker")) {
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < frames.size(); ++i)
      if (analyses[i] && frames[i].frame->size() <= spec.max_morphism_frame_size) small.push_back(i);
    for (std::size_t a : small)
      for (std::size_t b : small)
        jobs.push_back([&, a, b](JobOutput& out) {
          run_checks(out, "morphisms:" + frames[a].name + "->" + frames[b].name, [&] {
            Aggregate agg;
            for (const FrameMorphism& f : gen_morphisms(frames[a].frame, frames[b].frame, spec)) {
              ++out.morphisms;
              const MorphismVerdict v = verify_morphism(f, *analyses[a], *analyses[b]);
              if (!v.wdb) {
                if (out.wdb_violations++ == 0) out.first_wdb_violation = f.name();
              }
              for (const CheckOutcome& c : v.checks) agg.add(f.name(), c);
            }
            return agg.result();
          });
        });
  }

  std::vector<JobOutput> outputs(jobs.size());
  parallel(jobs.size(), [&](std::size_t i) { jobs[i](outputs[i]); });

  report.records = std::move(fixtures.records);
  std::string first_violation;
  for (JobOutput& o : outputs) {
    report.morphisms += o.morphisms;
    report.join_homs += o.join_homs;
    if (o.wdb_violations > 0 && report.wdb_violations == 0) first_violation = o.first_wdb_violation;
    report.wdb_violations += o.wdb_violations;
    std::move(o.records.begin(), o.records.end(), std::back_inserter(report.records));
  }
  if (want("lift-checker")) {
    // A search result, not a property: it passes either way.
    SuiteRecord search{"corpus", "wdb_counterexample_search", "pass", {}, {}, 0.0};
    search.note = std::to_string(report.wdb_violations) + " of " + std::to_string(report.morphisms) +
                  " morphisms between frames with at most " + std::to_string(spec.max_morphism_frame_size) +
                  " elements violate WDb";
    if (report.wdb_violations > 0) search.note += "; first: " + first_violation;
    report.records.push_back(std::move(search));
  }
  return report;
}

std::string to_jsonl(const SuiteReport& report, bool with_timing) {
  std::string out;
  for (const SuiteRecord& r : report.records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["check"] = r.check;
    j["status"] = r.status;
    j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_timing) j["millis"] = std::round(r.millis * 1000.0) / 1000.0;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_report(const SuiteReport& report, const std::filesystem::path& path, bool with_timing) {
  std::ofstream file(path);
  if (!file) throw IOFailure("cannot write " + path.string());
  file << to_jsonl(report, with_timing);
  if (!file) throw IOFailure("write to " + path.string() + " failed");
}

}  // namespace smoothloc
