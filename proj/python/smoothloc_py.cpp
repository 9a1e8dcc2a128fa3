#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "smoothloc/correspondence.hpp"
#include "smoothloc/lc.hpp"
#include "smoothloc/lift.hpp"
#include "smoothloc/loading.hpp"
#include "smoothloc/suite.hpp"

namespace py = pybind11;
using namespace smoothloc;

namespace {

using FramePtr = std::shared_ptr<const FiniteFrame>;
// pybind11 holders must be non-const; frames are never mutated from Python.
using Holder = std::shared_ptr<FiniteFrame>;

Holder hold(FramePtr p) { return std::const_pointer_cast<FiniteFrame>(std::move(p)); }

// Python callers name elements by label or by id.
Element element(const FiniteFrame& L, const py::object& x) {
  if (py::isinstance<py::int_>(x)) {
    const int id = x.cast<int>();
    if (id < 0 || id >= L.size()) throw py::index_error("element id out of range");
    return id;
  }
  return resolve_element(L.poset(), x.cast<std::string>());
}

std::vector<std::string> carrier_labels(const FiniteFrame& L, ElementSet s) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(L.label(x));
  return out;
}

std::vector<std::vector<std::string>> sublocales(const FramePtr& L, const std::string& which) {
  const SublocaleLattice SL(L);
  std::vector<int> ids;
  if (which == "all")
    for (int s = 0; s < SL.size(); ++s) ids.push_back(s);
  else if (which == "smooth")
    ids = smooth_sublocales(SL);
  else if (which == "closed-joins")
    ids = closed_joins(SL);
  else if (which == "open-meets")
    ids = open_meets(SL);
  else
    throw py::value_error("which must be all, smooth, closed-joins or open-meets");
  std::vector<std::vector<std::string>> out;
  for (int s : ids) out.push_back(carrier_labels(*L, SL[s].carrier));
  return out;
}

py::dict iso(const FramePtr& L, const std::string& flavor) {
  if (flavor != "smooth" && flavor != "closed") throw py::value_error("flavor must be smooth or closed");
  auto SL = std::make_shared<const SublocaleLattice>(L);
  const Correspondence corr(SL, flavor == "closed" ? Flavor::Closed : Flavor::Smooth);
  const IsoTable table = build_iso(corr);
  py::list rows;
  for (auto [s, u] : table.rows) rows.append(py::make_tuple(SL->label(s), corr.au()->label(u)));
  py::dict d;
  d["collection"] = corr.collection().size();
  d["au"] = corr.au()->size();
  d["rows"] = rows;
  return d;
}

py::dict lift(const std::filesystem::path& path, const std::string& target) {
  const FrameMorphism f = load_morphism(path);
  const auto L = FrameAnalysis::of(f.dom_ptr());
  const auto M = FrameAnalysis::of(f.cod_ptr());
  py::dict d;
  d["wdb"] = check_WDb(f, *L, *M).passed;
  d["locally_exact"] = is_locally_exact_morphism(f, *L, *M).passed;
  py::list table;
  bool exists = true, verified = false;
  try {
    if (target == "sb") {
      const SbLift l = build_sb_lift(f, *L, *M);
      verified = l.verified();
      for (int s : L->smooth->collection())
        table.append(py::make_tuple(L->sublocales->label(s), M->sublocales->label(l.table[s])));
    } else if (target == "sc" || target == "so") {
      const CollectionLift l = target == "sc" ? build_sc_lift(f, *L, *M) : build_so_lift(f, *L, *M);
      verified = l.verified();
      for (int s : l.dom) table.append(py::make_tuple(L->sublocales->label(s), M->sublocales->label(l.table[s])));
    } else {
      throw py::value_error("target must be sb, sc or so");
    }
  } catch (const NoLift&) {
    exists = false;
  }
  d["exists"] = exists;
  d["verified"] = verified;
  d["table"] = table;
  return d;
}

py::dict suite(int max_size, const std::vector<std::string>& modules, bool timing) {
  SuiteOptions o;
  o.corpus.max_frame_size = max_size;
  o.corpus.max_morphism_frame_size = std::min(max_size, o.corpus.max_morphism_frame_size);
  o.corpus.max_semilattice_size = std::min(max_size, o.corpus.max_semilattice_size);
  o.modules = modules;
  SuiteReport r;
  {
    py::gil_scoped_release release;
    r = run_suite(o);
  }
  py::dict d;
  d["frames"] = r.frames;
  d["semilattices"] = r.semilattices;
  d["morphisms"] = r.morphisms;
  d["join_homs"] = r.join_homs;
  d["wdb_violations"] = r.wdb_violations;
  d["failures"] = r.failures();
  d["jsonl"] = to_jsonl(r, timing);
  return d;
}

}  // namespace

PYBIND11_MODULE(_smoothloc, m) {
  m.doc() = "Sublocales, smooth sublocales and Bruns-Lakser completions of finite frames";

  py::register_exception<Error>(m, "Error");
  py::register_exception<NotDistributive>(m, "NotDistributive", m.attr("Error"));
  py::register_exception<NotALattice>(m, "NotALattice", m.attr("Error"));
  py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));
  py::register_exception<IOFailure>(m, "IOFailure", m.attr("Error"));

  py::class_<FiniteFrame, Holder>(m, "Frame")
      .def_static(
          "load", [](const std::string& ref) { return hold(load_frame(ref)); }, py::arg("ref"),
          "A lattice file path or a builtin name such as 'C4', 'B2' or '2xC3'.")
      .def_static(
          "parse",
          [](const std::string& text) {
            NamedPoset np = parse_lattice(text);
            return std::make_shared<FiniteFrame>(build_frame(np.poset, np.name));
          },
          py::arg("text"))
      .def_property_readonly("name", &FiniteFrame::name)
      .def_property_readonly("labels",
                             [](const FiniteFrame& L) {
                               std::vector<std::string> out;
                               for (int i = 0; i < L.size(); ++i) out.push_back(L.label(i));
                               return out;
                             })
      .def("__len__", &FiniteFrame::size)
      .def("meet", [](const FiniteFrame& L, py::object a, py::object b) { return L.label(L.meet(element(L, a), element(L, b))); })
      .def("join", [](const FiniteFrame& L, py::object a, py::object b) { return L.label(L.join(element(L, a), element(L, b))); })
      .def("arrow", [](const FiniteFrame& L, py::object a, py::object b) { return L.label(L.arrow(element(L, a), element(L, b))); })
      .def("leq", [](const FiniteFrame& L, py::object a, py::object b) { return L.leq(element(L, a), element(L, b)); })
      .def("heyting_laws",
           [](const FiniteFrame& L) {
             py::dict d;
             for (const LawResult& r : verify_heyting_laws(L).laws) d[py::str(r.law)] = r.passed;
             return d;
           })
      .def("is_subfit", [](const FiniteFrame& L) { return is_subfit(L); })
      .def("sublocales", [](const Holder& L, const std::string& which) { return sublocales(L, which); }, py::arg("which") = "all")
      .def("lc_pairs",
           [](const Holder& L) {
             const LcSemilattice LC(L);
             std::vector<std::pair<std::string, std::string>> out;
             for (const LcPair& p : LC.pairs()) out.emplace_back(L->label(p.a), L->label(p.b));
             return out;
           })
      .def("iso", [](const Holder& L, const std::string& flavor) { return iso(L, flavor); }, py::arg("flavor") = "smooth")
      .def("__repr__", [](const FiniteFrame& L) { return "<Frame " + L.name() + " with " + std::to_string(L.size()) + " elements>"; });

  m.def(
      "admissible_upper_sets",
      [](const std::string& ref) {
        auto S = load_semilattice(ref);
        const AUFrame au(S);
        std::vector<std::vector<std::string>> out;
        for (ElementSet u : au.sets()) {
          std::vector<std::string> labels;
          for (int x : u) labels.push_back(S->label(x));
          out.push_back(std::move(labels));
        }
        return out;
      },
      py::arg("ref"));
  m.def("lift", &lift, py::arg("morphism"), py::arg("target") = "sb");
  m.def("run_suite", &suite, py::arg("max_size") = 8, py::arg("modules") = std::vector<std::string>{},
        py::arg("timing") = false);
  m.def("modules", &registered_modules);
}
