#include "smoothloc/loading.hpp"

#include <charconv>
#include <regex>

#include "smoothloc/corpus.hpp"

namespace smoothloc {

NamedPoset load_poset(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return path.extension() == ".dot" ? parse_dot(text) : parse_lattice(text);
}

namespace {

std::optional<std::filesystem::path> find_file(const std::string& ref, const std::filesystem::path& base) {
  std::vector<std::filesystem::path> candidates;
  const std::filesystem::path p(ref);
  if (!base.empty() && p.is_relative()) {
    candidates.push_back(base / p);
    candidates.push_back(base / (ref + ".lat"));
  }
  candidates.push_back(p);
  candidates.push_back(ref + ".lat");
  for (const auto& c : candidates)
    if (std::filesystem::is_regular_file(c)) return c;
  return std::nullopt;
}

// Corpus semilattices are addressable by the names gen_semilattices gives
// them, e.g. "J4_3".
std::optional<NamedPoset> corpus_semilattice(const std::string& ref) {
  static const std::regex pattern("J([1-6])_[0-9]+");
  std::smatch m;
  if (!std::regex_match(ref, m, pattern)) return std::nullopt;
  CorpusSpec spec;
  spec.max_semilattice_size = std::stoi(m[1].str());
  for (const CorpusSemilattice& s : gen_semilattices(spec))
    if (s.name == ref) return NamedPoset{s.name, s.semilattice->poset()};
  return std::nullopt;
}

// Frames of the default corpus by manifest name, e.g. "T3_5" or "D7_3".
std::optional<NamedPoset> corpus_frame(const std::string& ref) {
  static const std::regex pattern("[A-Z][0-9A-Za-z_]*");
  if (!std::regex_match(ref, pattern)) return std::nullopt;
  for (const CorpusFrame& f : gen_frames(CorpusSpec{}))
    if (f.name == ref) return NamedPoset{f.name, f.frame->poset()};
  return std::nullopt;
}

NamedPoset resolve_any(const std::string& ref, const std::filesystem::path& base, bool semilattice) {
  if (auto file = find_file(ref, base)) return load_poset(*file);
  if (auto p = builtin_poset(ref)) return {ref, std::move(*p)};
  if (semilattice)
    if (auto p = corpus_semilattice(ref)) return std::move(*p);
  if (auto p = corpus_frame(ref)) return std::move(*p);
  throw IOFailure("'" + ref + "' is neither a readable file nor a builtin name");
}

}  // namespace

NamedPoset resolve_poset(const std::string& ref, const std::filesystem::path& base) {
  return resolve_any(ref, base, true);
}

std::shared_ptr<const FiniteFrame> load_frame(const std::string& ref, const std::filesystem::path& base) {
  NamedPoset np = resolve_any(ref, base, false);
  return std::make_shared<const FiniteFrame>(build_frame(np.poset, np.name));
}

std::shared_ptr<const JoinSemilattice> load_semilattice(const std::string& ref, const std::filesystem::path& base) {
  NamedPoset np = resolve_any(ref, base, true);
  return std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(np.poset, np.name));
}

Element resolve_element(const FinitePoset& poset, const std::string& token) {
  int id = -1;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec == std::errc() && ptr == token.data() + token.size()) {
    if (id < 0 || id >= poset.size()) throw ParseError("element id " + token + " out of range");
    return id;
  }
  for (int i = 0; i < poset.size(); ++i)
    if (poset.has_labels() && poset.labels()[i] == token) return i;
  throw ParseError("no element '" + token + "'");
}

FrameMorphism load_morphism(const std::filesystem::path& path) {
  const MorphismText text = parse_morphism(read_text_file(path));
  const std::filesystem::path base = path.parent_path();
  auto dom = load_frame(text.from, base);
  auto cod = load_frame(text.to, base);
  std::vector<Element> table(dom->size(), -1);
  for (const auto& [a, b] : text.map) {
    const Element x = resolve_element(dom->poset(), a);
    if (table[x] >= 0) throw ParseError("element '" + a + "' is mapped twice");
    table[x] = resolve_element(cod->poset(), b);
  }
  for (int x = 0; x < dom->size(); ++x)
    if (table[x] < 0) throw ParseError("element '" + dom->label(x) + "' has no image");
  return FrameMorphism(dom, cod, std::move(table), text.name);
}

}  // namespace smoothloc
