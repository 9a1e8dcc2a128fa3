#include "smoothloc/lattice_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "smoothloc/errors.hpp"

namespace smoothloc {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// Numbered, comment-stripped, non-blank lines.
std::vector<std::pair<int, std::vector<std::string>>> logical_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto t = tokens(line);
    if (!t.empty()) out.emplace_back(number, std::move(t));
    pos = eol + 1;
  }
  return out;
}

}  // namespace

NamedPoset parse_lattice(std::string_view text) {
  auto lines = logical_lines(text);
  std::size_t k = 0;
  auto expect = [&](const char* keyword) -> const std::pair<int, std::vector<std::string>>& {
    if (k >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().first, std::string("expected '") + keyword + "'");
    const auto& l = lines[k];
    if (l.second[0] != keyword) throw ParseError(l.first, std::string("expected '") + keyword + "', got '" + l.second[0] + "'");
    ++k;
    return l;
  };

  const auto& head = expect("lattice");
  if (head.second.size() != 2) throw ParseError(head.first, "expected 'lattice <name>'");
  NamedPoset out{head.second[1], {}};

  const auto& count = expect("elements");
  if (count.second.size() != 2) throw ParseError(count.first, "expected 'elements <n>'");
  auto n = to_int(count.second[1]);
  if (!n || *n <= 0) throw ParseError(count.first, "element count must be a positive integer");
  if (*n > ElementSet::kCapacity) throw ParseError(count.first, "at most 64 elements are supported");

  std::vector<std::string> labels;
  std::map<std::string, int> by_label;
  if (k < lines.size() && lines[k].second[0] == "labels") {
    const auto& l = lines[k++];
    if (static_cast<int>(l.second.size()) != *n + 1)
      throw ParseError(l.first, "expected " + std::to_string(*n) + " labels");
    labels.assign(l.second.begin() + 1, l.second.end());
    for (int i = 0; i < *n; ++i)
      if (!by_label.emplace(labels[i], i).second) throw ParseError(l.first, "duplicate label '" + labels[i] + "'");
  }
  auto resolve = [&](int line, const std::string& tok) {
    if (auto v = to_int(tok)) {
      if (*v < 0 || *v >= *n) throw ParseError(line, "element id " + tok + " out of range");
      return *v;
    }
    if (auto it = by_label.find(tok); it != by_label.end()) return it->second;
    throw ParseError(line, "unknown element '" + tok + "'");
  };

  expect("covers");
  std::vector<Cover> covers;
  bool ended = false;
  while (k < lines.size()) {
    const auto& l = lines[k++];
    if (l.second[0] == "end") {
      if (l.second.size() != 1) throw ParseError(l.first, "unexpected tokens after 'end'");
      ended = true;
      break;
    }
    if (l.second.size() != 2) throw ParseError(l.first, "expected a cover pair '<i> <j>'");
    covers.emplace_back(resolve(l.first, l.second[0]), resolve(l.first, l.second[1]));
  }
  if (!ended) throw ParseError(lines.empty() ? 1 : lines.back().first, "missing 'end'");
  if (k != lines.size()) throw ParseError(lines[k].first, "content after 'end'");
  try {
    out.poset = FinitePoset::from_covers(*n, covers, std::move(labels));
  } catch (const InvalidPoset& e) {
    throw ParseError(head.first, e.what());
  }
  // Every listed pair must be an actual cover of the resulting order.
  auto real = out.poset.covers();
  for (auto c : covers)
    if (!std::binary_search(real.begin(), real.end(), c))
      throw ParseError(head.first, "pair (" + std::to_string(c.first) + "," + std::to_string(c.second) +
                                       ") is implied by transitivity, not a cover");
  return out;
}

NamedPoset read_lattice_file(const std::filesystem::path& path) { return parse_lattice(read_text_file(path)); }

std::string emit_lattice(std::string_view name, const FinitePoset& poset) {
  std::ostringstream out;
  out << "lattice " << name << "\n";
  out << "elements " << poset.size() << "\n";
  if (poset.has_labels()) {
    out << "labels";
    for (const auto& l : poset.labels()) out << ' ' << l;
    out << "\n";
  }
  out << "covers\n";
  for (auto [i, j] : poset.covers()) out << i << ' ' << j << "\n";
  out << "end\n";
  return out.str();
}

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(std::string_view name, const FinitePoset& poset) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < poset.size(); ++i) out << "  n" << i << " [label=" << quote(poset.label(i)) << "];\n";
  for (auto [i, j] : poset.covers()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

NamedPoset parse_dot(std::string_view text) {
  static const std::regex header(R"re(^\s*digraph\s+"((?:[^"\\]|\\.)*)"\s*\{\s*$)re");
  static const std::regex node(R"re(^\s*n(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$)re");
  static const std::regex edge(R"re(^\s*n(\d+)\s*->\s*n(\d+);\s*$)re");
  static const std::regex attr(R"re(^\s*rankdir=BT;\s*$)re");
  auto unescape = [](const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      out += s[i];
    }
    return out;
  };

  NamedPoset out;
  std::map<int, std::string> labels;
  std::vector<Cover> covers;
  bool opened = false, closed = false;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (closed) throw ParseError(number, "content after closing brace");
    std::smatch m;
    if (!opened) {
      if (!std::regex_match(line, m, header)) throw ParseError(number, "expected 'digraph \"name\" {'");
      out.name = unescape(m[1]);
      opened = true;
    } else if (std::regex_match(line, m, node)) {
      labels[std::stoi(m[1])] = unescape(m[2]);
    } else if (std::regex_match(line, m, edge)) {
      covers.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
    } else if (std::regex_match(line, m, attr)) {
    } else if (line.find_first_not_of(" \t") != std::string::npos && line.substr(line.find_first_not_of(" \t"), 1) == "}") {
      closed = true;
    } else {
      throw ParseError(number, "unsupported DOT statement");
    }
  }
  if (!closed) throw ParseError(number, "missing closing brace");
  const int n = static_cast<int>(labels.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    auto it = labels.find(i);
    if (it == labels.end()) throw ParseError(number, "node ids must be 0..n-1");
    names.push_back(it->second);
  }
  try {
    out.poset = FinitePoset::from_covers(n, covers, std::move(names));
  } catch (const InvalidPoset& e) {
    throw ParseError(number, e.what());
  }
  return out;
}

MorphismText parse_morphism(std::string_view text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, "empty morphism file");
  const auto& h = lines[0];
  if (h.second.size() != 6 || h.second[0] != "morphism" || h.second[2] != "from" || h.second[4] != "to")
    throw ParseError(h.first, "expected 'morphism <name> from <frameA> to <frameB>'");
  MorphismText m{h.second[1], h.second[3], h.second[5], {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.second[0] == "end") {
      if (k + 1 != lines.size()) throw ParseError(lines[k + 1].first, "content after 'end'");
      break;
    }
    if (l.second.size() != 3 || l.second[0] != "map") throw ParseError(l.first, "expected 'map <i> <j>'");
    m.map.emplace_back(l.second[1], l.second[2]);
  }
  return m;
}

std::string emit_morphism(const MorphismText& m) {
  std::ostringstream out;
  out << "morphism " << m.name << " from " << m.from << " to " << m.to << "\n";
  for (const auto& [a, b] : m.map) out << "map " << a << ' ' << b << "\n";
  out << "end\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOFailure("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace smoothloc
