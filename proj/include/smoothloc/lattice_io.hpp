#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smoothloc/poset.hpp"

namespace smoothloc {

struct NamedPoset {
  std::string name;
  FinitePoset poset;
};

/// Reads the lattice text format:
///
///   lattice <name>
///   elements <n>
///   labels <n tokens>        (optional)
///   covers
///   <i> <j>                  (i is covered by j; decimal ids, or labels
///                             for non-numeric tokens)
///   end
///
/// `#` starts a comment. Throws ParseError with the offending line.
NamedPoset parse_lattice(std::string_view text);
NamedPoset read_lattice_file(const std::filesystem::path& path);

/// Canonical form: cover lines sorted lexicographically, ids only.
std::string emit_lattice(std::string_view name, const FinitePoset& poset);

/// Hasse diagram, one node per element labelled with its name and one edge
/// per cover, drawn bottom to top.
std::string emit_dot(std::string_view name, const FinitePoset& poset);
/// Reads back the subset of DOT produced by emit_dot.
NamedPoset parse_dot(std::string_view text);

struct MorphismText {
  std::string name;
  std::string from;
  std::string to;
  std::vector<std::pair<std::string, std::string>> map;  // source token -> target token
};

/// `morphism <name> from <A> to <B>` followed by `map <i> <j>` lines and an
/// optional `end`.
MorphismText parse_morphism(std::string_view text);
std::string emit_morphism(const MorphismText& m);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace smoothloc
