#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "smoothloc/frame.hpp"
#include "smoothloc/lattice_io.hpp"
#include "smoothloc/semilattice.hpp"

namespace smoothloc {

/// Reads a `.dot` file with parse_dot and anything else with parse_lattice.
NamedPoset load_poset(const std::filesystem::path& path);

/// The order behind a file path or builtin name, unvalidated beyond being
/// a poset. See load_frame for the lookup rules.
NamedPoset resolve_poset(const std::string& ref, const std::filesystem::path& base = {});

/// A frame given as a file path or a builtin name ("2", "C4", "B2", "2xC3").
/// Relative paths are tried against `base` first, with and without a
/// `.lat` suffix. Throws IOFailure when neither a file nor a builtin
/// matches, NotALattice / NotDistributive for bad orders.
std::shared_ptr<const FiniteFrame> load_frame(const std::string& ref, const std::filesystem::path& base = {});

/// Same lookup, validated only as a join-semilattice.
std::shared_ptr<const JoinSemilattice> load_semilattice(const std::string& ref,
                                                       const std::filesystem::path& base = {});

/// A decimal token is an id; anything else must be a label. Throws
/// ParseError otherwise.
Element resolve_element(const FinitePoset& poset, const std::string& token);

/// A morphism file; its frames resolve relative to the file's directory.
/// Every element of the domain needs exactly one `map` line.
FrameMorphism load_morphism(const std::filesystem::path& path);

}  // namespace smoothloc
