#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dfadist/dfa.hpp"

namespace dfadist {

// `.dfa` text format, version 1:
//
//   dfa v1
//   alphabet 01#
//   states 3
//   initial 0
//   accepting 0
//   row 0 1 2 1
//   ...
//
// ';' starts a comment that runs to the end of the line; blank lines are
// ignored. Exactly one `row` per state, each listing |alphabet| targets.

/// Throws ParseError naming the offending line.
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa(std::string_view text);

/// Canonical text: states renumbered by canonical_numbering, rows in index
/// order. parse_dfa(serialize_dfa(d)) == canonical_numbering(d).
std::string serialize_dfa(const Dfa& d);

/// Graphviz rendering; accepting states are doublecircles and the initial
/// state gets an entry arrow from a point-shaped pseudo-node.
std::string to_dot(const Dfa& d);

/// File helpers; I/O and parse failures are reported as InputError with the
/// path prefixed.
Dfa load_dfa(const std::filesystem::path& path);
void save_dfa(const Dfa& d, const std::filesystem::path& path);

}  // namespace dfadist
