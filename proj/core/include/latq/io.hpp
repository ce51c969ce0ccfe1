#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "latq/congruence.hpp"
#include "latq/lattice.hpp"

namespace latq {

struct LoadOptions {
  bool allow_nondistributive = false;
};

/// Parses the lattice text format:
///
///   # comment
///   elements: bot a b top
///   covers:
///   bot a
///   bot b
///   a top
///   b top
///
/// The order relation is the reflexive-transitive closure of the cover pairs.
/// Throws io_error on malformed documents, invalid_lattice when the closure
/// is not a lattice (or not distributive, unless allowed).
Lattice load_lattice(std::istream& in, const LoadOptions& opt = {});
Lattice load_lattice_file(const std::string& path, const LoadOptions& opt = {});

/// Writes the same format (covers from the transitive reduction). Extra
/// comment lines, when given, are emitted before the document.
void save_lattice(std::ostream& out, const Lattice& l,
                  const std::vector<std::string>& comments = {});

/// Hasse diagram in DOT, drawn bottom-up.
std::string to_dot(const Lattice& l);

/// Hasse diagram with congruence classes colour-grouped. The classes equal to
/// `bottom_class` / `top_class` (when provided) get fixed colours so the
/// kernel ideal and the kernel elements stand out.
std::string to_dot(const Lattice& l, const Congruence& c,
                   std::optional<int> bottom_class = std::nullopt,
                   std::optional<int> top_class = std::nullopt);

}  // namespace latq
