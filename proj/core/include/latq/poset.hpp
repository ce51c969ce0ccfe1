#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latq/lattice.hpp"

namespace latq {

/// Finite poset on at most 32 points, kept as per-element down-set masks
/// (below[x] = bitmask of {y : y <= x}, including x). Only used as generator
/// input; lattices are the first-class structure.
struct Poset {
  int n = 0;
  std::vector<uint32_t> below;

  static Poset antichain(int k);
  static Poset chain(int k);

  /// Builds from strict relations (a < b); returns nothing if the closure is
  /// not antisymmetric.
  static std::optional<Poset> from_relations(int n, const std::vector<std::pair<int, int>>& less);

  bool leq(int x, int y) const { return (below[y] >> x) & 1; }
  bool valid() const;

  /// Number of down-closed subsets, counting at most `limit` before giving up
  /// (returns limit + 1 in that case).
  int count_downsets(int limit) const;
};

/// Lattice of down-closed subsets ordered by inclusion; meet/join are
/// intersection/union, so the result is always distributive. Elements are
/// sorted by (size, mask) so index 0 is the empty set. Throws usage_error on
/// an invalid poset.
Lattice downset_lattice(const Poset& p);

/// All non-isomorphic posets with exactly n points, built by repeatedly
/// attaching a new maximal element above a down-set, with isomorph rejection.
void enumerate_posets(int n, const std::function<void(const Poset&)>& yield);

}  // namespace latq
