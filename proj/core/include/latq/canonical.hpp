#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latq/lattice.hpp"
#include "latq/poset.hpp"

namespace latq {

/// Canonical key of a finite order relation: equal keys iff the relations are
/// isomorphic. Uses colour refinement on the order followed by a pruned
/// backtracking search over class-respecting relabelings. Intended for n <= 12.
std::vector<uint64_t> canonical_order_key(int n, const std::function<bool(int, int)>& leq);

std::vector<uint64_t> canonical_key(const Lattice& l);
std::vector<uint64_t> canonical_key(const Poset& p);

/// Order isomorphism test (lattice isomorphism coincides with it).
bool isomorphic(const Lattice& a, const Lattice& b);

/// Compact hex rendering of a key, used in machine-readable reports.
std::string key_to_hex(const std::vector<uint64_t>& key);

/// 16-hex-digit FNV fingerprint of the canonical key; stable across runs and
/// relabelings, used to identify lattices in witnesses and findings.
std::string canonical_fingerprint(const Lattice& l);

}  // namespace latq
