#pragma once

#include <functional>
#include <vector>

#include "latq/lattice.hpp"

namespace latq {

/// Streams, up to isomorphism, every distributive lattice with at most max_n
/// elements, ordered by (size, canonical key). Backed by the Birkhoff
/// correspondence: non-isomorphic posets are grown with pruning on the
/// down-set count, then mapped through downset_lattice. Practical up to
/// max_n ~ 12.
void enumerate_distributive_lattices(int max_n, const std::function<void(const Lattice&)>& yield);

std::vector<Lattice> distributive_lattices_up_to(int max_n);

}  // namespace latq
