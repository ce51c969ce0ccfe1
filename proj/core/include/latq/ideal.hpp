#pragma once

#include <vector>

#include "latq/lattice.hpp"

namespace latq {

/// Nonempty, down-closed, join-closed subset.
struct Ideal {
  ElementSet members;
};

/// Nonempty, up-closed, meet-closed subset.
struct Filter {
  ElementSet members;
};

bool is_ideal(const Lattice& l, const ElementSet& s);
bool is_filter(const Lattice& l, const ElementSet& s);

/// Checked constructor; throws usage_error when the closure conditions fail.
Ideal as_ideal(const Lattice& l, ElementSet s);

/// The whole carrier is an ideal but most derived congruences require a
/// proper one; callers test with this.
bool is_trivial(const Lattice& l, const Ideal& i);

Ideal principal_ideal(const Lattice& l, int a);    // down a
Filter principal_filter(const Lattice& l, int a);  // up a

/// Common upper bounds {x : a <= x for every a in A}. For the other reading
/// of an up-set (union of principal filters) see up_closure.
ElementSet upper_bounds(const Lattice& l, const ElementSet& a);

/// {x : a <= x for some a in A}.
ElementSet up_closure(const Lattice& l, const ElementSet& a);

/// Every ideal of a finite lattice is principal, so this is {down a : a}.
std::vector<Ideal> enumerate_ideals(const Lattice& l);

/// Proper and x^y in I implies x in I or y in I.
bool is_prime_ideal(const Lattice& l, const Ideal& i);

std::vector<Ideal> prime_ideals(const Lattice& l);

/// Prime ideals containing `base` that are minimal (under inclusion) among
/// primes containing it. Nonempty whenever base is proper.
std::vector<Ideal> i_minimal_primes(const Lattice& l, const Ideal& base);

}  // namespace latq
