#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latq/ideal.hpp"
#include "latq/lattice.hpp"

namespace latq {

/// Self-map satisfying d(x^y) = d(x)^y = x^d(y) and d(xvy) = d(x)vd(y).
/// Stored as an explicit table so derivations compare, hash and serialize.
struct Derivation {
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  friend bool operator==(const Derivation& a, const Derivation& b) { return a.map == b.map; }
  friend bool operator<(const Derivation& a, const Derivation& b) { return a.map < b.map; }
};

struct DerivationCheck {
  bool ok = false;
  std::string violated_axiom;            // empty when ok
  std::optional<std::pair<int, int>> witness;  // first failing pair
};

/// Checks both derivation axioms over all pairs, reporting the first failure.
DerivationCheck is_derivation(const Lattice& l, const std::vector<int>& map);

/// x -> a^x. A derivation on every distributive lattice.
Derivation lambda_derivation(const Lattice& l, int a);

Derivation identity_derivation(const Lattice& l);

/// All derivations. When the lattice has a top this is exactly
/// {lambda_t : t in L}; otherwise falls back to a constrained search over
/// contracting maps. Requires a distributive lattice.
std::vector<Derivation> enumerate_derivations(const Lattice& l);

namespace detail {
/// The search fallback, exposed so it can be tested against the direct
/// construction (finite lattices always have a top, so it is never reached
/// through the public entry point).
std::vector<Derivation> enumerate_derivations_search(const Lattice& l);
}  // namespace detail

/// ker_I d = d^{-1}(I); an ideal containing I.
Ideal kernel_ideal(const Lattice& l, const Derivation& d, const Ideal& i);

/// (a)_I^d = {x : d(a^x) in I} = (d o lambda_a)^{-1}(I); an ideal.
Ideal annihilator(const Lattice& l, const Derivation& d, const Ideal& i, int a);

/// K_I^d = {a : (a)_I^d = ker_I d}; a filter when nonempty.
ElementSet kernel_elements(const Lattice& l, const Derivation& d, const Ideal& i);

/// "x:d(x),y:d(y),..." using labels; the format the CLI --map flag accepts.
std::string derivation_to_string(const Lattice& l, const Derivation& d);

}  // namespace latq
