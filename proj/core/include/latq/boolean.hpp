#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latq/congruence.hpp"
#include "latq/derivation.hpp"
#include "latq/ideal.hpp"
#include "latq/lattice.hpp"

namespace latq {

/// Complement table of a lattice. In a distributive lattice complements are
/// unique; uniqueness is asserted.
struct ComplementReport {
  bool is_boolean = false;
  std::vector<std::optional<int>> complements;
  std::optional<int> failure;  // element with no complement
  std::string reason;          // human-readable cause when not boolean
};

ComplementReport is_boolean_algebra(const Lattice& l);

/// Verdict for L/theta_I^d, computed twice: directly on the quotient lattice
/// and through the witness search (y in (x)_I^d with x v y a kernel element).
/// The two routes must agree; disagreement raises theorem_violation.
struct BooleanVerdict {
  bool is_boolean = false;
  std::vector<int> witness;    // per element x, the found partner y (when boolean)
  std::optional<int> failure;  // element with no witness (when not)
};

BooleanVerdict quotient_boolean(const Lattice& l, const Derivation& d, const Ideal& i);

/// The unique class [y] complementing [x] in a boolean quotient; absent with
/// a reason otherwise.
std::optional<ElementSet> complement_class(const Lattice& l, const Derivation& d, const Ideal& i,
                                           int x, std::string* reason = nullptr);

/// The annihilator sets {(x)_I^d : x in L} as a lattice under reverse
/// inclusion, with an explicit isomorphism onto the quotient.
struct SigmaLattice {
  Lattice lattice;                       // one element per distinct annihilator
  std::vector<ElementSet> annihilator;   // per sigma element
  std::vector<int> element_to_sigma;     // x -> index of (x)
};

SigmaLattice sigma_poset(const Lattice& l, const Derivation& d, const Ideal& i);

/// Maximality structure of the annihilators of elements outside the kernel
/// ideal: maximal elements coincide with the prime ones and with the
/// ker-minimal primes, and intersect to the kernel ideal.
struct SigmaMaximalReport {
  bool vacuous = false;            // kernel ideal is the whole carrier
  std::vector<int> maximal_reps;   // smallest x carrying each maximal annihilator
  bool maximal_iff_prime = true;
  bool maximal_iff_minimal_prime = true;
  bool intersection_is_kernel = true;
  bool complement_sets_have_maximum = true;  // {(z) : z in (x)} has a maximum, per x
  std::string witness;             // first failure, if any
};

SigmaMaximalReport sigma_maximal_analysis(const Lattice& l, const Derivation& d, const Ideal& i);

/// Atoms over the kernel ideal: a outside ker with every strictly smaller
/// element inside ker. `is_atomic` uses the working reading (every element
/// outside ker dominates an atom); the literal reading (every element of L
/// does) is reported alongside.
struct AtomReport {
  ElementSet atoms;
  std::vector<ElementSet> atoms_below;  // per element: atoms in its down-set
  bool is_atomic = false;
  bool is_atomic_literal = false;
  ElementSet gamma;  // union of annihilators of non-kernel elements, minus ker
};

AtomReport atom_report(const Lattice& l, const Derivation& d, const Ideal& i);

/// Quotient has exactly two classes iff the kernel ideal is prime; both sides
/// are computed independently and must agree (theorem_violation otherwise).
struct TwoElementReport {
  bool quotient_is_two = false;
  bool kernel_prime = false;
};

TwoElementReport two_element_criterion(const Lattice& l, const Derivation& d, const Ideal& i);

}  // namespace latq
