#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "latq/element_set.hpp"
#include "latq/error.hpp"

namespace latq {

enum class LatticeAxiom {
  reflexivity,
  antisymmetry,
  transitivity,
  meet_exists,
  join_exists,
  meet_table,
  join_table,
  bounds,
  distributivity,
};

const char* axiom_name(LatticeAxiom a);

struct AxiomViolation {
  LatticeAxiom axiom;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

/// Result of checking the full axiom list. Empty iff the structure is a
/// distributive lattice; `lattice_ok` ignores the distributivity entry.
struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool lattice_ok() const {
    for (const auto& v : violations)
      if (v.axiom != LatticeAxiom::distributivity) return false;
    return true;
  }
  bool distributive() const { return ok(); }
  const AxiomViolation* first() const { return violations.empty() ? nullptr : &violations[0]; }
};

/// Finite lattice on dense element indices 0..n-1. The order relation and the
/// meet/join tables are fixed at construction; values are immutable afterwards
/// and safe to share between threads. Labels are cosmetic.
class Lattice {
 public:
  /// Builds from a complete order relation (row-major n*n, leq[x*n+y] != 0
  /// meaning x <= y). Throws invalid_lattice unless the relation is a lattice
  /// order. Distributivity is recorded as a flag, not enforced.
  static Lattice from_leq(int n, const std::vector<uint8_t>& leq,
                          std::vector<std::string> labels = {});

  /// Builds from a covering relation given as (lower, upper) index pairs; the
  /// order is the reflexive-transitive closure.
  static Lattice from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int x, int y) const { return leq_[size_t(x) * n_ + y] != 0; }
  int meet(int x, int y) const { return meet_[size_t(x) * n_ + y]; }
  int join(int x, int y) const { return join_[size_t(x) * n_ + y]; }
  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }
  bool distributive() const { return distributive_; }

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  /// {x : x <= a} and {x : a <= x}.
  ElementSet down_set(int a) const;
  ElementSet up_set(int a) const;

  ElementSet carrier() const { return ElementSet::full(n_); }

  bool covers(int x, int y) const;  // y covers x (x < y with nothing between)

  /// Default-constructed value is an empty placeholder (size 0); every factory
  /// returns a populated one.
  Lattice() = default;

 private:
  int n_ = 0;
  std::vector<uint8_t> leq_;
  std::vector<int> meet_, join_;
  std::optional<int> bottom_, top_;
  bool distributive_ = false;
  std::vector<std::string> labels_;

  friend struct LatticeBuilder;
};

struct LatticeBuildResult {
  std::optional<Lattice> lattice;  // present iff report.lattice_ok()
  ValidationReport report;
};

/// Non-throwing build path: runs the poset laws, computes glb/lub tables when
/// they exist, and reports every violated axiom.
LatticeBuildResult try_build_lattice(int n, const std::vector<uint8_t>& leq,
                                     std::vector<std::string> labels = {});

/// Re-checks every axiom (poset laws, table correctness, bounds,
/// distributivity) on an already-built value.
ValidationReport validate(const Lattice& l);

/// Total order on k elements, bottom first. Rejects k < 1.
Lattice chain(int k);

/// Boolean algebra 2^k as the powerset of a k-antichain. Rejects k < 0 or k > 16.
Lattice boolean_lattice(int k);

struct LatticeFacts {
  bool is_chain = false;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), lexicographic
  std::vector<int> atoms;                   // covers of bottom
  std::vector<int> coatoms;                 // elements covered by top
};

LatticeFacts sublattice_facts(const Lattice& l);

/// Formats a subset as "{a, b}" using the lattice's labels.
std::string set_to_string(const Lattice& l, const ElementSet& s);

}  // namespace latq
