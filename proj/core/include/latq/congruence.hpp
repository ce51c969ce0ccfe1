#pragma once

#include <vector>

#include "latq/derivation.hpp"
#include "latq/ideal.hpp"
#include "latq/lattice.hpp"

namespace latq {

/// Partition of the carrier; class ids are assigned by smallest member so the
/// representation is canonical for a given partition.
class Congruence {
 public:
  /// Validates that `classes` is a partition (nonempty, disjoint, covering).
  static Congruence from_classes(const Lattice& l, std::vector<ElementSet> classes);
  static Congruence from_class_of(const Lattice& l, const std::vector<int>& class_of);

  int num_classes() const { return int(classes_.size()); }
  int carrier_size() const { return int(class_of_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  const ElementSet& class_set(int c) const { return classes_[c]; }
  const std::vector<ElementSet>& classes() const { return classes_; }
  int representative(int c) const { return classes_[c].min(); }
  bool related(int x, int y) const { return class_of_[x] == class_of_[y]; }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.class_of_ == b.class_of_;
  }
  friend bool operator<(const Congruence& a, const Congruence& b) {
    return a.class_of_ < b.class_of_;
  }

 private:
  std::vector<int> class_of_;
  std::vector<ElementSet> classes_;
};

/// Compatibility with meet and join over all triples.
bool is_congruence(const Lattice& l, const Congruence& c);

Congruence identity_congruence(const Lattice& l);  // all singletons
Congruence all_congruence(const Lattice& l);       // one class

/// theta_I^d: x related to y iff (x)_I^d = (y)_I^d. Always a lattice
/// congruence; the kernel ideal is its bottom class and the kernel elements
/// its top class. Rejects the trivial ideal unless allow_trivial (then the
/// result is the one-class congruence).
Congruence theta(const Lattice& l, const Derivation& d, const Ideal& i,
                 bool allow_trivial = false);

/// ker(d): x related to y iff d(x) = d(y).
Congruence kernel_congruence(const Lattice& l, const Derivation& d);

struct QuotientLattice {
  Lattice lattice;              // on class ids
  std::vector<int> projection;  // element -> class id
  std::vector<int> section;     // class id -> smallest member
};

/// Quotient with operations induced on classes; well-definedness is asserted
/// exhaustively. Rejects partitions that fail is_congruence.
QuotientLattice quotient(const Lattice& l, const Congruence& c);

enum class CongruenceOrder { equal, finer, coarser, incomparable };

const char* to_string(CongruenceOrder o);

/// Refinement comparison as relations: `finer` means a is strictly below b.
CongruenceOrder compare(const Congruence& a, const Congruence& b);

/// True iff a <= b as relations (a refines b).
bool refines(const Congruence& a, const Congruence& b);

/// Smallest congruence identifying a and b.
Congruence principal_congruence(const Lattice& l, int a, int b);

/// Join in the congruence lattice (transitive closure of the union).
Congruence join(const Lattice& l, const Congruence& a, const Congruence& b);

/// Every congruence, generated as the join closure of the principal
/// congruences. Exhaustive but meant for small n (congruence counts are
/// 2^(join-irreducibles) on distributive lattices; fine for n <= 12).
std::vector<Congruence> enumerate_congruences(const Lattice& l);

}  // namespace latq
