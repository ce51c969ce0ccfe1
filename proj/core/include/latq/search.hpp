#pragma once

#include <string>
#include <vector>

#include "latq/lattice.hpp"

namespace latq {

/// Per-(lattice, ideal) record produced by the open-question sweep: the set
/// of congruences theta_I^d over all derivations, whether the identity
/// derivation gives the minimum among those with boolean quotients, and the
/// candidate ideal-side conditions that might characterise it.
struct IdealFinding {
  std::string lattice_key;
  int n = 0;
  std::vector<std::string> ideal;      // member labels
  int distinct_thetas = 0;
  bool all_quotients_boolean = false;
  bool id_theta_minimum = false;       // theta_I^id below every boolean-quotient theta_I^d
  bool ideal_prime = false;            // = ker_I(id) prime
  bool atomic_partition_condition = false;  // ker-atomic + complementary atom partition per element
  bool id_theta_is_identity = false;   // theta_I^id = Delta
};

/// How one congruence-family statement fares over the corpus: in every family
/// theta_I^id is claimed to be a lower bound; counterexamples are counted.
struct FamilyTally {
  std::string id;          // e.g. "family-i", "family-ii.literal"
  std::string statement;
  long cases = 0;          // (lattice, ideal) pairs examined
  long counterexamples = 0;
  std::string first_counterexample;
};

struct ConditionTally {
  std::string condition;   // candidate ideal-side condition
  long tt = 0, tf = 0, ft = 0, ff = 0;  // condition x target confusion counts
};

struct SearchOptions {
  int max_size = 6;
  long budget = -1;  // max (lattice, ideal) cases; negative = unlimited
};

struct SearchFindings {
  std::vector<IdealFinding> findings;
  std::vector<FamilyTally> families;
  std::vector<ConditionTally> conditions;
  long cases = 0;
  bool partial = false;  // budget exhausted
};

SearchFindings open_question_search(const SearchOptions& opt);

}  // namespace latq
