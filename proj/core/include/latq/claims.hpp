#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latq/boolean.hpp"
#include "latq/congruence.hpp"
#include "latq/derivation.hpp"
#include "latq/generate.hpp"
#include "latq/ideal.hpp"
#include "latq/lattice.hpp"

namespace latq {

/// Everything the claim checks need about one lattice, computed once.
struct LatticeContext {
  const Lattice* l = nullptr;
  std::string key_hex;                 // canonical key, for witness strings
  std::vector<Derivation> derivations;
  std::vector<Ideal> ideals;           // all ideals (principal, by generator index)
  std::vector<char> ideal_prime;       // aligned with `ideals`
  std::vector<int> nontrivial;         // indices into `ideals` of proper ideals
  std::vector<Congruence> congruences; // the whole congruence lattice
  ComplementReport boolean_self;       // is_boolean_algebra(*l)
};

LatticeContext make_lattice_context(const Lattice& l);

/// One fully evaluated (lattice, derivation, ideal) case.
struct Scenario {
  const LatticeContext* ctx = nullptr;
  const Lattice* l = nullptr;
  Derivation d;
  Ideal i;

  Ideal ker;
  bool ker_is_all = false;
  std::vector<ElementSet> ann;  // (x)_I^d per element
  ElementSet kelems;            // K_I^d
  Congruence th;
  QuotientLattice q;
  AtomReport atoms;
  BooleanVerdict verdict;

  bool in_ker(int x) const { return ker.members.contains(x); }
  std::string describe() const;  // compact witness prefix "L=... I=... d=..."
};

Scenario make_scenario(const LatticeContext& ctx, const Derivation& d, const Ideal& i);

enum class ClaimStatus { pass, fail, skip };
enum class ClaimLevel { lattice, derivation, scenario };

struct ClaimResult {
  ClaimStatus status = ClaimStatus::pass;
  std::string witness;  // failure detail or skip reason
};

ClaimResult claim_pass();
ClaimResult claim_fail(std::string witness);
ClaimResult claim_skip(std::string reason);

struct ClaimContext {
  const LatticeContext* lat = nullptr;
  const Derivation* d = nullptr;   // derivation level and below
  const Scenario* sc = nullptr;    // scenario level only
};

struct ClaimDef {
  std::string id;
  ClaimLevel level = ClaimLevel::scenario;
  bool gate = true;    // part of the verification exit gate
  std::string statement;
  std::function<ClaimResult(const ClaimContext&)> run;
};

/// The full catalog of verified laws. Ids are stable; gate=false entries are
/// informational (laws recorded as failing in general, or auxiliary readings).
const std::vector<ClaimDef>& claim_catalog();

struct ClaimTally {
  std::string id;
  bool gate = true;
  std::string statement;
  long pass = 0, fail = 0, skip = 0;
  std::string first_failure;        // witness of the first failing case
  std::string reproducer_document;  // lattice file reproducing it (with comments)
};

struct VerifyOptions {
  int max_size = 7;
  std::vector<std::string> claims;  // empty = all; otherwise ids or id prefixes
  bool fail_fast = false;           // stop sweeping after the first gate failure
};

struct VerifyReport {
  std::vector<ClaimTally> tallies;
  long lattices = 0;
  long scenarios = 0;
  bool aborted = false;  // fail_fast triggered

  bool gates_ok() const;
  long gate_failures() const;
};

/// Sweeps every distributive lattice up to max_size, every derivation and
/// every nontrivial ideal, evaluating the selected claims on each case.
VerifyReport run_verify(const VerifyOptions& opt);

/// Corpus-wide sweep over caller-supplied lattices (used by tests).
VerifyReport run_verify_on(const std::vector<Lattice>& corpus, const VerifyOptions& opt);

}  // namespace latq
