#include "latq/boolean.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latq {

ComplementReport is_boolean_algebra(const Lattice& l) {
  ComplementReport r;
  r.complements.assign(l.size(), std::nullopt);
  if (!l.bottom() || !l.top()) {
    r.reason = "not bounded";
    return r;
  }
  if (!l.distributive()) {
    r.reason = "not distributive";
    return r;
  }
  int bot = *l.bottom(), top = *l.top();
  for (int x = 0; x < l.size(); ++x) {
    int found = -1;
    for (int y = 0; y < l.size(); ++y) {
      if (l.meet(x, y) != bot || l.join(x, y) != top) continue;
      if (found >= 0)
        throw theorem_violation("two complements in a distributive lattice");
      found = y;
    }
    if (found < 0) {
      r.failure = x;
      r.reason = "element " + l.label(x) + " has no complement";
      return r;
    }
    r.complements[x] = found;
  }
  r.is_boolean = true;
  return r;
}

BooleanVerdict quotient_boolean(const Lattice& l, const Derivation& d, const Ideal& i) {
  if (is_trivial(l, i)) throw usage_error("quotient_boolean requires a nontrivial ideal");

  // Route 1: decide directly on the quotient lattice.
  Congruence th = theta(l, d, i);
  QuotientLattice q = quotient(l, th);
  bool direct = is_boolean_algebra(q.lattice).is_boolean;

  // Route 2: witness search. For each x find y in (x)_I^d with x v y in K_I^d.
  Ideal ker = kernel_ideal(l, d, i);
  ElementSet kelems = kernel_elements(l, d, i);
  BooleanVerdict v;
  v.is_boolean = true;
  v.witness.assign(l.size(), -1);
  for (int x = 0; x < l.size() && v.is_boolean; ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (!ker.members.contains(l.meet(x, y))) continue;  // y in (x)_I^d
      if (!kelems.contains(l.join(x, y))) continue;
      v.witness[x] = y;
      break;
    }
    if (v.witness[x] < 0) {
      v.is_boolean = false;
      v.failure = x;
      v.witness.clear();
    }
  }

  if (v.is_boolean != direct) {
    std::ostringstream os;
    os << "quotient boolean verdicts disagree: direct=" << direct
       << " witness-search=" << v.is_boolean << " on ideal " << set_to_string(l, i.members);
    throw theorem_violation(os.str());
  }
  return v;
}

std::optional<ElementSet> complement_class(const Lattice& l, const Derivation& d, const Ideal& i,
                                           int x, std::string* reason) {
  BooleanVerdict v = quotient_boolean(l, d, i);
  if (!v.is_boolean) {
    if (reason) *reason = "quotient is not a boolean algebra";
    return std::nullopt;
  }
  Congruence th = theta(l, d, i);
  QuotientLattice q = quotient(l, th);
  int cx = th.class_of(x);
  int bot = *q.lattice.bottom(), top = *q.lattice.top();
  for (int cy = 0; cy < q.lattice.size(); ++cy)
    if (q.lattice.meet(cx, cy) == bot && q.lattice.join(cx, cy) == top)
      return th.class_set(cy);
  if (reason) *reason = "no complement class found";
  return std::nullopt;
}

SigmaLattice sigma_poset(const Lattice& l, const Derivation& d, const Ideal& i) {
  int n = l.size();
  std::vector<ElementSet> ann(n, ElementSet(n));
  for (int x = 0; x < n; ++x) ann[x] = annihilator(l, d, i, x).members;

  // Distinct annihilators, indexed by their smallest carrying element.
  std::vector<int> reps;
  std::map<ElementSet, int> index;
  for (int x = 0; x < n; ++x)
    if (index.try_emplace(ann[x], int(reps.size())).second) reps.push_back(x);

  int sn = int(reps.size());
  std::vector<uint8_t> leq(size_t(sn) * sn, 0);
  for (int a = 0; a < sn; ++a)
    for (int b = 0; b < sn; ++b)
      leq[size_t(a) * sn + b] = ann[reps[b]].is_subset_of(ann[reps[a]]);  // reverse inclusion
  std::vector<std::string> labels(sn);
  for (int a = 0; a < sn; ++a) labels[a] = "(" + l.label(reps[a]) + ")";

  SigmaLattice s;
  s.lattice = Lattice::from_leq(sn, leq, std::move(labels));
  s.annihilator.resize(sn, ElementSet(n));
  for (int a = 0; a < sn; ++a) s.annihilator[a] = ann[reps[a]];
  s.element_to_sigma.resize(n);
  for (int x = 0; x < n; ++x) s.element_to_sigma[x] = index[ann[x]];
  return s;
}

SigmaMaximalReport sigma_maximal_analysis(const Lattice& l, const Derivation& d, const Ideal& i) {
  SigmaMaximalReport r;
  int n = l.size();
  Ideal ker = kernel_ideal(l, d, i);
  if (int(ker.members.count()) == n) {
    r.vacuous = true;
    return r;
  }

  std::vector<ElementSet> ann(n, ElementSet(n));
  for (int x = 0; x < n; ++x) ann[x] = annihilator(l, d, i, x).members;

  // Sigma over elements outside the kernel ideal.
  std::map<ElementSet, int> sigma;  // annihilator -> smallest representative
  for (int x = 0; x < n; ++x)
    if (!ker.members.contains(x)) sigma.try_emplace(ann[x], x);

  auto fail = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };

  std::vector<Ideal> min_primes = i_minimal_primes(l, ker);
  auto is_min_prime = [&](const ElementSet& s) {
    for (const Ideal& p : min_primes)
      if (p.members == s) return true;
    return false;
  };

  ElementSet inter = ElementSet::full(n);
  for (auto& [a_set, rep] : sigma) {
    bool maximal = true;
    for (auto& [b_set, rep2] : sigma)
      if (a_set != b_set && a_set.is_subset_of(b_set)) {
        maximal = false;
        break;
      }
    bool prime = is_prime_ideal(l, Ideal{a_set});
    if (maximal != prime) {
      r.maximal_iff_prime = false;
      fail("maximal/prime mismatch at (" + l.label(rep) + ")");
    }
    if (maximal != is_min_prime(a_set)) {
      r.maximal_iff_minimal_prime = false;
      fail("maximal/minimal-prime mismatch at (" + l.label(rep) + ")");
    }
    if (maximal) {
      r.maximal_reps.push_back(rep);
      inter &= a_set;
    }
  }
  std::sort(r.maximal_reps.begin(), r.maximal_reps.end());

  if (inter != ker.members) {
    r.intersection_is_kernel = false;
    fail("maximal annihilators do not intersect to the kernel ideal");
  }

  // When the quotient is boolean, {(z) : z in (x)} has a maximum for each x.
  BooleanVerdict v = quotient_boolean(l, d, i);
  if (v.is_boolean) {
    for (int x = 0; x < n; ++x) {
      bool has_max = false;
      ann[x].for_each([&](int z) {
        bool is_max = true;
        ann[x].for_each([&](int w) {
          if (!ann[w].is_subset_of(ann[z])) is_max = false;
        });
        if (is_max) has_max = true;
      });
      if (!has_max) {
        r.complement_sets_have_maximum = false;
        fail("no maximum among annihilators of members of (" + l.label(x) + ")");
        break;
      }
    }
  }
  return r;
}

AtomReport atom_report(const Lattice& l, const Derivation& d, const Ideal& i) {
  int n = l.size();
  Ideal ker = kernel_ideal(l, d, i);

  AtomReport r;
  r.atoms = ElementSet(n);
  for (int a = 0; a < n; ++a) {
    if (ker.members.contains(a)) continue;
    bool atom = true;
    for (int x = 0; x < n && atom; ++x)
      if (x != a && l.leq(x, a) && !ker.members.contains(x)) atom = false;
    if (atom) r.atoms.insert(a);
  }

  r.atoms_below.assign(n, ElementSet(n));
  for (int x = 0; x < n; ++x) r.atoms_below[x] = r.atoms & l.down_set(x);

  r.is_atomic = true;
  r.is_atomic_literal = true;
  for (int x = 0; x < n; ++x) {
    bool has = !r.atoms_below[x].empty();
    if (!has) {
      r.is_atomic_literal = false;
      if (!ker.members.contains(x)) r.is_atomic = false;
    }
  }

  r.gamma = ElementSet(n);
  for (int a = 0; a < n; ++a)
    if (!ker.members.contains(a)) r.gamma |= annihilator(l, d, i, a).members;
  r.gamma -= ker.members;
  return r;
}

TwoElementReport two_element_criterion(const Lattice& l, const Derivation& d, const Ideal& i) {
  if (is_trivial(l, i)) throw usage_error("two_element_criterion requires a nontrivial ideal");
  TwoElementReport r;
  Congruence th = theta(l, d, i);
  r.quotient_is_two = (th.num_classes() == 2);
  r.kernel_prime = is_prime_ideal(l, kernel_ideal(l, d, i));
  if (r.quotient_is_two != r.kernel_prime)
    throw theorem_violation("two-element quotient and prime kernel ideal disagree on " +
                            set_to_string(l, i.members));
  return r;
}

}  // namespace latq
