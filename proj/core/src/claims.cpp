#include "latq/claims.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "latq/canonical.hpp"
#include "latq/io.hpp"

namespace latq {

LatticeContext make_lattice_context(const Lattice& l) {
  LatticeContext ctx;
  ctx.l = &l;
  ctx.key_hex = canonical_fingerprint(l);
  ctx.derivations = enumerate_derivations(l);
  ctx.ideals = enumerate_ideals(l);
  ctx.ideal_prime.resize(ctx.ideals.size());
  for (size_t k = 0; k < ctx.ideals.size(); ++k) {
    ctx.ideal_prime[k] = is_prime_ideal(l, ctx.ideals[k]);
    if (!is_trivial(l, ctx.ideals[k])) ctx.nontrivial.push_back(int(k));
  }
  ctx.congruences = enumerate_congruences(l);
  ctx.boolean_self = is_boolean_algebra(l);
  return ctx;
}

Scenario make_scenario(const LatticeContext& ctx, const Derivation& d, const Ideal& i) {
  Scenario sc;
  sc.ctx = &ctx;
  sc.l = ctx.l;
  sc.d = d;
  sc.i = i;
  const Lattice& l = *ctx.l;
  sc.ker = kernel_ideal(l, d, i);
  sc.ker_is_all = sc.ker.members.count() == l.size();
  sc.ann.reserve(l.size());
  for (int x = 0; x < l.size(); ++x) sc.ann.push_back(annihilator(l, d, i, x).members);
  sc.kelems = kernel_elements(l, d, i);
  sc.th = theta(l, d, i);
  sc.q = quotient(l, sc.th);
  sc.atoms = atom_report(l, d, i);
  sc.verdict = quotient_boolean(l, d, i);
  return sc;
}

std::string Scenario::describe() const {
  std::ostringstream os;
  os << "L[n=" << l->size() << " key=" << ctx->key_hex << "] I=" << set_to_string(*l, i.members)
     << " d=[" << derivation_to_string(*l, d) << "]";
  return os.str();
}

ClaimResult claim_pass() { return {ClaimStatus::pass, ""}; }
ClaimResult claim_fail(std::string witness) { return {ClaimStatus::fail, std::move(witness)}; }
ClaimResult claim_skip(std::string reason) { return {ClaimStatus::skip, std::move(reason)}; }

namespace {

using CC = ClaimContext;

ClaimResult expect(bool ok, const std::string& witness) {
  return ok ? claim_pass() : claim_fail(witness);
}

std::string lbl(const Lattice& l, int x) { return l.label(x); }

ElementSet intersect_all(int n, const std::vector<ElementSet>& sets) {
  ElementSet acc = ElementSet::full(n);
  for (const ElementSet& s : sets) acc &= s;
  return acc;
}

// ---- derivation axioms and consequences ------------------------------------

ClaimResult derivation_basic(const CC& c, int part) {
  const Lattice& l = *c.lat->l;
  const Derivation& d = *c.d;
  int n = l.size();
  switch (part) {
    case 1:
      if (!l.bottom()) return claim_skip("no bottom element");
      return expect(d(*l.bottom()) == *l.bottom(), "d(bottom) != bottom");
    case 2:
      for (int x = 0; x < n; ++x)
        if (!l.leq(d(x), x)) return claim_fail("d(" + lbl(l, x) + ") above its argument");
      return claim_pass();
    case 3:
      for (int x = 0; x < n; ++x)
        if (d(d(x)) != d(x)) return claim_fail("d not idempotent at " + lbl(l, x));
      return claim_pass();
    case 4:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (l.leq(x, y) && !l.leq(d(x), d(y)))
            return claim_fail("d not monotone at (" + lbl(l, x) + "," + lbl(l, y) + ")");
      return claim_pass();
    case 5:
      for (const Ideal& i : c.lat->ideals) {
        bool closed = true;
        i.members.for_each([&](int x) { closed = closed && i.members.contains(d(x)); });
        if (!closed) return claim_fail("d(I) not inside I for I=" + set_to_string(l, i.members));
      }
      return claim_pass();
    case 6: {
      if (!l.top()) return claim_skip("no top element");
      int dt = d(*l.top());
      for (int x = 0; x < n; ++x)
        if (d(x) != l.meet(x, dt)) return claim_fail("d(x) != x ^ d(top) at " + lbl(l, x));
      return claim_pass();
    }
    case 7: {
      if (!l.top()) return claim_skip("no top element");
      int dt = d(*l.top());
      for (int x = 0; x < n; ++x) {
        if (l.leq(x, dt) && d(x) != x) return claim_fail("x <= d(top) but d(x) != x at " + lbl(l, x));
        if (l.leq(dt, x) && d(x) != dt)
          return claim_fail("x >= d(top) but d(x) != d(top) at " + lbl(l, x));
      }
      return claim_pass();
    }
  }
  return claim_skip("unknown part");
}

ClaimResult derivation_homomorphism(const CC& c) {
  const Lattice& l = *c.lat->l;
  const Derivation& d = *c.d;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (d(l.meet(x, y)) != l.meet(d(x), d(y)))
        return claim_fail("meet not preserved at (" + lbl(l, x) + "," + lbl(l, y) + ")");
      if (d(l.join(x, y)) != l.join(d(x), d(y)))
        return claim_fail("join not preserved at (" + lbl(l, x) + "," + lbl(l, y) + ")");
    }
  return claim_pass();
}

// ---- annihilator ideal laws -------------------------------------------------

ClaimResult annihilator_properties(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  int n = l.size();
  switch (part) {
    case 1: {
      if (!is_ideal(l, s.ker.members)) return claim_fail("kernel ideal is not an ideal");
      for (int a = 0; a < n; ++a)
        if (!is_ideal(l, s.ann[a])) return claim_fail("(" + lbl(l, a) + ") is not an ideal");
      return claim_pass();
    }
    case 2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (l.leq(a, b) && !s.ann[b].is_subset_of(s.ann[a]))
            return claim_fail("antitone fails at (" + lbl(l, a) + "," + lbl(l, b) + ")");
      return claim_pass();
    case 3:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (s.ann[l.join(a, b)] != (s.ann[a] & s.ann[b]))
            return claim_fail("(avb) != (a) n (b) at (" + lbl(l, a) + "," + lbl(l, b) + ")");
      return claim_pass();
    case 4:
      if (!s.i.members.is_subset_of(s.ker.members)) return claim_fail("I not inside kernel");
      for (int a = 0; a < n; ++a)
        if (!s.ker.members.is_subset_of(s.ann[a]))
          return claim_fail("kernel not inside (" + lbl(l, a) + ")");
      return claim_pass();
    case 5:
      for (int a = 0; a < n; ++a) {
        bool in_ker = s.in_ker(a);
        bool self = s.ann[a].contains(a);
        bool all = s.ann[a].count() == n;
        if (in_ker != self || self != all)
          return claim_fail("membership collapse fails at " + lbl(l, a));
      }
      return claim_pass();
    case 6:
      return expect(intersect_all(n, s.ann) == s.ker.members,
                    "intersection of annihilators differs from the kernel ideal");
    case 7:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (s.ann[b].contains(a) != s.ann[a].contains(b))
            return claim_fail("symmetry fails at (" + lbl(l, a) + "," + lbl(l, b) + ")");
      return claim_pass();
    case 9:
      for (int a = 0; a < n; ++a) {
        if (s.ann[a].count() == n) continue;
        ElementSet acc = ElementSet::full(n);
        s.ann[a].for_each([&](int b) { acc &= s.ann[b]; });
        if (acc == s.ker.members)
          return claim_fail("members of proper (" + lbl(l, a) + ") intersect down to the kernel");
      }
      return claim_pass();
    case 10:
      for (const Ideal& j : c.lat->ideals) {
        if (!s.i.members.is_subset_of(j.members)) continue;
        Ideal ker_j = kernel_ideal(l, s.d, j);
        if (!s.ker.members.is_subset_of(ker_j.members))
          return claim_fail("kernel not monotone into J=" + set_to_string(l, j.members));
        for (int a = 0; a < n; ++a)
          if (!s.ann[a].is_subset_of(annihilator(l, s.d, j, a).members))
            return claim_fail("annihilator not monotone at " + lbl(l, a) +
                              " into J=" + set_to_string(l, j.members));
      }
      return claim_pass();
  }
  return claim_skip("unknown part");
}

// ---- kernel elements --------------------------------------------------------

ClaimResult kernel_elements_claims(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  int n = l.size();
  switch (part) {
    case 1:
      if (s.kelems.empty()) return claim_skip("no kernel elements");
      return expect(is_filter(l, s.kelems), "kernel elements do not form a filter");
    case 2:
      return expect((s.ker.members.count() == n) == (s.kelems.count() == n),
                    "kernel ideal trivial iff kernel elements everything fails");
    case 3: {
      if (s.kelems.count() == n) return claim_skip("kernel elements trivial");
      for (int a = 0; a < n; ++a) {
        if (s.ann[a].count() == n) continue;
        if (!(s.kelems & s.ann[a]).empty())
          return claim_fail("kernel elements meet proper (" + lbl(l, a) + ")");
      }
      return claim_pass();
    }
    case 4:
      for (int x = 0; x < n; ++x) {
        if (s.ann[x] != s.ann[s.d(x)])
          return claim_fail("(x) != (d(x)) at " + lbl(l, x));
        if (!s.th.related(x, s.d(x)))
          return claim_fail("x not congruent to d(x) at " + lbl(l, x));
      }
      return claim_pass();
    case 5:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (s.th.related(x, y) && !s.th.related(s.d(x), s.d(y)))
            return claim_fail("congruence not preserved by d at (" + lbl(l, x) + "," + lbl(l, y) +
                              ")");
      return claim_pass();
  }
  return claim_skip("unknown part");
}

ClaimResult quotient_bounds(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& ql = s.q.lattice;
  if (!ql.bottom() || !ql.top()) return claim_fail("quotient not bounded");
  if (s.th.class_set(*ql.bottom()) != s.ker.members)
    return claim_fail("bottom class differs from the kernel ideal");
  if (s.kelems.empty()) return claim_skip("no kernel elements");
  if (s.th.class_set(*ql.top()) != s.kelems)
    return claim_fail("top class differs from the kernel elements");
  return claim_pass();
}

ClaimResult kernel_nonempty(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  int n = l.size();
  switch (part) {
    case 1: {
      if (!l.top()) return claim_skip("no top element");
      return expect(s.kelems.contains(*l.top()) && s.kelems.contains(s.d(*l.top())),
                    "top or d(top) not a kernel element");
    }
    case 2: {
      bool i_prime = is_prime_ideal(l, s.i);
      bool ker_prime = !s.ker_is_all && is_prime_ideal(l, s.ker);
      if (!i_prime && !ker_prime) return claim_skip("neither I nor the kernel ideal is prime");
      if (s.kelems.empty()) return claim_fail("prime hypothesis but no kernel elements");
      if (!s.ker_is_all) {
        if ((s.ker.members & s.kelems).count() != 0 ||
            (s.ker.members | s.kelems).count() != n)
          return claim_fail("carrier is not the disjoint union of kernel ideal and kernel elements");
        if (s.th.num_classes() != 2) return claim_fail("congruence does not have two classes");
      }
      return claim_pass();
    }
    case 3: {
      if (!sublattice_facts(l).is_chain) return claim_skip("not a chain");
      return expect(!s.kelems.empty(), "chain with empty kernel element set");
    }
  }
  return claim_skip("unknown part");
}

ClaimResult greatest_congruence(const CC& c) {
  const Scenario& s = *c.sc;
  for (const Congruence& th : c.lat->congruences) {
    bool has_class = false;
    for (const ElementSet& cls : th.classes())
      if (cls == s.ker.members) has_class = true;
    if (has_class && !refines(th, s.th))
      return claim_fail("congruence with the kernel class not below theta");
  }
  return claim_pass();
}

ClaimResult identity_refines(const CC& c) {
  const Scenario& s = *c.sc;
  Congruence ti = theta(*s.l, identity_derivation(*s.l), s.i);
  return expect(refines(ti, s.th), "identity-derivation congruence not below theta");
}

ClaimResult theta_kernel_ideal(const CC& c, bool equality) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (equality) {
    Congruence t = theta(l, s.d, s.ker, /*allow_trivial=*/true);
    return expect(t == s.th, "theta over the kernel ideal differs");
  }
  for (const Derivation& d1 : c.lat->derivations) {
    Ideal j = kernel_ideal(l, d1, s.i);
    Congruence tj = theta(l, s.d, j, /*allow_trivial=*/true);
    if (!refines(s.th, tj))
      return claim_fail("theta not below theta over J=ker of d1=[" + derivation_to_string(l, d1) +
                        "]");
  }
  return claim_pass();
}

ClaimResult annihilator_base(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  int n = l.size();
  for (int a = 0; a < n; ++a) {
    Ideal j{s.ann[a]};
    switch (part) {
      case 1: {
        if (annihilator(l, s.d, j, a).members != s.ann[a])
          return claim_fail("(a) over J differs at " + lbl(l, a));
        if (!kernel_elements(l, s.d, j).contains(a))
          return claim_fail("a not a kernel element over J at " + lbl(l, a));
        break;
      }
      case 2:
      case 3:
      case 5:
        for (const Ideal& k : c.lat->ideals) {
          if (!s.i.members.is_subset_of(k.members) || !k.members.is_subset_of(j.members)) continue;
          if (part == 2) {
            if (annihilator(l, s.d, k, a).members != s.ann[a])
              return claim_fail("(a) changes between I and J at " + lbl(l, a) +
                                " via K=" + set_to_string(l, k.members));
          } else if (part == 3) {
            Congruence tk = theta(l, s.d, k, true);
            Congruence tj = theta(l, s.d, j, true);
            if (!refines(s.th, tk) || !refines(tk, tj))
              return claim_fail("theta chain fails at " + lbl(l, a) +
                                " via K=" + set_to_string(l, k.members));
          } else {
            // the provable outer inclusions of the chain
            Congruence tk = theta(l, s.d, k, true);
            Congruence tj = theta(l, s.d, j, true);
            if (!refines(s.th, tj) || !refines(tk, tj))
              return claim_fail("outer inclusion fails at " + lbl(l, a) +
                                " via K=" + set_to_string(l, k.members));
          }
        }
        break;
      case 4:
        if (s.kelems.contains(a)) {
          Congruence tj = theta(l, s.d, j, true);
          if (!(tj == s.th))
            return claim_fail("equality fails for kernel element " + lbl(l, a));
        }
        break;
    }
  }
  return claim_pass();
}

ClaimResult prime_ideal_structure(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  int n = l.size();
  switch (part) {
    case 1: {
      if (!is_prime_ideal(l, s.i)) return claim_skip("I not prime");
      if (s.ker_is_all) return claim_pass();
      for (int x = 0; x < n; ++x)
        if (!s.in_ker(x) &&
            (s.i.members != s.ker.members || s.ann[x] != s.ker.members))
          return claim_fail("I = ker = (x) fails at " + lbl(l, x));
      return claim_pass();
    }
    case 2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (s.ann[x].is_subset_of(s.ann[y])) continue;
          if (!is_ideal(l, s.ann[y]) || !is_prime_ideal(l, Ideal{s.ann[y]})) continue;
          if (!s.in_ker(l.meet(x, y)))
            return claim_fail("x^y outside kernel at (" + lbl(l, x) + "," + lbl(l, y) + ")");
        }
      return claim_pass();
    case 3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (s.ann[x] == s.ann[y]) continue;
          if (s.ann[x].count() == n || s.ann[y].count() == n) continue;
          if (!is_prime_ideal(l, Ideal{s.ann[x]}) || !is_prime_ideal(l, Ideal{s.ann[y]})) continue;
          if (!s.in_ker(l.meet(x, y)))
            return claim_fail("prime annihilators but x^y outside kernel at (" + lbl(l, x) + "," +
                              lbl(l, y) + ")");
        }
      return claim_pass();
  }
  return claim_skip("unknown part");
}

ClaimResult three_class_quotient(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  bool lhs = false;
  if (s.th.num_classes() == 3) {
    int bot = s.q.lattice.bottom() ? *s.q.lattice.bottom() : -1;
    std::vector<int> others;
    for (int k = 0; k < 3; ++k)
      if (k != bot) others.push_back(k);
    lhs = true;
    s.th.class_set(others[0]).for_each([&](int x) {
      s.th.class_set(others[1]).for_each([&](int y) {
        if (!s.in_ker(l.meet(x, y))) lhs = false;
      });
    });
    if (s.th.class_set(bot) != s.ker.members) lhs = false;
  }
  bool rhs = false;
  for (size_t p = 0; p < c.lat->ideals.size() && !rhs; ++p) {
    if (!c.lat->ideal_prime[p]) continue;
    for (size_t q = 0; q < c.lat->ideals.size() && !rhs; ++q) {
      if (!c.lat->ideal_prime[q]) continue;
      const ElementSet& a = c.lat->ideals[p].members;
      const ElementSet& b = c.lat->ideals[q].members;
      if ((a | b).count() == l.size() && (a & b) == s.ker.members) rhs = true;
    }
  }
  return expect(lhs == rhs, std::string("three-class criterion: lhs=") + (lhs ? "1" : "0") +
                                " rhs=" + (rhs ? "1" : "0"));
}

// ---- sigma maximality -------------------------------------------------------

ClaimResult sigma_maximal(const CC& c, int what) {
  const Scenario& s = *c.sc;
  if (s.ker_is_all) return claim_pass();  // sigma over non-kernel elements is empty
  SigmaMaximalReport r = sigma_maximal_analysis(*s.l, s.d, s.i);
  switch (what) {
    case 0:
      return expect(r.maximal_iff_prime && r.maximal_iff_minimal_prime, r.witness);
    case 1:
      return expect(r.intersection_is_kernel, r.witness);
  }
  return claim_skip("unknown part");
}

ClaimResult minimal_primes_are_annihilators(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  for (const Ideal& p : i_minimal_primes(l, s.ker)) {
    bool found = false;
    for (int a = 0; a < l.size() && !found; ++a)
      if (s.ann[a] == p.members) found = true;
    if (!found)
      return claim_fail("minimal prime " + set_to_string(l, p.members) + " is not an annihilator");
  }
  return claim_pass();
}

ClaimResult minimal_primes_meet_at_kernel(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  ElementSet acc = ElementSet::full(l.size());
  for (const Ideal& p : i_minimal_primes(l, s.ker)) acc &= p.members;
  return expect(acc == s.ker.members, "minimal primes do not intersect to the kernel ideal");
}

// ---- collapse criteria ------------------------------------------------------

ClaimResult collapse_criterion(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  bool nabla = s.th.num_classes() == 1;
  bool ker_all = s.ker_is_all;
  if (part == 0) return expect(nabla == ker_all, "theta=all iff kernel=carrier fails");
  Congruence kd = kernel_congruence(l, s.d);
  bool singletons = true;
  for (int x = 0; x < l.size(); ++x)
    if ((s.i.members & kd.class_set(kd.class_of(x))).count() != 1) singletons = false;
  if (part == 1)
    return expect(ker_all == singletons, "kernel=carrier iff singleton intersections fails");
  // the provable direction: singleton intersections force total collapse
  if (!singletons) return claim_skip("intersections not singletons");
  return expect(ker_all && nabla, "singleton intersections without total collapse");
}

ClaimResult kernel_congruence_refines(const CC& c) {
  const Scenario& s = *c.sc;
  return expect(refines(kernel_congruence(*s.l, s.d), s.th),
                "ker(d) not below theta");
}

// ---- boolean quotient -------------------------------------------------------

ClaimResult quotient_boolean_witness(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!s.verdict.is_boolean) {
    // two routes already agreed (construction would have thrown otherwise)
    return claim_pass();
  }
  for (int x = 0; x < l.size(); ++x) {
    int y = s.verdict.witness[x];
    if (!s.in_ker(l.meet(x, y)) || !s.kelems.contains(l.join(x, y)))
      return claim_fail("witness for " + lbl(l, x) + " violates the kernel conditions");
  }
  return claim_pass();
}

ClaimResult quotient_complement_pairs(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!s.verdict.is_boolean) return claim_skip("quotient not boolean");
  const Lattice& ql = s.q.lattice;
  int bot = *ql.bottom(), top = *ql.top();
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      int cx = s.th.class_of(x), cy = s.th.class_of(y);
      bool complement = ql.meet(cx, cy) == bot && ql.join(cx, cy) == top;
      bool condition = s.in_ker(l.meet(x, y)) && s.kelems.contains(l.join(x, y));
      if (complement != condition)
        return claim_fail("complement pair criterion fails at (" + lbl(l, x) + "," + lbl(l, y) +
                          ")");
    }
  return claim_pass();
}

ClaimResult prime_implies_boolean(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (part == 1) {
    bool i_prime = is_prime_ideal(l, s.i);
    bool ker_prime = !s.ker_is_all && is_prime_ideal(l, s.ker);
    if (!i_prime && !ker_prime) return claim_skip("neither I nor the kernel ideal is prime");
    return expect(s.verdict.is_boolean, "prime hypothesis but quotient not boolean");
  }
  // every (x) with a maximum element forces a boolean quotient
  for (int x = 0; x < l.size(); ++x) {
    bool has_max = false;
    s.ann[x].for_each([&](int m) {
      bool max = true;
      s.ann[x].for_each([&](int z) {
        if (!l.leq(z, m)) max = false;
      });
      if (max) has_max = true;
    });
    if (!has_max) return claim_skip("some annihilator lacks a maximum");
  }
  return expect(s.verdict.is_boolean, "maxima everywhere but quotient not boolean");
}

ClaimResult two_element_claim(const CC& c) {
  const Scenario& s = *c.sc;
  try {
    two_element_criterion(*s.l, s.d, s.i);
  } catch (const theorem_violation& tv) {
    return claim_fail(tv.what());
  }
  return claim_pass();
}

ClaimResult sigma_isomorphism(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  SigmaLattice sig = sigma_poset(l, s.d, s.i);
  const Lattice& ql = s.q.lattice;
  if (sig.lattice.size() != ql.size()) return claim_fail("sigma and quotient sizes differ");

  std::vector<int> to_sigma(ql.size());
  std::vector<char> hit(ql.size(), 0);
  for (int cl = 0; cl < ql.size(); ++cl) {
    to_sigma[cl] = sig.element_to_sigma[s.q.section[cl]];
    if (hit[to_sigma[cl]]++) return claim_fail("class map to sigma not injective");
  }
  for (int a = 0; a < ql.size(); ++a)
    for (int b = 0; b < ql.size(); ++b) {
      if (ql.leq(a, b) != sig.lattice.leq(to_sigma[a], to_sigma[b]))
        return claim_fail("order not preserved by the sigma isomorphism");
      if (to_sigma[ql.meet(a, b)] != sig.lattice.meet(to_sigma[a], to_sigma[b]) ||
          to_sigma[ql.join(a, b)] != sig.lattice.join(to_sigma[a], to_sigma[b]))
        return claim_fail("operations not preserved by the sigma isomorphism");
    }
  // (x)v(y) = (xvy), (x)^(y) = (x^y) read on representatives
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      int sx = sig.element_to_sigma[x], sy = sig.element_to_sigma[y];
      if (sig.element_to_sigma[l.meet(x, y)] != sig.lattice.meet(sx, sy) ||
          sig.element_to_sigma[l.join(x, y)] != sig.lattice.join(sx, sy))
        return claim_fail("sigma operations disagree with annihilators of meets/joins");
    }
  if (sig.annihilator[to_sigma[*ql.bottom()]].count() != l.size())
    return claim_fail("sigma bottom is not the full annihilator");
  if (sig.annihilator[to_sigma[*ql.top()]] != s.ker.members)
    return claim_fail("sigma top is not the kernel ideal");
  return claim_pass();
}

ClaimResult complement_annihilator_maximum(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!s.verdict.is_boolean) return claim_skip("quotient not boolean");
  for (int x = 0; x < l.size(); ++x) {
    bool has_max = false;
    s.ann[x].for_each([&](int z) {
      bool max = true;
      s.ann[x].for_each([&](int w) {
        if (!s.ann[w].is_subset_of(s.ann[z])) max = false;
      });
      if (max) has_max = true;
    });
    if (!has_max)
      return claim_fail("annihilators of members of (" + lbl(l, x) + ") lack a maximum");
  }
  return claim_pass();
}

ClaimResult unique_congruence(const CC& c, bool require_boolean_theta) {
  const Scenario& s = *c.sc;
  if (!s.verdict.is_boolean) return claim_skip("quotient not boolean");
  for (const Congruence& th : c.lat->congruences) {
    bool has_class = false;
    for (const ElementSet& cls : th.classes())
      if (cls == s.ker.members) has_class = true;
    if (!has_class) continue;
    if (require_boolean_theta &&
        !is_boolean_algebra(quotient(*s.l, th).lattice).is_boolean)
      continue;
    if (!(th == s.th))
      return claim_fail("another congruence has the kernel ideal as a class (" +
                        std::to_string(th.num_classes()) + " classes)");
  }
  return claim_pass();
}

ClaimResult identity_collapse_corollary(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!l.bottom()) return claim_skip("no bottom element");
  ElementSet just_bottom(l.size());
  just_bottom.insert(*l.bottom());
  if (s.ker.members != just_bottom) return claim_skip("kernel ideal is not {bottom}");
  if (!s.verdict.is_boolean) return claim_skip("quotient not boolean");
  return expect(s.th == identity_congruence(l), "kernel {bottom} but theta not the identity");
}

// ---- atoms ------------------------------------------------------------------

bool atomic_gate(const Scenario& s) { return s.atoms.is_atomic; }

ClaimResult atom_join_covers(const CC& c, bool gated) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (gated && !atomic_gate(s)) return claim_skip("not kernel-atomic");
  if (!l.top()) return claim_skip("no top element");
  auto atoms = s.atoms.atoms.members();
  int top = *l.top();
  for (uint32_t mask = 0; mask < (uint32_t{1} << atoms.size()); ++mask) {
    int join = -1;
    for (size_t k = 0; k < atoms.size(); ++k)
      if ((mask >> k) & 1) join = join < 0 ? atoms[k] : l.join(join, atoms[k]);
    if (join != top) continue;
    for (int x = 0; x < l.size(); ++x) {
      if (x == top) continue;
      bool covered = false;
      for (size_t k = 0; k < atoms.size() && !covered; ++k)
        if (((mask >> k) & 1) && s.ann[atoms[k]].contains(x)) covered = true;
      if (!covered)
        return claim_fail("element " + lbl(l, x) + " missed by the annihilators of a covering atom set");
    }
  }
  return claim_pass();
}

ClaimResult atom_annihilator_intersection(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  ElementSet acc = ElementSet::full(l.size());
  s.atoms.atoms.for_each([&](int a) { acc &= s.ann[a]; });
  return expect(acc == s.ker.members, "atom annihilators do not intersect to the kernel ideal");
}

ClaimResult atoms_congruence(const CC& c, int part) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  int n = l.size();
  switch (part) {
    case 1:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (s.th.related(a, b) != (s.atoms.atoms_below[a] == s.atoms.atoms_below[b]))
            return claim_fail("congruence and atom sets disagree at (" + lbl(l, a) + "," +
                              lbl(l, b) + ")");
      return claim_pass();
    case 2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (s.in_ker(l.meet(a, b)) !=
              (s.atoms.atoms_below[a] & s.atoms.atoms_below[b]).empty())
            return claim_fail("orthogonality and atom sets disagree at (" + lbl(l, a) + "," +
                              lbl(l, b) + ")");
      return claim_pass();
    case 3:
      for (int a = 0; a < n; ++a)
        if (s.atoms.atoms_below[a] == s.atoms.atoms && !s.kelems.contains(a))
          return claim_fail("all atoms below " + lbl(l, a) + " but not a kernel element");
      return claim_pass();
    case 4: {
      int x = -1;
      bool empty = true;
      s.atoms.atoms.for_each([&](int a) {
        x = x < 0 ? a : l.join(x, a);
        empty = false;
      });
      if (empty) x = l.bottom() ? *l.bottom() : -1;
      if (x < 0) return claim_skip("no join of atoms available");
      return expect(s.kelems.contains(x), "join of all atoms is not a kernel element");
    }
  }
  return claim_skip("unknown part");
}

ClaimResult atom_annihilator_maximal(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  for (int a = 0; a < l.size(); ++a) {
    if (!s.atoms.atoms.contains(a)) continue;
    for (int x = 0; x < l.size(); ++x) {
      if (s.in_ker(x)) continue;
      if (s.ann[a].is_subset_of(s.ann[x]) && s.ann[a] != s.ann[x])
        return claim_fail("atom annihilator (" + lbl(l, a) + ") below (" + lbl(l, x) + ")");
    }
  }
  return claim_pass();
}

ClaimResult minimal_prime_atom_witness(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  std::vector<Ideal> min_primes = i_minimal_primes(l, s.ker);
  for (int a = 0; a < l.size(); ++a) {
    bool is_min_prime = false;
    for (const Ideal& p : min_primes)
      if (p.members == s.ann[a]) is_min_prime = true;
    bool singleton_atom =
        s.atoms.atoms_below[a].count() == 1 && !s.in_ker(a);
    if (is_min_prime != singleton_atom)
      return claim_fail("minimal-prime/atom-singleton mismatch at " + lbl(l, a));
  }
  return claim_pass();
}

ClaimResult minimal_primes_from_atoms(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  for (const Ideal& p : i_minimal_primes(l, s.ker)) {
    bool found = false;
    s.atoms.atoms.for_each([&](int a) {
      if (s.ann[a] == p.members) found = true;
    });
    if (!found)
      return claim_fail("minimal prime " + set_to_string(l, p.members) +
                        " is not an atom annihilator");
  }
  return claim_pass();
}

ClaimResult minimal_prime_decomposition(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  int n = l.size();
  std::vector<Ideal> mp = i_minimal_primes(l, s.ker);
  ElementSet inter = ElementSet::full(n);
  ElementSet uni(n);
  for (const Ideal& p : mp) {
    inter &= p.members;
    uni |= p.members;
  }
  if (inter != s.ker.members) return claim_fail("minimal primes do not meet at the kernel ideal");
  for (size_t j = 0; j < mp.size(); ++j) {
    ElementSet rest = ElementSet::full(n);
    for (size_t i2 = 0; i2 < mp.size(); ++i2)
      if (i2 != j) rest &= mp[i2].members;
    if (rest == s.ker.members)
      return claim_fail("minimal prime " + std::to_string(j) + " is redundant");
  }
  ElementSet outside = ElementSet::full(n) - uni;
  return expect(outside == s.kelems,
                "complement of the union of minimal primes is not the kernel element set");
}

ClaimResult orthogonality_cases(const CC& c, bool exclusive) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  int n = l.size();
  auto proper_ann = [&](int z) {
    return s.ann[z] != s.ker.members && s.ann[z].count() != n;
  };
  auto xs = s.atoms.gamma.members();
  for (int x : xs)
    for (int y : xs) {
      bool case1 = s.in_ker(l.meet(x, y));
      bool case2 = false, case3 = false;
      for (int z = 0; z < n && !case2; ++z)
        if (proper_ann(z) && s.ann[z].contains(x) && s.ann[z].contains(y)) case2 = true;
      for (int z1 = 0; z1 < n && !case3; ++z1) {
        if (!proper_ann(z1) || !s.in_ker(l.meet(x, z1))) continue;
        for (int z2 = 0; z2 < n && !case3; ++z2)
          if (proper_ann(z2) && s.in_ker(l.meet(z1, z2)) && s.in_ker(l.meet(z2, y))) case3 = true;
      }
      int hits = int(case1) + int(case2) + int(case3);
      if (exclusive) {
        if (hits != 1)
          return claim_fail("cases not exclusive at (" + lbl(l, x) + "," + lbl(l, y) +
                            "): " + std::to_string(hits) + " hold");
      } else if (hits == 0) {
        return claim_fail("no case holds at (" + lbl(l, x) + "," + lbl(l, y) + ")");
      }
    }
  return claim_pass();
}

ClaimResult upset_formula(const CC& c, bool union_reading, bool mod_kernel) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  auto up = [&](const ElementSet& a) {
    return union_reading ? up_closure(l, a) : upper_bounds(l, a);
  };
  auto xs = s.atoms.gamma.members();
  for (int a : xs) {
    ElementSet atoms_of = s.atoms.atoms_below[a];
    ElementSet atoms_not = s.atoms.atoms - atoms_of;
    ElementSet rhs = up(atoms_not) - up(atoms_of);
    ElementSet lhs = s.ann[a];
    if (mod_kernel) lhs -= s.ker.members;
    if (lhs != rhs)
      return claim_fail("formula fails at " + lbl(l, a) + ": lhs=" + set_to_string(l, lhs) +
                        " rhs=" + set_to_string(l, rhs));
  }
  return claim_pass();
}

ClaimResult orthogonal_family_bound(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  auto verts = (ElementSet::full(l.size()) - s.ker.members).members();
  int m = int(verts.size());
  std::vector<uint32_t> adj(m, 0);
  for (int i2 = 0; i2 < m; ++i2)
    for (int j = 0; j < m; ++j)
      if (i2 != j && s.in_ker(l.meet(verts[i2], verts[j]))) adj[i2] |= uint32_t{1} << j;
  int best = 0;
  // branch and bound max clique over the orthogonality graph
  std::function<void(int, uint32_t)> grow = [&](int size, uint32_t cand) {
    if (size + __builtin_popcount(cand) <= best) return;
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    int v = __builtin_ctz(cand);
    grow(size + 1, cand & adj[v] & ~((uint32_t{1} << (v + 1)) - 1));
    grow(size, cand & ~(uint32_t{1} << v));
  };
  grow(0, m >= 32 ? ~uint32_t{0} : (uint32_t{1} << m) - 1);
  int atoms = s.atoms.atoms.count();
  return expect(best <= atoms, "orthogonal family of size " + std::to_string(best) +
                                   " exceeds atom count " + std::to_string(atoms));
}

ClaimResult partition_complement_criterion(const CC& c) {
  const Scenario& s = *c.sc;
  const Lattice& l = *s.l;
  if (!atomic_gate(s)) return claim_skip("not kernel-atomic");
  const Lattice& ql = s.q.lattice;
  int bot = *ql.bottom(), top = *ql.top();
  bool rhs = true;
  std::string w;
  for (int x = 0; x < l.size() && rhs; ++x) {
    bool found = false;
    for (int y = 0; y < l.size() && !found; ++y) {
      if (!(s.atoms.atoms_below[x] & s.atoms.atoms_below[y]).empty()) continue;
      if ((s.atoms.atoms_below[x] | s.atoms.atoms_below[y]) != s.atoms.atoms) continue;
      int cx = s.th.class_of(x), cy = s.th.class_of(y);
      if (ql.meet(cx, cy) == bot && ql.join(cx, cy) == top) found = true;
    }
    if (!found) {
      rhs = false;
      w = "no atom-partition complement for " + lbl(l, x);
    }
  }
  return expect(s.verdict.is_boolean == rhs,
                "criterion mismatch: boolean=" + std::string(s.verdict.is_boolean ? "1" : "0") +
                    " condition=" + (rhs ? "1" : "0") + (w.empty() ? "" : " (" + w + ")"));
}

// ---- lattice-level claims ---------------------------------------------------

ClaimResult boolean_congruence_criterion(const CC& c) {
  const Lattice& l = *c.lat->l;
  for (const Congruence& th : c.lat->congruences) {
    QuotientLattice q = quotient(l, th);
    bool direct = is_boolean_algebra(q.lattice).is_boolean;
    bool bounded = q.lattice.bottom() && q.lattice.top();
    bool witness = bounded;
    if (bounded) {
      int a0 = q.section[*q.lattice.bottom()], b0 = q.section[*q.lattice.top()];
      for (int x = 0; x < l.size() && witness; ++x) {
        bool found = false;
        for (int y = 0; y < l.size() && !found; ++y)
          if (th.related(l.meet(x, y), a0) && th.related(l.join(x, y), b0)) found = true;
        witness = found;
      }
    }
    if (direct != witness)
      return claim_fail("general congruence criterion fails on a congruence with " +
                        std::to_string(th.num_classes()) + " classes");
  }
  return claim_pass();
}

ClaimResult boolean_identity_collapse(const CC& c) {
  const Lattice& l = *c.lat->l;
  if (!c.lat->boolean_self.is_boolean) return claim_skip("not a boolean algebra");
  if (l.size() < 2) return claim_skip("ideal {bottom} would be trivial");
  Ideal bot = principal_ideal(l, *l.bottom());
  Congruence t = theta(l, identity_derivation(l), bot);
  return expect(t == identity_congruence(l), "identity-derivation theta over {bottom} is not the identity");
}

ClaimResult bottom_minimal_primes(const CC& c) {
  const Lattice& l = *c.lat->l;
  if (l.size() < 2) return claim_skip("no proper ideals");
  Ideal bot = principal_ideal(l, *l.bottom());
  Derivation id = identity_derivation(l);
  for (const Ideal& p : i_minimal_primes(l, bot)) {
    bool found = false;
    ElementSet atoms(l.size());
    for (int a : sublattice_facts(l).atoms) atoms.insert(a);
    atoms.for_each([&](int a) {
      if (annihilator(l, id, bot, a).members == p.members) found = true;
    });
    if (!found)
      return claim_fail("minimal prime " + set_to_string(l, p.members) +
                        " is not an atom annihilator over {bottom}");
  }
  return claim_pass();
}

// ---- derivation-level boolean law --------------------------------------------

ClaimResult boolean_kernel_theta(const CC& c) {
  const Lattice& l = *c.lat->l;
  if (!c.lat->boolean_self.is_boolean) return claim_skip("not a boolean algebra");
  if (l.size() < 2) return claim_skip("ideal {bottom} would be trivial");
  Ideal bot = principal_ideal(l, *l.bottom());
  Congruence t = theta(l, *c.d, bot);
  return expect(kernel_congruence(l, *c.d) == t, "ker(d) differs from theta over {bottom}");
}

ClaimDef scenario_claim(std::string id, bool gate, std::string statement,
                        std::function<ClaimResult(const CC&)> f) {
  return {std::move(id), ClaimLevel::scenario, gate, std::move(statement), std::move(f)};
}

ClaimDef derivation_claim(std::string id, bool gate, std::string statement,
                          std::function<ClaimResult(const CC&)> f) {
  return {std::move(id), ClaimLevel::derivation, gate, std::move(statement), std::move(f)};
}

ClaimDef lattice_claim(std::string id, bool gate, std::string statement,
                       std::function<ClaimResult(const CC&)> f) {
  return {std::move(id), ClaimLevel::lattice, gate, std::move(statement), std::move(f)};
}

std::vector<ClaimDef> build_catalog() {
  std::vector<ClaimDef> cat;

  // Derivation consequences (sub-numbering kept stable).
  static const char* basic[] = {
      "d(bottom) = bottom",
      "d(x) <= x",
      "d idempotent",
      "d monotone",
      "d(I) inside I for every ideal",
      "d(x) = x ^ d(top)",
      "below d(top) fixed, above d(top) constant",
  };
  static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};
  for (int p = 1; p <= 7; ++p)
    cat.push_back(derivation_claim("derivation-basic." + std::string(roman[p - 1]), false,
                                   basic[p - 1], [p](const CC& c) { return derivation_basic(c, p); }));
  cat.push_back(derivation_claim("derivation-homomorphism", false,
                                 "every derivation preserves meet and join",
                                 derivation_homomorphism));
  cat.push_back(derivation_claim("boolean-kernel-theta", true,
                                 "on a boolean algebra, ker(d) equals theta over {bottom}",
                                 boolean_kernel_theta));

  // Annihilator ideal laws; the source numbering skips (viii).
  static const char* ann_stmts[] = {
      "kernel ideal and annihilators are ideals",
      "annihilators are antitone",
      "(avb) = (a) n (b)",
      "I inside kernel inside every annihilator",
      "a in kernel iff a in (a) iff (a) = L",
      "annihilators intersect to the kernel ideal",
      "a in (b) iff b in (a)",
      "",  // (viii) does not exist
      "members of a proper (a) do not intersect down to the kernel",
      "kernel and annihilators are monotone in the ideal",
  };
  for (int p : {1, 2, 3, 4, 5, 6, 7, 9, 10})
    cat.push_back(scenario_claim("annihilator-properties." + std::string(roman[p - 1]), true,
                                 ann_stmts[p - 1],
                                 [p](const CC& c) { return annihilator_properties(c, p); }));

  static const char* kel_stmts[] = {
      "nonempty kernel element set is a filter",
      "kernel ideal is everything iff kernel elements are",
      "nontrivial kernel elements avoid proper annihilators",
      "(x) = (d(x)) and x congruent to d(x)",
      "the congruence is preserved by d",
  };
  for (int p = 1; p <= 5; ++p)
    cat.push_back(scenario_claim("kernel-elements." + std::string(roman[p - 1]), true,
                                 kel_stmts[p - 1],
                                 [p](const CC& c) { return kernel_elements_claims(c, p); }));

  cat.push_back(scenario_claim("quotient-bounds", true,
                               "quotient bottom class is the kernel ideal, top class the kernel elements",
                               quotient_bounds));
  static const char* ne_stmts[] = {
      "top and d(top) are kernel elements",
      "prime I or prime kernel splits the carrier into kernel ideal and kernel elements",
      "chains always have kernel elements",
  };
  for (int p = 1; p <= 3; ++p)
    cat.push_back(scenario_claim("kernel-elements-nonempty." + std::string(roman[p - 1]), true,
                                 ne_stmts[p - 1], [p](const CC& c) { return kernel_nonempty(c, p); }));

  cat.push_back(scenario_claim("greatest-congruence", true,
                               "theta is the greatest congruence with the kernel ideal as a class",
                               greatest_congruence));
  cat.push_back(scenario_claim("identity-derivation-refines", true,
                               "theta of the identity derivation refines every theta",
                               identity_refines));
  cat.push_back(scenario_claim(
      "theta-under-kernel-ideal.inclusion", true,
      "theta over I lies below theta over any ideal that is a kernel of some derivation",
      [](const CC& c) { return theta_kernel_ideal(c, false); }));
  cat.push_back(scenario_claim("theta-under-kernel-ideal.equality", true,
                               "theta over the kernel ideal equals theta over I",
                               [](const CC& c) { return theta_kernel_ideal(c, true); }));

  static const char* base_stmts[] = {
      "over J=(a), the annihilator of a equals J and a is a kernel element",
      "annihilators agree for every ideal between I and (a)",
      "theta grows monotonically from I through K to (a)",
      "for kernel elements a, theta over (a) equals theta over I",
  };
  for (int p = 1; p <= 4; ++p)
    cat.push_back(scenario_claim("annihilator-as-base-ideal." + std::string(roman[p - 1]), true,
                                 base_stmts[p - 1],
                                 [p](const CC& c) { return annihilator_base(c, p); }));
  cat.push_back(scenario_claim("annihilator-as-base-ideal.iii-outer", false,
                               "theta over I and theta over K both lie below theta over (a)",
                               [](const CC& c) { return annihilator_base(c, 5); }));

  static const char* pis_stmts[] = {
      "prime I forces I = kernel = (x) outside the kernel",
      "(x) not inside prime (y) forces x^y into the kernel",
      "distinct prime annihilators meet inside the kernel",
  };
  for (int p = 1; p <= 3; ++p)
    cat.push_back(scenario_claim("prime-ideal-structure." + std::string(roman[p - 1]), true,
                                 pis_stmts[p - 1],
                                 [p](const CC& c) { return prime_ideal_structure(c, p); }));

  cat.push_back(scenario_claim("three-class-quotient", true,
                               "three orthogonal classes iff two primes cover L and meet at the kernel",
                               three_class_quotient));
  cat.push_back(scenario_claim("sigma-maximal-equivalence", true,
                               "maximal annihilators = prime annihilators = kernel-minimal primes",
                               [](const CC& c) { return sigma_maximal(c, 0); }));
  cat.push_back(scenario_claim("sigma-maximal-intersection", true,
                               "maximal annihilators intersect to the kernel ideal",
                               [](const CC& c) { return sigma_maximal(c, 1); }));
  cat.push_back(scenario_claim("minimal-primes-are-annihilators", true,
                               "every kernel-minimal prime is an annihilator",
                               minimal_primes_are_annihilators));
  cat.push_back(scenario_claim("minimal-primes-meet-at-kernel", true,
                               "kernel-minimal primes intersect to the kernel ideal",
                               minimal_primes_meet_at_kernel));

  cat.push_back(scenario_claim("collapse-criterion.nabla-iff-kernel-all", true,
                               "theta collapses everything iff the kernel ideal is the carrier",
                               [](const CC& c) { return collapse_criterion(c, 0); }));
  cat.push_back(scenario_claim("collapse-criterion.singleton-intersections", true,
                               "kernel ideal is the carrier iff I meets every ker(d) class once",
                               [](const CC& c) { return collapse_criterion(c, 1); }));
  cat.push_back(scenario_claim("collapse-criterion.singleton-implies-collapse", false,
                               "I meeting every ker(d) class once forces total collapse",
                               [](const CC& c) { return collapse_criterion(c, 2); }));
  cat.push_back(scenario_claim("kernel-congruence-refines", false,
                               "ker(d) refines theta", kernel_congruence_refines));

  cat.push_back(scenario_claim("quotient-boolean-witness", true,
                               "both boolean decision routes agree and witnesses satisfy the kernel conditions",
                               quotient_boolean_witness));
  cat.push_back(scenario_claim("quotient-complement-pairs", true,
                               "classes are complements iff the meet lands in the kernel ideal and the join in the kernel elements",
                               quotient_complement_pairs));
  cat.push_back(scenario_claim("prime-implies-boolean.i", true,
                               "a prime I or prime kernel ideal gives a boolean quotient",
                               [](const CC& c) { return prime_implies_boolean(c, 1); }));
  cat.push_back(scenario_claim("prime-implies-boolean.ii", true,
                               "maxima in every annihilator give a boolean quotient",
                               [](const CC& c) { return prime_implies_boolean(c, 2); }));
  cat.push_back(scenario_claim("two-element-quotient", true,
                               "the quotient is the two-element algebra iff the kernel ideal is prime",
                               two_element_claim));
  cat.push_back(scenario_claim("sigma-isomorphism", true,
                               "the annihilator lattice under reverse inclusion is isomorphic to the quotient",
                               sigma_isomorphism));
  cat.push_back(scenario_claim("complement-annihilator-maximum", true,
                               "boolean quotients give maxima among annihilators of annihilator members",
                               complement_annihilator_maximum));
  cat.push_back(scenario_claim(
      "unique-congruence-with-kernel-class.as-stated", true,
      "boolean quotient: theta is the only congruence with the kernel ideal as a class",
      [](const CC& c) { return unique_congruence(c, false); }));
  cat.push_back(scenario_claim(
      "unique-congruence-with-kernel-class.boolean-quotient", false,
      "theta is the only congruence with the kernel ideal as a class among those with boolean quotients",
      [](const CC& c) { return unique_congruence(c, true); }));
  cat.push_back(scenario_claim("identity-collapse-corollary", false,
                               "kernel {bottom} and boolean quotient force theta = identity",
                               identity_collapse_corollary));

  cat.push_back(scenario_claim("atom-join-covers", false,
                               "atoms joining to top cover everything below top by their annihilators",
                               [](const CC& c) { return atom_join_covers(c, true); }));
  cat.push_back(scenario_claim("atom-join-covers.unconditional", false,
                               "the covering law without the atomicity precondition",
                               [](const CC& c) { return atom_join_covers(c, false); }));
  cat.push_back(scenario_claim("atom-annihilator-intersection", true,
                               "atom annihilators intersect to the kernel ideal",
                               atom_annihilator_intersection));
  static const char* atom_stmts[] = {
      "congruent iff the same atoms below",
      "orthogonal iff disjoint atom sets",
      "holding all atoms forces a kernel element",
      "the join of all atoms is a kernel element",
  };
  for (int p = 1; p <= 4; ++p)
    cat.push_back(scenario_claim("atomic-congruence-by-atoms." + std::string(roman[p - 1]), true,
                                 atom_stmts[p - 1],
                                 [p](const CC& c) { return atoms_congruence(c, p); }));
  cat.push_back(scenario_claim("atom-annihilator-maximal", true,
                               "atom annihilators are maximal among non-kernel annihilators",
                               atom_annihilator_maximal));
  cat.push_back(scenario_claim("minimal-prime-atom-witness", true,
                               "(a) is a kernel-minimal prime iff exactly one atom lies below a",
                               minimal_prime_atom_witness));
  cat.push_back(scenario_claim("minimal-primes-from-atoms", false,
                               "every kernel-minimal prime is an atom annihilator",
                               minimal_primes_from_atoms));
  cat.push_back(scenario_claim("minimal-prime-decomposition", true,
                               "minimal primes intersect to the kernel ideal irredundantly and miss exactly the kernel elements",
                               minimal_prime_decomposition));
  cat.push_back(scenario_claim("orthogonality-cases.exists", true,
                               "two members of gamma fall into at least one of the three orthogonality cases",
                               [](const CC& c) { return orthogonality_cases(c, false); }));
  cat.push_back(scenario_claim("orthogonality-cases.exclusive", false,
                               "exactly one orthogonality case holds (fails in general)",
                               [](const CC& c) { return orthogonality_cases(c, true); }));
  cat.push_back(scenario_claim(
      "upset-formula.validated", true,
      "outside the kernel, (a) = up(complementary atoms) minus up(atoms of a), up as union of principal filters",
      [](const CC& c) { return upset_formula(c, true, true); }));
  cat.push_back(scenario_claim("upset-formula.literal-union", false,
                               "the literal equality under the union reading (fails: annihilators contain the kernel)",
                               [](const CC& c) { return upset_formula(c, true, false); }));
  cat.push_back(scenario_claim("upset-formula.literal-common", false,
                               "the literal equality under the common-upper-bound reading",
                               [](const CC& c) { return upset_formula(c, false, false); }));
  cat.push_back(scenario_claim("upset-formula.modker-common", false,
                               "the kernel-adjusted equality under the common-upper-bound reading",
                               [](const CC& c) { return upset_formula(c, false, true); }));
  cat.push_back(scenario_claim("orthogonal-family-bound", true,
                               "pairwise orthogonal families are at most the atom count",
                               orthogonal_family_bound));
  cat.push_back(scenario_claim("partition-complement-criterion", true,
                               "boolean iff every element has an atom-partition complement class",
                               partition_complement_criterion));

  cat.push_back(lattice_claim("quotient-boolean-criterion", true,
                              "a quotient is boolean iff bounds exist and every element has a meet/join witness",
                              boolean_congruence_criterion));
  cat.push_back(lattice_claim("boolean-identity-collapse", true,
                              "on a boolean algebra, theta of the identity over {bottom} is the identity",
                              boolean_identity_collapse));
  cat.push_back(lattice_claim("bottom-minimal-primes", false,
                              "minimal primes are atom annihilators over {bottom} with the identity derivation",
                              bottom_minimal_primes));
  return cat;
}

}  // namespace

const std::vector<ClaimDef>& claim_catalog() {
  static const std::vector<ClaimDef> cat = build_catalog();
  return cat;
}

bool VerifyReport::gates_ok() const { return gate_failures() == 0; }

long VerifyReport::gate_failures() const {
  long n = 0;
  for (const ClaimTally& t : tallies)
    if (t.gate && t.fail > 0) ++n;
  return n;
}

namespace {

std::string make_reproducer(const Scenario* sc, const LatticeContext& ctx, const ClaimDef& def,
                            const std::string& witness, const Derivation* d) {
  std::ostringstream os;
  std::vector<std::string> comments;
  comments.push_back("claim: " + def.id);
  comments.push_back("law: " + def.statement);
  if (sc) {
    comments.push_back("ideal: " + set_to_string(*ctx.l, sc->i.members));
    comments.push_back("map: " + derivation_to_string(*ctx.l, sc->d));
  } else if (d) {
    comments.push_back("map: " + derivation_to_string(*ctx.l, *d));
  }
  comments.push_back("witness: " + witness);
  save_lattice(os, *ctx.l, comments);
  return os.str();
}

struct Runner {
  std::vector<const ClaimDef*> selected;
  std::vector<ClaimTally> tallies;
  std::map<const ClaimDef*, size_t> index;
  bool fail_fast = false;
  bool abort_now = false;

  explicit Runner(const VerifyOptions& opt) {
    fail_fast = opt.fail_fast;
    for (const ClaimDef& def : claim_catalog()) {
      bool take = opt.claims.empty();
      for (const std::string& want : opt.claims)
        if (def.id == want || def.id.rfind(want + ".", 0) == 0) take = true;
      if (!take) continue;
      index[&def] = tallies.size();
      selected.push_back(&def);
      tallies.push_back({def.id, def.gate, def.statement, 0, 0, 0, "", ""});
    }
  }

  void record(const ClaimDef& def, const ClaimResult& res, const LatticeContext& ctx,
              const Scenario* sc, const Derivation* d) {
    ClaimTally& t = tallies[index.at(&def)];
    switch (res.status) {
      case ClaimStatus::pass: ++t.pass; break;
      case ClaimStatus::skip: ++t.skip; break;
      case ClaimStatus::fail:
        ++t.fail;
        if (t.first_failure.empty()) {
          std::string where = sc ? sc->describe()
                                 : "L[n=" + std::to_string(ctx.l->size()) + " key=" + ctx.key_hex +
                                       (d ? "] d=[" + derivation_to_string(*ctx.l, *d) + "]" : "]");
          t.first_failure = where + " :: " + res.witness;
          t.reproducer_document = make_reproducer(sc, ctx, def, res.witness, d);
        }
        if (fail_fast && def.gate) abort_now = true;
        break;
    }
  }

  void run_level(ClaimLevel level, const CC& cc, const LatticeContext& ctx, const Scenario* sc,
                 const Derivation* d) {
    for (const ClaimDef* def : selected) {
      if (def->level != level) continue;
      record(*def, def->run(cc), ctx, sc, d);
      if (abort_now) return;
    }
  }
};

}  // namespace

VerifyReport run_verify_on(const std::vector<Lattice>& corpus, const VerifyOptions& opt) {
  Runner runner(opt);
  VerifyReport report;
  for (const Lattice& l : corpus) {
    ++report.lattices;
    LatticeContext ctx = make_lattice_context(l);
    CC cc;
    cc.lat = &ctx;
    runner.run_level(ClaimLevel::lattice, cc, ctx, nullptr, nullptr);
    if (runner.abort_now) break;
    for (const Derivation& d : ctx.derivations) {
      cc.d = &d;
      cc.sc = nullptr;
      runner.run_level(ClaimLevel::derivation, cc, ctx, nullptr, &d);
      if (runner.abort_now) break;
    }
    if (runner.abort_now) break;
    for (int idx : ctx.nontrivial) {
      for (const Derivation& d : ctx.derivations) {
        Scenario sc = make_scenario(ctx, d, ctx.ideals[idx]);
        ++report.scenarios;
        cc.d = &d;
        cc.sc = &sc;
        runner.run_level(ClaimLevel::scenario, cc, ctx, &sc, &d);
        if (runner.abort_now) break;
      }
      if (runner.abort_now) break;
    }
    if (runner.abort_now) break;
  }
  report.tallies = std::move(runner.tallies);
  report.aborted = runner.abort_now;
  return report;
}

VerifyReport run_verify(const VerifyOptions& opt) {
  return run_verify_on(distributive_lattices_up_to(opt.max_size), opt);
}

}  // namespace latq
