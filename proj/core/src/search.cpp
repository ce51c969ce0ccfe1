#include "latq/search.hpp"

#include <set>

#include "latq/boolean.hpp"
#include "latq/claims.hpp"

namespace latq {

namespace {

struct FamilyAcc {
  FamilyTally tally;
  void note(bool ok, const std::string& witness) {
    ++tally.cases;
    if (!ok) {
      ++tally.counterexamples;
      if (tally.first_counterexample.empty()) tally.first_counterexample = witness;
    }
  }
};

bool partition_condition(const LatticeContext& ctx, const Ideal& i) {
  const Lattice& l = *ctx.l;
  Derivation id = identity_derivation(l);
  AtomReport ar = atom_report(l, id, i);
  if (!ar.is_atomic) return false;
  for (int x = 0; x < l.size(); ++x) {
    bool found = false;
    for (int y = 0; y < l.size() && !found; ++y)
      if ((ar.atoms_below[x] & ar.atoms_below[y]).empty() &&
          (ar.atoms_below[x] | ar.atoms_below[y]) == ar.atoms)
        found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

SearchFindings open_question_search(const SearchOptions& opt) {
  SearchFindings out;

  FamilyAcc f_i, f_ii_lit, f_ii_theta, f_iii, f_iv, f_v_lit, f_v_theta, f_vi;
  f_i.tally = {"family-i", "theta of the identity derivation refines every theta over I", 0, 0, ""};
  f_ii_lit.tally = {"family-ii.literal",
                    "identity theta refines every congruence having the kernel ideal as a class", 0,
                    0, ""};
  f_ii_theta.tally = {"family-ii.theta-form",
                      "identity theta refines every derived congruence whose kernel matches", 0, 0,
                      ""};
  f_iii.tally = {"family-iii",
                 "identity theta refines theta over any ideal that is a kernel over I", 0, 0, ""};
  f_iv.tally = {"family-iv", "identity theta refines theta over every annihilator ideal", 0, 0, ""};
  f_v_lit.tally = {"family-v.literal",
                   "identity theta refines every congruence having I as a class", 0, 0, ""};
  f_v_theta.tally = {"family-v.theta-form",
                     "identity theta refines every derived congruence with kernel I", 0, 0, ""};
  f_vi.tally = {"family-vi",
                "under the atom partition condition, identity theta is minimum among boolean-quotient thetas",
                0, 0, ""};

  ConditionTally cond_prime{"kernel-prime-for-identity", 0, 0, 0, 0};
  ConditionTally cond_partition{"atomic-partition-condition", 0, 0, 0, 0};

  if (opt.max_size >= 1) {
    for (const Lattice& l : distributive_lattices_up_to(opt.max_size)) {
      if (out.partial) break;
      LatticeContext ctx = make_lattice_context(l);
      Derivation id = identity_derivation(l);

      for (int idx : ctx.nontrivial) {
        if (opt.budget >= 0 && out.cases >= opt.budget) {
          out.partial = true;
          break;
        }
        ++out.cases;
        const Ideal& i = ctx.ideals[idx];
        Congruence ti = theta(l, id, i);
        std::string where = "L[n=" + std::to_string(l.size()) + " key=" + ctx.key_hex +
                            "] I=" + set_to_string(l, i.members);

        IdealFinding finding;
        finding.lattice_key = ctx.key_hex;
        finding.n = l.size();
        i.members.for_each([&](int e) { finding.ideal.push_back(l.label(e)); });
        finding.id_theta_is_identity = (ti == identity_congruence(l));
        finding.ideal_prime = is_prime_ideal(l, i);
        finding.atomic_partition_condition = partition_condition(ctx, i);

        std::set<Congruence> thetas;
        bool all_boolean = true;
        bool id_min = true;
        for (const Derivation& d : ctx.derivations) {
          Congruence td = theta(l, d, i);
          bool boolean = quotient_boolean(l, d, i).is_boolean;
          all_boolean = all_boolean && boolean;
          if (boolean && !refines(ti, td)) id_min = false;
          thetas.insert(std::move(td));
        }
        finding.distinct_thetas = int(thetas.size());
        finding.all_quotients_boolean = all_boolean;
        finding.id_theta_minimum = id_min;

        // (i): identity refines every theta over I.
        {
          bool ok = true;
          for (const Derivation& d : ctx.derivations)
            if (!refines(ti, theta(l, d, i))) ok = false;
          f_i.note(ok, where);
        }
        // (ii): congruences having ker_I d as a whole class, literal and
        // restricted to derived congruences.
        {
          bool ok_lit = true, ok_theta = true;
          for (const Derivation& d : ctx.derivations) {
            Ideal ker = kernel_ideal(l, d, i);
            for (const Congruence& th : ctx.congruences) {
              bool has = false;
              for (const ElementSet& cls : th.classes())
                if (cls == ker.members) has = true;
              if (has && !refines(ti, th)) ok_lit = false;
            }
            for (const Derivation& d2 : ctx.derivations)
              for (const Ideal& j : ctx.ideals)
                if (kernel_ideal(l, d2, j).members == ker.members &&
                    !refines(ti, theta(l, d2, j, true)))
                  ok_theta = false;
          }
          f_ii_lit.note(ok_lit, where);
          f_ii_theta.note(ok_theta, where);
        }
        // (iii): ideals that arise as kernels over I.
        {
          bool ok = true;
          for (const Derivation& d1 : ctx.derivations) {
            Ideal j = kernel_ideal(l, d1, i);
            for (const Derivation& d : ctx.derivations)
              if (!refines(ti, theta(l, d, j, true))) ok = false;
          }
          f_iii.note(ok, where);
        }
        // (iv): annihilator ideals.
        {
          bool ok = true;
          for (const Derivation& d : ctx.derivations)
            for (int a = 0; a < l.size(); ++a) {
              Ideal j = annihilator(l, d, i, a);
              if (!refines(ti, theta(l, d, j, true))) ok = false;
            }
          f_iv.note(ok, where);
        }
        // (v): congruences having I itself as a whole class.
        {
          bool ok_lit = true, ok_theta = true;
          for (const Congruence& th : ctx.congruences) {
            bool has = false;
            for (const ElementSet& cls : th.classes())
              if (cls == i.members) has = true;
            if (has && !refines(ti, th)) ok_lit = false;
          }
          for (const Derivation& d : ctx.derivations)
            for (const Ideal& j : ctx.ideals)
              if (kernel_ideal(l, d, j).members == i.members &&
                  !refines(ti, theta(l, d, j, true)))
                ok_theta = false;
          f_v_lit.note(ok_lit, where);
          f_v_theta.note(ok_theta, where);
        }
        // (vi): tallied only where the atom partition condition holds.
        if (finding.atomic_partition_condition) f_vi.note(id_min, where);

        auto& cp = finding.ideal_prime ? (id_min ? cond_prime.tt : cond_prime.tf)
                                       : (id_min ? cond_prime.ft : cond_prime.ff);
        ++cp;
        auto& cq = finding.atomic_partition_condition
                       ? (id_min ? cond_partition.tt : cond_partition.tf)
                       : (id_min ? cond_partition.ft : cond_partition.ff);
        ++cq;

        out.findings.push_back(std::move(finding));
      }
    }
  }

  out.families = {f_i.tally,  f_ii_lit.tally, f_ii_theta.tally, f_iii.tally,
                  f_iv.tally, f_v_lit.tally,  f_v_theta.tally,  f_vi.tally};
  out.conditions = {cond_prime, cond_partition};
  return out;
}

}  // namespace latq
