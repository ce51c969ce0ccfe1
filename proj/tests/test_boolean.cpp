#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latq/boolean.hpp"
#include "latq/generate.hpp"
#include "test_helpers.hpp"

using namespace latq;
using namespace latq::testing;

namespace {

Derivation diamond_map(const Lattice& d) { return lambda_derivation(d, *d.index_of("a")); }

}  // namespace

TEST_CASE("is_boolean_algebra") {
  CHECK(is_boolean_algebra(chain(2)).is_boolean);
  CHECK(is_boolean_algebra(diamond()).is_boolean);
  CHECK(is_boolean_algebra(boolean_lattice(3)).is_boolean);

  auto r = is_boolean_algebra(chain(3));
  CHECK(!r.is_boolean);
  CHECK(r.failure == 1);  // the middle element has no complement

  CHECK(!is_boolean_algebra(m3()).is_boolean);  // fails on distributivity

  auto rd = is_boolean_algebra(diamond());
  CHECK(rd.complements[1] == 2);  // a' = b
  CHECK(rd.complements[0] == 3);
}

TEST_CASE("quotient_boolean on the worked examples") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  BooleanVerdict v = quotient_boolean(d, diamond_map(d), bot);
  CHECK(v.is_boolean);
  QuotientLattice q = quotient(d, theta(d, diamond_map(d), bot));
  CHECK(isomorphic(q.lattice, chain(2)));

  // chains always give boolean quotients
  for (int k = 2; k <= 5; ++k) {
    Lattice c = chain(k);
    for (const Ideal& i : enumerate_ideals(c)) {
      if (is_trivial(c, i)) continue;
      CHECK(quotient_boolean(c, identity_derivation(c), i).is_boolean);
    }
  }

  // boolean algebra, I = {bottom}, identity: theta is the identity congruence
  Lattice b = boolean_lattice(2);
  Ideal bb = principal_ideal(b, *b.bottom());
  CHECK(quotient_boolean(b, identity_derivation(b), bb).is_boolean);
  CHECK(theta(b, identity_derivation(b), bb) == identity_congruence(b));
}

TEST_CASE("witnesses satisfy the kernel conditions") {
  for (const Lattice& l : distributive_lattices_up_to(5))
    for (const Derivation& dv : enumerate_derivations(l))
      for (const Ideal& i : enumerate_ideals(l)) {
        if (is_trivial(l, i)) continue;
        BooleanVerdict v = quotient_boolean(l, dv, i);
        if (!v.is_boolean) continue;
        Ideal ker = kernel_ideal(l, dv, i);
        ElementSet k = kernel_elements(l, dv, i);
        for (int x = 0; x < l.size(); ++x) {
          CHECK(ker.members.contains(l.meet(x, v.witness[x])));
          CHECK(k.contains(l.join(x, v.witness[x])));
        }
      }
}

TEST_CASE("complement_class") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  Derivation dm = diamond_map(d);

  // the class of the kernel ideal complements the kernel-element class
  auto cls = complement_class(d, dm, bot, *d.index_of("b"));
  REQUIRE(cls.has_value());
  CHECK(*cls == set_of(d, {"a", "top"}));

  auto cls_a = complement_class(d, dm, bot, *d.index_of("a"));
  REQUIRE(cls_a.has_value());
  CHECK(*cls_a == set_of(d, {"bot", "b"}));

  // no class is its own complement unless the quotient is a single point
  for (const Lattice& l : distributive_lattices_up_to(5))
    for (const Derivation& dv : enumerate_derivations(l))
      for (const Ideal& i : enumerate_ideals(l)) {
        if (is_trivial(l, i)) continue;
        Congruence th = theta(l, dv, i);
        for (int x = 0; x < l.size(); ++x) {
          auto c = complement_class(l, dv, i, x);
          if (c && c->contains(x)) CHECK(th.num_classes() == 1);
        }
      }
}

TEST_CASE("sigma_poset on the named cases") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  SigmaLattice s = sigma_poset(d, diamond_map(d), bot);
  CHECK(s.lattice.size() == 2);

  Lattice c = chain_abcd();
  SigmaLattice sc = sigma_poset(c, identity_derivation(c), as_ideal(c, set_of(c, {"a"})));
  CHECK(sc.lattice.size() == 2);
  CHECK(sc.annihilator[sc.element_to_sigma[*c.index_of("a")]] == c.carrier());
  CHECK(sc.annihilator[sc.element_to_sigma[*c.index_of("b")]] == set_of(c, {"a"}));

  // kernel ideal = carrier collapses sigma to one point
  Ideal da = principal_ideal(d, *d.index_of("a"));
  Derivation la = lambda_derivation(d, *d.index_of("a"));
  CHECK(sigma_poset(d, la, da).lattice.size() == 1);
}

TEST_CASE("sigma_maximal_analysis on the named cases") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  auto r = sigma_maximal_analysis(d, identity_derivation(d), bot);
  CHECK(!r.vacuous);
  CHECK(r.maximal_reps == std::vector<int>{1, 2});
  CHECK(r.maximal_iff_prime);
  CHECK(r.maximal_iff_minimal_prime);
  CHECK(r.intersection_is_kernel);
  CHECK(r.complement_sets_have_maximum);

  // prime kernel ideal: a single maximal annihilator, equal to I
  Lattice c = chain_abcd();
  auto rc = sigma_maximal_analysis(c, identity_derivation(c), as_ideal(c, set_of(c, {"a"})));
  CHECK(rc.maximal_reps.size() == 1);

  Ideal da = principal_ideal(d, *d.index_of("a"));
  Derivation la = lambda_derivation(d, *d.index_of("a"));
  CHECK(sigma_maximal_analysis(d, la, da).vacuous);
}

TEST_CASE("atom_report on the named cases") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  auto r = atom_report(d, identity_derivation(d), bot);
  CHECK(r.atoms == set_of(d, {"a", "b"}));
  CHECK(r.is_atomic);
  CHECK(!r.is_atomic_literal);  // the bottom element has no atom below it

  Lattice c = chain_abcd();
  auto rc = atom_report(c, identity_derivation(c), as_ideal(c, set_of(c, {"a"})));
  CHECK(rc.atoms == set_of(c, {"b"}));
  CHECK(rc.atoms_below[*c.index_of("c")] == set_of(c, {"b"}));
  CHECK(rc.is_atomic);

  Lattice b = boolean_lattice(3);
  auto rb = atom_report(b, identity_derivation(b), principal_ideal(b, *b.bottom()));
  CHECK(rb.atoms.count() == 3);
  for (int a : rb.atoms.members()) CHECK(b.covers(*b.bottom(), a));
}

TEST_CASE("gamma excludes the kernel ideal and kernel elements") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  auto r = atom_report(d, identity_derivation(d), bot);
  CHECK(r.gamma == set_of(d, {"a", "b"}));

  // with the lambda map both non-kernel annihilators equal the kernel ideal
  auto rp = atom_report(d, diamond_map(d), bot);
  CHECK(rp.gamma.empty());
}

TEST_CASE("two_element_criterion on the worked examples") {
  Lattice d = diamond();
  Ideal bot = principal_ideal(d, *d.bottom());
  auto r = two_element_criterion(d, diamond_map(d), bot);
  CHECK(r.quotient_is_two);
  CHECK(r.kernel_prime);
  CHECK(!is_prime_ideal(d, bot));  // while I itself is not prime

  Lattice c = chain_abcd();
  auto rc = two_element_criterion(c, identity_derivation(c), as_ideal(c, set_of(c, {"a"})));
  CHECK(rc.quotient_is_two);
  CHECK(rc.kernel_prime);

  auto rb = two_element_criterion(d, identity_derivation(d), bot);
  CHECK(!rb.quotient_is_two);  // theta is the identity congruence, four classes
  CHECK(!rb.kernel_prime);
}
