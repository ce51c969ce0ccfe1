#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latq/congruence.hpp"
#include "latq/generate.hpp"
#include "test_helpers.hpp"

using namespace latq;
using namespace latq::testing;

namespace {

Congruence from_label_classes(const Lattice& l,
                              std::initializer_list<std::initializer_list<const char*>> classes) {
  std::vector<ElementSet> sets;
  for (auto& cls : classes) {
    ElementSet s(l.size());
    for (const char* lab : cls) s.insert(*l.index_of(lab));
    sets.push_back(s);
  }
  return Congruence::from_classes(l, std::move(sets));
}

// Bell-number oracle: every partition via restricted growth strings, filtered
// by the compatibility check.
std::set<std::vector<int>> congruences_by_partitions(const Lattice& l) {
  std::set<std::vector<int>> out;
  int n = l.size();
  std::vector<int> rgs(n, 0);
  while (true) {
    Congruence c = Congruence::from_class_of(l, rgs);
    if (is_congruence(l, c)) {
      std::vector<int> key(n);
      for (int x = 0; x < n; ++x) key[x] = c.class_of(x);
      out.insert(key);
    }
    // next restricted growth string
    int k = n - 1;
    for (; k > 0; --k) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + k) + 1;
      if (rgs[k] < cap) {
        ++rgs[k];
        std::fill(rgs.begin() + k + 1, rgs.end(), 0);
        break;
      }
      rgs[k] = 0;
    }
    if (k == 0) break;
  }
  return out;
}

Derivation diamond_map(const Lattice& d) {
  return lambda_derivation(d, *d.index_of("a"));
}

}  // namespace

TEST_CASE("is_congruence on the named partitions") {
  Lattice c = chain_abcd();
  CHECK(is_congruence(c, identity_congruence(c)));
  CHECK(is_congruence(c, all_congruence(c)));
  CHECK(!is_congruence(c, from_label_classes(c, {{"a", "c"}, {"b"}, {"d"}})));

  CHECK_THROWS_AS(from_label_classes(c, {{"a"}, {"b"}}), usage_error);          // gap
  CHECK_THROWS_AS(from_label_classes(c, {{"a", "b"}, {"b", "c", "d"}}), usage_error);  // overlap
}

TEST_CASE("theta on the worked examples") {
  Lattice c = chain_abcd();
  Derivation id = identity_derivation(c);
  Congruence ti = theta(c, id, as_ideal(c, set_of(c, {"a"})));
  CHECK(ti == from_label_classes(c, {{"a"}, {"b", "c", "d"}}));

  Congruence tj = theta(c, id, as_ideal(c, set_of(c, {"a", "b", "c"})));
  CHECK(tj == from_label_classes(c, {{"a", "b", "c"}, {"d"}}));

  Lattice d = diamond();
  Congruence td = theta(d, diamond_map(d), principal_ideal(d, *d.bottom()));
  CHECK(td == from_label_classes(d, {{"bot", "b"}, {"a", "top"}}));
  CHECK(isomorphic(quotient(d, td).lattice, chain(2)));

  CHECK_THROWS_AS(theta(d, diamond_map(d), Ideal{d.carrier()}), usage_error);
  CHECK(theta(d, diamond_map(d), Ideal{d.carrier()}, true) == all_congruence(d));
}

TEST_CASE("kernel congruence") {
  Lattice d = diamond();
  CHECK(kernel_congruence(d, identity_derivation(d)) == identity_congruence(d));
  CHECK(kernel_congruence(d, diamond_map(d)) ==
        from_label_classes(d, {{"bot", "b"}, {"a", "top"}}));
  CHECK(kernel_congruence(d, lambda_derivation(d, *d.bottom())) == all_congruence(d));
}

TEST_CASE("quotient on the named congruences") {
  Lattice d = diamond();
  CHECK(isomorphic(quotient(d, identity_congruence(d)).lattice, d));
  CHECK(quotient(d, all_congruence(d)).lattice.size() == 1);

  QuotientLattice q = quotient(d, from_label_classes(d, {{"bot", "b"}, {"a", "top"}}));
  CHECK(isomorphic(q.lattice, chain(2)));
  CHECK(q.projection == std::vector<int>{0, 1, 0, 1});
  CHECK(q.section == std::vector<int>{0, 1});
  CHECK(validate(q.lattice).ok());

  Lattice c = chain_abcd();
  CHECK_THROWS_AS(quotient(c, from_label_classes(c, {{"a", "c"}, {"b"}, {"d"}})), usage_error);
}

TEST_CASE("quotients of congruences stay distributive over the corpus") {
  for (const Lattice& l : distributive_lattices_up_to(5))
    for (const Congruence& th : enumerate_congruences(l)) {
      QuotientLattice q = quotient(l, th);
      CHECK(validate(q.lattice).ok());
    }
}

TEST_CASE("compare") {
  Lattice c = chain_abcd();
  Derivation id = identity_derivation(c);
  Congruence ti = theta(c, id, as_ideal(c, set_of(c, {"a"})));
  Congruence tj = theta(c, id, as_ideal(c, set_of(c, {"a", "b", "c"})));
  CHECK(compare(ti, tj) == CongruenceOrder::incomparable);
  CHECK(compare(ti, ti) == CongruenceOrder::equal);
  CHECK(compare(identity_congruence(c), ti) == CongruenceOrder::finer);
  CHECK(compare(all_congruence(c), ti) == CongruenceOrder::coarser);
  CHECK(std::string(to_string(CongruenceOrder::incomparable)) == "incomparable");

  Lattice c3 = chain(3);
  CHECK_THROWS_AS(compare(ti, identity_congruence(c3)), usage_error);
}

TEST_CASE("principal congruence generation matches the partition oracle") {
  for (const Lattice& l : distributive_lattices_up_to(6)) {
    std::set<std::vector<int>> expected = congruences_by_partitions(l);
    std::set<std::vector<int>> got;
    for (const Congruence& c : enumerate_congruences(l)) {
      CHECK(is_congruence(l, c));
      std::vector<int> key(l.size());
      for (int x = 0; x < l.size(); ++x) key[x] = c.class_of(x);
      got.insert(key);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("congruence joins stay congruences") {
  Lattice d = diamond();
  Congruence a = principal_congruence(d, *d.index_of("bot"), *d.index_of("a"));
  Congruence b = principal_congruence(d, *d.index_of("bot"), *d.index_of("b"));
  CHECK(is_congruence(d, a));
  CHECK(is_congruence(d, b));
  Congruence j = join(d, a, b);
  CHECK(is_congruence(d, j));
  CHECK(j == all_congruence(d));
}
