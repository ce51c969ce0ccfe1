#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latq/generate.hpp"
#include "latq/ideal.hpp"
#include "test_helpers.hpp"

using namespace latq;
using namespace latq::testing;

namespace {

// Brute-force oracle: all nonempty, down-closed, join-closed subsets.
std::set<std::vector<int>> ideals_by_subsets(const Lattice& l) {
  std::set<std::vector<int>> out;
  int n = l.size();
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    ElementSet s(n);
    for (int e = 0; e < n; ++e)
      if ((mask >> e) & 1) s.insert(e);
    if (is_ideal(l, s)) out.insert(s.members());
  }
  return out;
}

}  // namespace

TEST_CASE("is_ideal on the named examples") {
  Lattice c = chain_abcd();
  CHECK(is_ideal(c, set_of(c, {"a"})));

  Lattice d = diamond();
  CHECK(!is_ideal(d, set_of(d, {"bot", "a", "b"})));  // a v b missing
  CHECK(is_ideal(d, d.carrier()));
  CHECK(!is_ideal(d, ElementSet(d.size())));  // empty set is not an ideal

  CHECK(is_filter(d, set_of(d, {"a", "top"})));
  CHECK(!is_filter(d, set_of(d, {"a", "b", "top"})));
}

TEST_CASE("principal ideals, filters, and upper bounds") {
  Lattice d = diamond();
  CHECK(principal_ideal(d, *d.index_of("a")).members == set_of(d, {"bot", "a"}));
  CHECK(principal_filter(d, *d.index_of("a")).members == set_of(d, {"a", "top"}));

  Lattice c = chain_abcd();
  CHECK(principal_ideal(c, *c.index_of("d")).members == c.carrier());

  // common upper bounds of {a, b} in the diamond
  CHECK(upper_bounds(d, set_of(d, {"a", "b"})) == set_of(d, {"top"}));
  CHECK(up_closure(d, set_of(d, {"a", "b"})) == set_of(d, {"a", "b", "top"}));
  CHECK(upper_bounds(d, ElementSet(d.size())) == d.carrier());
  CHECK(up_closure(d, ElementSet(d.size())).empty());
}

TEST_CASE("enumerate_ideals matches the subset oracle and is principal") {
  CHECK(enumerate_ideals(chain_abcd()).size() == 4);
  CHECK(enumerate_ideals(diamond()).size() == 4);
  CHECK(enumerate_ideals(chain(1)).size() == 1);

  for (const Lattice& l : distributive_lattices_up_to(6)) {
    std::set<std::vector<int>> got;
    for (const Ideal& i : enumerate_ideals(l)) got.insert(i.members.members());
    CHECK(got == ideals_by_subsets(l));
    CHECK(got.size() == size_t(l.size()));  // every ideal is principal
  }
}

TEST_CASE("prime ideals") {
  Lattice c = chain_abcd();
  CHECK(is_prime_ideal(c, as_ideal(c, set_of(c, {"a", "b"}))));
  // every nontrivial ideal of a chain is prime
  for (const Ideal& i : enumerate_ideals(c))
    CHECK(is_prime_ideal(c, i) == !is_trivial(c, i));

  Lattice d = diamond();
  CHECK(!is_prime_ideal(d, as_ideal(d, set_of(d, {"bot"}))));
  CHECK(!is_prime_ideal(d, Ideal{d.carrier()}));
  CHECK_THROWS_AS(as_ideal(d, set_of(d, {"a"})), usage_error);
}

TEST_CASE("prime ideals complement prime filters, both directions") {
  for (const Lattice& l : distributive_lattices_up_to(6)) {
    for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << l.size()); ++mask) {
      ElementSet s(l.size());
      for (int e = 0; e < l.size(); ++e)
        if ((mask >> e) & 1) s.insert(e);
      ElementSet comp = s.complement();
      bool prime_ideal = is_ideal(l, s) && is_prime_ideal(l, Ideal{s});
      bool prime_filter = is_filter(l, comp) && [&] {
        // prime filter: proper and x v y inside forces a member
        for (int x = 0; x < l.size(); ++x)
          for (int y = 0; y < l.size(); ++y)
            if (!comp.contains(x) && !comp.contains(y) && comp.contains(l.join(x, y)))
              return false;
        return !comp.empty() && comp.count() < l.size();
      }();
      CHECK(prime_ideal == prime_filter);
    }
  }
}

TEST_CASE("i_minimal_primes on the named examples") {
  Lattice c = chain_abcd();
  auto mp = i_minimal_primes(c, as_ideal(c, set_of(c, {"a"})));
  REQUIRE(mp.size() == 1);
  CHECK(mp[0].members == set_of(c, {"a"}));

  Lattice d = diamond();
  auto mpd = i_minimal_primes(d, as_ideal(d, set_of(d, {"bot"})));
  REQUIRE(mpd.size() == 2);
  CHECK(mpd[0].members == set_of(d, {"bot", "a"}));
  CHECK(mpd[1].members == set_of(d, {"bot", "b"}));

  // a prime base is its own unique minimal prime
  Ideal p = as_ideal(d, set_of(d, {"bot", "a"}));
  auto mpp = i_minimal_primes(d, p);
  REQUIRE(mpp.size() == 1);
  CHECK(mpp[0].members == p.members);
}

TEST_CASE("i_minimal_primes structural properties over the corpus") {
  for (const Lattice& l : distributive_lattices_up_to(6)) {
    auto primes = prime_ideals(l);
    for (const Ideal& base : enumerate_ideals(l)) {
      if (is_trivial(l, base)) continue;
      auto mp = i_minimal_primes(l, base);
      CHECK(!mp.empty());
      for (const Ideal& p : mp) CHECK(base.members.is_subset_of(p.members));
      for (size_t x = 0; x < mp.size(); ++x)
        for (size_t y = x + 1; y < mp.size(); ++y) {
          CHECK(!mp[x].members.is_subset_of(mp[y].members));
          CHECK(!mp[y].members.is_subset_of(mp[x].members));
        }
      for (const Ideal& q : primes) {
        if (!base.members.is_subset_of(q.members)) continue;
        bool contains_minimal = false;
        for (const Ideal& p : mp)
          if (p.members.is_subset_of(q.members)) contains_minimal = true;
        CHECK(contains_minimal);
      }
    }
  }
}
