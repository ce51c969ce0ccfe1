#include "latq/ideal.hpp"

#include <algorithm>

namespace latq {

bool is_ideal(const Lattice& l, const ElementSet& s) {
  if (s.empty()) return false;
  auto m = s.members();
  for (int a : m)
    for (int b : m)
      if (!s.contains(l.join(a, b))) return false;
  for (int a : m)
    for (int x = 0; x < l.size(); ++x)
      if (l.leq(x, a) && !s.contains(x)) return false;
  return true;
}

bool is_filter(const Lattice& l, const ElementSet& s) {
  if (s.empty()) return false;
  auto m = s.members();
  for (int a : m)
    for (int b : m)
      if (!s.contains(l.meet(a, b))) return false;
  for (int a : m)
    for (int x = 0; x < l.size(); ++x)
      if (l.leq(a, x) && !s.contains(x)) return false;
  return true;
}

Ideal as_ideal(const Lattice& l, ElementSet s) {
  if (!is_ideal(l, s))
    throw usage_error("set " + set_to_string(l, s) + " is not an ideal");
  return Ideal{std::move(s)};
}

bool is_trivial(const Lattice& l, const Ideal& i) { return i.members.count() == l.size(); }

Ideal principal_ideal(const Lattice& l, int a) { return Ideal{l.down_set(a)}; }

Filter principal_filter(const Lattice& l, int a) { return Filter{l.up_set(a)}; }

ElementSet upper_bounds(const Lattice& l, const ElementSet& a) {
  ElementSet out = ElementSet::full(l.size());
  a.for_each([&](int e) { out &= l.up_set(e); });
  return out;
}

ElementSet up_closure(const Lattice& l, const ElementSet& a) {
  ElementSet out(l.size());
  a.for_each([&](int e) { out |= l.up_set(e); });
  return out;
}

std::vector<Ideal> enumerate_ideals(const Lattice& l) {
  std::vector<Ideal> out;
  out.reserve(l.size());
  for (int a = 0; a < l.size(); ++a) out.push_back(principal_ideal(l, a));
  return out;
}

bool is_prime_ideal(const Lattice& l, const Ideal& i) {
  if (!is_ideal(l, i.members)) throw usage_error("is_prime_ideal: not an ideal");
  if (is_trivial(l, i)) return false;
  for (int x = 0; x < l.size(); ++x) {
    if (i.members.contains(x)) continue;
    for (int y = 0; y < l.size(); ++y) {
      if (i.members.contains(y)) continue;
      if (i.members.contains(l.meet(x, y))) return false;
    }
  }
  return true;
}

std::vector<Ideal> prime_ideals(const Lattice& l) {
  std::vector<Ideal> out;
  for (Ideal& i : enumerate_ideals(l))
    if (is_prime_ideal(l, i)) out.push_back(std::move(i));
  return out;
}

std::vector<Ideal> i_minimal_primes(const Lattice& l, const Ideal& base) {
  std::vector<Ideal> primes;
  for (Ideal& p : prime_ideals(l))
    if (base.members.is_subset_of(p.members)) primes.push_back(std::move(p));
  std::vector<Ideal> minimal;
  for (const Ideal& p : primes) {
    bool is_min = true;
    for (const Ideal& q : primes)
      if (q.members != p.members && q.members.is_subset_of(p.members)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(p);
  }
  if (!is_trivial(l, base) && minimal.empty())
    throw theorem_violation("proper ideal with no prime above it");
  std::sort(minimal.begin(), minimal.end(),
            [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
  return minimal;
}

}  // namespace latq
