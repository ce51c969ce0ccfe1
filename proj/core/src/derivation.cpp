#include "latq/derivation.hpp"

#include <algorithm>

namespace latq {

DerivationCheck is_derivation(const Lattice& l, const std::vector<int>& map) {
  if (int(map.size()) != l.size()) throw usage_error("derivation map must be total");
  for (int v : map)
    if (v < 0 || v >= l.size()) throw usage_error("derivation map value out of range");

  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = map[l.meet(x, y)];
      if (lhs != l.meet(map[x], y) || lhs != l.meet(x, map[y]))
        return {false, "d(x^y) = d(x)^y = x^d(y)", std::make_pair(x, y)};
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[l.join(x, y)] != l.join(map[x], map[y]))
        return {false, "d(xvy) = d(x)vd(y)", std::make_pair(x, y)};
  return {true, "", std::nullopt};
}

Derivation lambda_derivation(const Lattice& l, int a) {
  if (a < 0 || a >= l.size()) throw usage_error("lambda element out of range");
  Derivation d;
  d.map.resize(l.size());
  for (int x = 0; x < l.size(); ++x) d.map[x] = l.meet(a, x);
  return d;
}

Derivation identity_derivation(const Lattice& l) {
  Derivation d;
  d.map.resize(l.size());
  for (int x = 0; x < l.size(); ++x) d.map[x] = x;
  return d;
}

std::vector<Derivation> enumerate_derivations(const Lattice& l) {
  if (!l.distributive())
    throw usage_error("derivation enumeration requires a distributive lattice");
  if (l.top()) {
    // d(x) = x ^ d(top), so the lambda maps are all of them.
    std::vector<Derivation> out;
    out.reserve(l.size());
    for (int t = 0; t < l.size(); ++t) {
      Derivation d = lambda_derivation(l, t);
      if (!is_derivation(l, d.map).ok)
        throw theorem_violation("lambda map failed the derivation axioms on a distributive lattice");
      out.push_back(std::move(d));
    }
    return out;
  }
  return detail::enumerate_derivations_search(l);
}

namespace detail {

namespace {

// Assigns d(x) in index order, keeping d contracting and checking both axioms
// on the assigned prefix.
void search_maps(const Lattice& l, std::vector<int>& map, int x, std::vector<Derivation>& out) {
  int n = l.size();
  if (x == n) {
    if (is_derivation(l, map).ok) out.push_back(Derivation{map});
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (!l.leq(v, x)) continue;  // d(x) <= x holds for every derivation
    map[x] = v;
    bool ok = true;
    for (int y = 0; y <= x && ok; ++y) {
      int m = l.meet(x, y);
      int j = l.join(x, y);
      if (map[m] >= 0) ok = map[m] == l.meet(map[x], y) && map[m] == l.meet(x, map[y]);
      if (ok && map[j] >= 0) ok = map[j] == l.join(map[x], map[y]);
    }
    if (ok) search_maps(l, map, x + 1, out);
    map[x] = -1;
  }
}

}  // namespace

std::vector<Derivation> enumerate_derivations_search(const Lattice& l) {
  std::vector<int> map(l.size(), -1);
  std::vector<Derivation> out;
  search_maps(l, map, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

Ideal kernel_ideal(const Lattice& l, const Derivation& d, const Ideal& i) {
  ElementSet s(l.size());
  for (int x = 0; x < l.size(); ++x)
    if (i.members.contains(d(x))) s.insert(x);
  return Ideal{s};
}

Ideal annihilator(const Lattice& l, const Derivation& d, const Ideal& i, int a) {
  ElementSet s(l.size());
  for (int x = 0; x < l.size(); ++x)
    if (i.members.contains(d(l.meet(a, x)))) s.insert(x);
  return Ideal{s};
}

ElementSet kernel_elements(const Lattice& l, const Derivation& d, const Ideal& i) {
  Ideal ker = kernel_ideal(l, d, i);
  ElementSet k(l.size());
  for (int a = 0; a < l.size(); ++a)
    if (annihilator(l, d, i, a).members == ker.members) k.insert(a);
  return k;
}

std::string derivation_to_string(const Lattice& l, const Derivation& d) {
  std::string out;
  for (int x = 0; x < l.size(); ++x) {
    if (x) out += ',';
    out += l.label(x) + ":" + l.label(d(x));
  }
  return out;
}

}  // namespace latq
