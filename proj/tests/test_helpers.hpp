#pragma once

#include <map>
#include <vector>

#include "latq/canonical.hpp"
#include "latq/lattice.hpp"

namespace latq::testing {

inline ElementSet set_of(const Lattice& l, std::initializer_list<const char*> labels) {
  ElementSet s(l.size());
  for (const char* lab : labels) s.insert(*l.index_of(lab));
  return s;
}

// The four-element diamond with the labels used throughout: bot, a, b, top.
inline Lattice diamond() {
  return Lattice::from_covers({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// Chain a < b < c < d.
inline Lattice chain_abcd() {
  return Lattice::from_covers({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
}

// Four elements, a bottom, d top, b and c incomparable.
inline Lattice example_ii() {
  return Lattice::from_covers({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// M3: bottom, three incomparable middle elements, top. A lattice, not distributive.
inline Lattice m3() {
  std::vector<uint8_t> leq(25, 0);
  auto set = [&](int x, int y) { leq[size_t(x) * 5 + y] = 1; };
  for (int x = 0; x < 5; ++x) set(x, x);
  for (int m = 1; m <= 3; ++m) {
    set(0, m);
    set(m, 4);
  }
  set(0, 4);
  return Lattice::from_leq(5, leq, {"bot", "p", "q", "r", "top"});
}

// N5: bottom, top, chain x < z on one side, y on the other.
inline Lattice n5() {
  std::vector<uint8_t> leq(25, 0);
  auto set = [&](int x, int y) { leq[size_t(x) * 5 + y] = 1; };
  for (int x = 0; x < 5; ++x) set(x, x);
  set(0, 1), set(0, 2), set(0, 3), set(0, 4);
  set(1, 2), set(1, 4), set(2, 4), set(3, 4);
  return Lattice::from_leq(5, leq, {"bot", "x", "z", "y", "top"});
}

// Independent distributivity oracle: plain triple search on the tables.
inline bool distributive_by_triples(const Lattice& l) {
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      for (int z = 0; z < l.size(); ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

// Enumerates every partial order on n labeled points by assigning one of
// {<, >, incomparable} to each unordered pair and keeping the transitive ones.
// Suitable for n <= 6.
template <typename F>
void for_each_labeled_poset(int n, F&& f) {
  int pairs = n * (n - 1) / 2;
  long total = 1;
  for (int p = 0; p < pairs; ++p) total *= 3;
  std::vector<std::pair<int, int>> pair_at;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) pair_at.emplace_back(x, y);

  std::vector<uint32_t> below(n);
  for (long code = 0; code < total; ++code) {
    for (int x = 0; x < n; ++x) below[x] = uint32_t{1} << x;
    long c = code;
    for (int p = 0; p < pairs; ++p) {
      int digit = int(c % 3);
      c /= 3;
      auto [x, y] = pair_at[p];
      if (digit == 1) below[y] |= uint32_t{1} << x;  // x < y
      if (digit == 2) below[x] |= uint32_t{1} << y;  // y < x
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      uint32_t m = below[x];
      while (m) {
        int y = __builtin_ctz(m);
        m &= m - 1;
        if (below[y] & ~below[x]) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) f(below);
  }
}

// Turns a labeled order relation (as below-masks) into a Lattice when it is
// one; returns false otherwise.
inline bool lattice_from_below(const std::vector<uint32_t>& below, Lattice& out) {
  int n = int(below.size());
  std::vector<uint8_t> leq(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((below[y] >> x) & 1) leq[size_t(x) * n + y] = 1;
  LatticeBuildResult r = try_build_lattice(n, leq);
  if (!r.lattice) return false;
  out = std::move(*r.lattice);
  return true;
}

}  // namespace latq::testing
