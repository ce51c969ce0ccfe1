#include "latq/poset.hpp"

#include <algorithm>
#include <map>

#include "latq/canonical.hpp"
#include "latq/error.hpp"

namespace latq {

Poset Poset::antichain(int k) {
  Poset p;
  p.n = k;
  p.below.resize(k);
  for (int i = 0; i < k; ++i) p.below[i] = uint32_t{1} << i;
  return p;
}

Poset Poset::chain(int k) {
  Poset p;
  p.n = k;
  p.below.resize(k);
  for (int i = 0; i < k; ++i) p.below[i] = (uint32_t{1} << (i + 1)) - 1;
  return p;
}

std::optional<Poset> Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less) {
  if (n < 0 || n > 32) return std::nullopt;
  Poset p = antichain(n);
  for (auto [a, b] : less) {
    if (a < 0 || a >= n || b < 0 || b >= n) return std::nullopt;
    p.below[b] |= uint32_t{1} << a;
  }
  // closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < n; ++y) {
      uint32_t acc = p.below[y];
      uint32_t m = p.below[y];
      while (m) {
        int x = __builtin_ctz(m);
        m &= m - 1;
        acc |= p.below[x];
      }
      if (acc != p.below[y]) {
        p.below[y] = acc;
        changed = true;
      }
    }
  }
  if (!p.valid()) return std::nullopt;
  return p;
}

bool Poset::valid() const {
  if (int(below.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    if (!((below[x] >> x) & 1)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) return false;
      if (leq(x, y) && (below[x] & ~below[y])) return false;  // transitivity
    }
  return true;
}

namespace {

bool downclosed(const Poset& p, uint32_t mask) {
  uint32_t m = mask;
  while (m) {
    int x = __builtin_ctz(m);
    m &= m - 1;
    if (p.below[x] & ~mask) return false;
  }
  return true;
}

}  // namespace

int Poset::count_downsets(int limit) const {
  int count = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    if (downclosed(*this, mask)) {
      if (++count > limit) return limit + 1;
    }
  }
  return count;
}

Lattice downset_lattice(const Poset& p) {
  if (!p.valid()) throw usage_error("not a valid poset");
  if (p.n > 20) throw usage_error("downset_lattice supports at most 20 points");

  std::vector<uint32_t> sets;
  for (uint32_t mask = 0; mask < (uint32_t{1} << p.n); ++mask)
    if (downclosed(p, mask)) sets.push_back(mask);
  std::sort(sets.begin(), sets.end(), [](uint32_t a, uint32_t b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  int n = int(sets.size());
  std::vector<uint8_t> leq(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((sets[x] & ~sets[y]) == 0) leq[size_t(x) * n + y] = 1;
  return Lattice::from_leq(n, leq);
}

void enumerate_posets(int n, const std::function<void(const Poset&)>& yield) {
  if (n < 0 || n > 16) throw usage_error("enumerate_posets supports 0 <= n <= 16");
  std::vector<Poset> level = {Poset::antichain(0)};
  for (int k = 0; k < n; ++k) {
    std::map<std::vector<uint64_t>, Poset> next;
    for (const Poset& p : level) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << p.n); ++mask) {
        if (!downclosed(p, mask)) continue;
        Poset q = p;
        q.n = p.n + 1;
        q.below.push_back(mask | (uint32_t{1} << p.n));
        next.emplace(canonical_key(q), q);
      }
    }
    level.clear();
    for (auto& [key, q] : next) level.push_back(std::move(q));
  }
  for (const Poset& p : level) yield(p);
}

}  // namespace latq
