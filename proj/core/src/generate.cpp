#include "latq/generate.hpp"

#include <algorithm>
#include <map>

#include "latq/canonical.hpp"
#include "latq/error.hpp"
#include "latq/poset.hpp"

namespace latq {

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

// Distinct posets map to non-isomorphic downset lattices, so growing
// non-isomorphic posets and filtering by downset count yields each lattice
// exactly once. A poset is only extended while its downset count stays below
// the bound: attaching an element strictly increases the count, which both
// prunes the growth and keeps large antichains (the expensive canonical-form
// cases) out of the search.
void enumerate_distributive_lattices(int max_n,
                                     const std::function<void(const Lattice&)>& yield) {
  if (max_n < 1) throw usage_error("max_n must be at least 1");
  if (max_n > 16) throw usage_error("enumerate_distributive_lattices supports max_n <= 16");

  std::vector<std::pair<std::vector<uint64_t>, Lattice>> out;  // (lattice key, lattice)

  std::vector<Poset> level = {Poset::antichain(0)};
  out.emplace_back(canonical_key(downset_lattice(level[0])), downset_lattice(level[0]));

  for (int k = 0; k < max_n - 1; ++k) {
    std::map<std::vector<uint64_t>, Poset> next;
    for (const Poset& p : level) {
      if (p.count_downsets(max_n) >= max_n) continue;  // extensions would overflow
      for (uint32_t mask = 0; mask < (uint32_t{1} << p.n); ++mask) {
        if (!downclosed(p, mask)) continue;
        Poset q = p;
        q.n = p.n + 1;
        q.below.push_back(mask | (uint32_t{1} << p.n));
        next.emplace(canonical_key(q), q);
      }
    }
    level.clear();
    for (auto& [key, q] : next) {
      if (q.count_downsets(max_n) <= max_n) {
        Lattice l = downset_lattice(q);
        out.emplace_back(canonical_key(l), std::move(l));
      }
      level.push_back(std::move(q));
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  for (auto& [key, l] : out) yield(l);
}

std::vector<Lattice> distributive_lattices_up_to(int max_n) {
  std::vector<Lattice> v;
  enumerate_distributive_lattices(max_n, [&](const Lattice& l) { v.push_back(l); });
  return v;
}

}  // namespace latq
