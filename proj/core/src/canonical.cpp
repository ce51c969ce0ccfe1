#include "latq/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latq {

namespace {

// Iterated colour refinement over the order relation. Colour ids are assigned
// by sorting signatures, so they are invariant under relabeling.
std::vector<int> refine_colors(int n, const std::function<bool(int, int)>& leq) {
  std::vector<int> color(n, 0);
  {
    std::vector<std::pair<std::pair<int, int>, int>> sig(n);
    for (int x = 0; x < n; ++x) {
      int dn = 0, up = 0;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (leq(y, x)) ++dn;
        if (leq(x, y)) ++up;
      }
      sig[x] = {{dn, up}, x};
    }
    std::vector<std::pair<int, int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int x = 0; x < n; ++x)
      color[x] = int(std::lower_bound(keys.begin(), keys.end(), sig[x].first) - keys.begin());
  }

  int classes = 0;
  while (true) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> below, above;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (leq(y, x)) below.push_back(color[y]);
        if (leq(x, y)) above.push_back(color[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[x] = {color[x], std::move(below), std::move(above)};
    }
    std::vector<Sig> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int x = 0; x < n; ++x)
      color[x] = int(std::lower_bound(keys.begin(), keys.end(), sig[x]) - keys.begin());
    if (int(keys.size()) == classes) break;
    classes = int(keys.size());
  }
  return color;
}

// Bit stream with prefix comparison against the best-so-far key.
struct KeySearch {
  const int n;
  const std::function<bool(int, int)>& leq;
  std::vector<std::vector<int>> blocks;  // candidate elements per colour class
  std::vector<int> perm;                 // position -> element
  std::vector<char> used;

  std::vector<uint64_t> best;
  bool have_best = false;
  long best_version = 0;

  std::vector<uint64_t> cur;
  int cur_bits = 0;
  int state = 0;  // 0: equal to best prefix, 1: strictly below best

  explicit KeySearch(int n_, const std::function<bool(int, int)>& leq_) : n(n_), leq(leq_) {
    used.assign(n, 0);
    cur.assign((size_t(n) * n * 2 + 63) / 64 + 1, 0);
  }

  bool append(bool bit) {
    if (bit) cur[cur_bits >> 6] |= uint64_t{1} << (cur_bits & 63);
    if (have_best && state == 0) {
      bool bb = (best[cur_bits >> 6] >> (cur_bits & 63)) & 1;
      if (bit && !bb) {
        ++cur_bits;
        return false;  // worse than best; prune
      }
      if (!bit && bb) state = 1;
    }
    ++cur_bits;
    return true;
  }

  // When a new best is installed, every saved comparison state is stale; any
  // ancestor prefix is by construction a prefix of the new best, so it
  // compares as equal (state 0).
  void truncate(int bits, int old_state, long old_version) {
    for (int b = bits; b < cur_bits; ++b) cur[b >> 6] &= ~(uint64_t{1} << (b & 63));
    cur_bits = bits;
    state = (old_version == best_version) ? old_state : 0;
  }

  void search(int pos) {
    if (pos == n) {
      if (!have_best || state == 1) {
        best = cur;
        have_best = true;
        ++best_version;
        state = 0;
      }
      return;
    }
    size_t block = 0, seen = 0;
    for (; block < blocks.size(); ++block) {
      if (pos < int(seen + blocks[block].size())) break;
      seen += blocks[block].size();
    }
    for (int e : blocks[block]) {
      if (used[e]) continue;
      int save_bits = cur_bits, save_state = state;
      long save_version = best_version;
      bool alive = true;
      for (int i = 0; i < pos && alive; ++i) {
        alive = append(leq(perm[i], e));
        if (alive) alive = append(leq(e, perm[i]));
      }
      if (alive) {
        used[e] = 1;
        perm[pos] = e;
        search(pos + 1);
        used[e] = 0;
      }
      truncate(save_bits, save_state, save_version);
    }
  }
};

}  // namespace

std::vector<uint64_t> canonical_order_key(int n, const std::function<bool(int, int)>& leq) {
  std::vector<int> color = refine_colors(n, leq);
  int classes = n ? *std::max_element(color.begin(), color.end()) + 1 : 0;

  KeySearch ks(n, leq);
  ks.blocks.assign(classes, {});
  for (int x = 0; x < n; ++x) ks.blocks[color[x]].push_back(x);
  ks.perm.assign(n, -1);
  ks.search(0);

  std::vector<uint64_t> key;
  key.push_back(uint64_t(n));
  // class sizes are iso-invariant; include them to keep keys prefix-free
  for (const auto& b : ks.blocks) key.push_back(uint64_t(b.size()));
  for (uint64_t w : ks.best) key.push_back(w);
  return key;
}

std::vector<uint64_t> canonical_key(const Lattice& l) {
  return canonical_order_key(l.size(), [&](int x, int y) { return l.leq(x, y); });
}

std::vector<uint64_t> canonical_key(const Poset& p) {
  return canonical_order_key(p.n, [&](int x, int y) { return p.leq(x, y); });
}

bool isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::string key_to_hex(const std::vector<uint64_t>& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (uint64_t w : key) {
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(digits[(w >> shift) & 15]);
    out.push_back('.');
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string canonical_fingerprint(const Lattice& l) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the key bytes
  for (uint64_t w : canonical_key(l))
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xff;
      h *= 0x100000001b3ull;
    }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace latq
