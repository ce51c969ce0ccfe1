#include "latq/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latq {

namespace {

// Rebuilds the canonical representation (classes ordered by smallest member).
Congruence canonicalize(const Lattice& l, const std::vector<int>& raw_class_of) {
  int n = l.size();
  std::map<int, ElementSet> by_raw;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = by_raw.try_emplace(raw_class_of[x], ElementSet(n));
    it->second.insert(x);
  }
  std::vector<ElementSet> classes;
  classes.reserve(by_raw.size());
  for (auto& [raw, s] : by_raw) classes.push_back(std::move(s));
  std::sort(classes.begin(), classes.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.min() < b.min(); });
  return Congruence::from_classes(l, std::move(classes));
}

}  // namespace

Congruence Congruence::from_classes(const Lattice& l, std::vector<ElementSet> classes) {
  int n = l.size();
  std::vector<int> class_of(n, -1);
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw usage_error("partition contains an empty class");
    if (classes[c].universe() != n) throw usage_error("partition class over wrong carrier");
    classes[c].for_each([&](int x) {
      if (class_of[x] != -1) throw usage_error("partition classes overlap");
      class_of[x] = int(c);
    });
  }
  for (int x = 0; x < n; ++x)
    if (class_of[x] == -1) throw usage_error("partition does not cover the carrier");

  std::sort(classes.begin(), classes.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.min() < b.min(); });
  Congruence c;
  c.classes_ = std::move(classes);
  c.class_of_.assign(n, -1);
  for (size_t k = 0; k < c.classes_.size(); ++k)
    c.classes_[k].for_each([&](int x) { c.class_of_[x] = int(k); });
  return c;
}

Congruence Congruence::from_class_of(const Lattice& l, const std::vector<int>& class_of) {
  if (int(class_of.size()) != l.size()) throw usage_error("partition map must be total");
  return canonicalize(l, class_of);
}

bool is_congruence(const Lattice& l, const Congruence& c) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!c.related(l.meet(x, z), l.meet(y, z))) return false;
        if (!c.related(l.join(x, z), l.join(y, z))) return false;
      }
    }
  return true;
}

Congruence identity_congruence(const Lattice& l) {
  std::vector<int> class_of(l.size());
  std::iota(class_of.begin(), class_of.end(), 0);
  return Congruence::from_class_of(l, class_of);
}

Congruence all_congruence(const Lattice& l) {
  return Congruence::from_class_of(l, std::vector<int>(l.size(), 0));
}

Congruence theta(const Lattice& l, const Derivation& d, const Ideal& i, bool allow_trivial) {
  if (is_trivial(l, i) && !allow_trivial)
    throw usage_error("theta requires a nontrivial ideal (the trivial case collapses everything)");
  int n = l.size();
  std::map<ElementSet, int> seen;
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) {
    ElementSet ann = annihilator(l, d, i, x).members;
    auto [it, fresh] = seen.try_emplace(std::move(ann), int(seen.size()));
    raw[x] = it->second;
  }
  return Congruence::from_class_of(l, raw);
}

Congruence kernel_congruence(const Lattice& l, const Derivation& d) {
  std::vector<int> raw(l.size());
  for (int x = 0; x < l.size(); ++x) raw[x] = d(x);
  return Congruence::from_class_of(l, raw);
}

QuotientLattice quotient(const Lattice& l, const Congruence& c) {
  if (!is_congruence(l, c)) throw usage_error("partition is not a lattice congruence");
  int n = l.size();
  int qn = c.num_classes();

  // Operations are well defined on classes; assert it exhaustively.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int rx = c.representative(c.class_of(x)), ry = c.representative(c.class_of(y));
      if (c.class_of(l.meet(x, y)) != c.class_of(l.meet(rx, ry)) ||
          c.class_of(l.join(x, y)) != c.class_of(l.join(rx, ry)))
        throw theorem_violation("congruence operations not well defined on classes");
    }

  std::vector<uint8_t> leq(size_t(qn) * qn, 0);
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b) {
      int m = l.meet(c.representative(a), c.representative(b));
      leq[size_t(a) * qn + b] = (c.class_of(m) == a);
    }
  std::vector<std::string> labels(qn);
  for (int a = 0; a < qn; ++a) labels[a] = set_to_string(l, c.class_set(a));

  QuotientLattice q;
  q.lattice = Lattice::from_leq(qn, leq, std::move(labels));
  q.projection.resize(n);
  for (int x = 0; x < n; ++x) q.projection[x] = c.class_of(x);
  q.section.resize(qn);
  for (int a = 0; a < qn; ++a) q.section[a] = c.representative(a);
  return q;
}

const char* to_string(CongruenceOrder o) {
  switch (o) {
    case CongruenceOrder::equal: return "equal";
    case CongruenceOrder::finer: return "finer";
    case CongruenceOrder::coarser: return "coarser";
    case CongruenceOrder::incomparable: return "incomparable";
  }
  return "?";
}

bool refines(const Congruence& a, const Congruence& b) {
  for (const ElementSet& cls : a.classes()) {
    int rep = cls.min();
    bool inside = true;
    cls.for_each([&](int x) { inside = inside && b.related(rep, x); });
    if (!inside) return false;
  }
  return true;
}

CongruenceOrder compare(const Congruence& a, const Congruence& b) {
  if (a.carrier_size() != b.carrier_size())
    throw usage_error("compare: congruences over different carriers");
  bool ab = refines(a, b), ba = refines(b, a);
  if (ab && ba) return CongruenceOrder::equal;
  if (ab) return CongruenceOrder::finer;
  if (ba) return CongruenceOrder::coarser;
  return CongruenceOrder::incomparable;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

Congruence close_under_compatibility(const Lattice& l, UnionFind uf,
                                     std::vector<std::pair<int, int>> pending) {
  int n = l.size();
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (int z = 0; z < n; ++z) {
      if (uf.unite(l.meet(x, z), l.meet(y, z)))
        pending.emplace_back(l.meet(x, z), l.meet(y, z));
      if (uf.unite(l.join(x, z), l.join(y, z)))
        pending.emplace_back(l.join(x, z), l.join(y, z));
    }
  }
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = uf.find(x);
  return Congruence::from_class_of(l, raw);
}

}  // namespace

Congruence principal_congruence(const Lattice& l, int a, int b) {
  UnionFind uf(l.size());
  std::vector<std::pair<int, int>> pending;
  if (uf.unite(a, b)) pending.emplace_back(a, b);
  return close_under_compatibility(l, std::move(uf), std::move(pending));
}

Congruence join(const Lattice& l, const Congruence& a, const Congruence& b) {
  // The transitive closure of the union of two congruences is compatible, so
  // no further closure pass is needed.
  UnionFind uf(l.size());
  for (const ElementSet& cls : a.classes()) {
    int rep = cls.min();
    cls.for_each([&](int x) { uf.unite(rep, x); });
  }
  for (const ElementSet& cls : b.classes()) {
    int rep = cls.min();
    cls.for_each([&](int x) { uf.unite(rep, x); });
  }
  std::vector<int> raw(l.size());
  for (int x = 0; x < l.size(); ++x) raw[x] = uf.find(x);
  return Congruence::from_class_of(l, raw);
}

std::vector<Congruence> enumerate_congruences(const Lattice& l) {
  int n = l.size();
  std::vector<Congruence> principals;
  std::set<std::vector<int>> seen_principal;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Congruence c = principal_congruence(l, a, b);
      std::vector<int> key(n);
      for (int x = 0; x < n; ++x) key[x] = c.class_of(x);
      if (seen_principal.insert(key).second) principals.push_back(std::move(c));
    }

  std::map<std::vector<int>, Congruence> all;
  auto key_of = [n](const Congruence& c) {
    std::vector<int> key(n);
    for (int x = 0; x < n; ++x) key[x] = c.class_of(x);
    return key;
  };
  std::vector<Congruence> frontier = {identity_congruence(l)};
  all.emplace(key_of(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& c : frontier)
      for (const Congruence& p : principals) {
        Congruence j = join(l, c, p);
        auto [it, fresh] = all.emplace(key_of(j), j);
        if (fresh) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out;
  out.reserve(all.size());
  for (auto& [key, c] : all) out.push_back(std::move(c));
  return out;
}

}  // namespace latq
