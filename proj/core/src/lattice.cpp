#include "latq/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "latq/poset.hpp"

namespace latq {

const char* axiom_name(LatticeAxiom a) {
  switch (a) {
    case LatticeAxiom::reflexivity: return "reflexivity";
    case LatticeAxiom::antisymmetry: return "antisymmetry";
    case LatticeAxiom::transitivity: return "transitivity";
    case LatticeAxiom::meet_exists: return "meet existence";
    case LatticeAxiom::join_exists: return "join existence";
    case LatticeAxiom::meet_table: return "meet table";
    case LatticeAxiom::join_table: return "join table";
    case LatticeAxiom::bounds: return "bounds";
    case LatticeAxiom::distributivity: return "distributivity";
  }
  return "?";
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  return labels;
}

void add_violation(ValidationReport& r, LatticeAxiom a, std::array<int, 3> w, std::string detail) {
  r.violations.push_back({a, w, std::move(detail)});
}

// Checks the poset laws on a raw relation. Returns false when the relation is
// too broken to search for bounds meaningfully (non-poset).
bool check_poset(int n, const std::vector<uint8_t>& leq, ValidationReport& r) {
  bool ok = true;
  for (int x = 0; x < n; ++x)
    if (!leq[size_t(x) * n + x]) {
      add_violation(r, LatticeAxiom::reflexivity, {x, -1, -1},
                    "x <= x fails at x=" + std::to_string(x));
      ok = false;
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (leq[size_t(x) * n + y] && leq[size_t(y) * n + x]) {
        add_violation(r, LatticeAxiom::antisymmetry, {x, y, -1},
                      "x <= y and y <= x for distinct x=" + std::to_string(x) +
                          " y=" + std::to_string(y));
        ok = false;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq[size_t(x) * n + y]) continue;
      for (int z = 0; z < n; ++z)
        if (leq[size_t(y) * n + z] && !leq[size_t(x) * n + z]) {
          add_violation(r, LatticeAxiom::transitivity, {x, y, z},
                        "x <= y <= z but not x <= z at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")");
          ok = false;
        }
    }
  return ok;
}

// Greatest lower bound of {x, y} under leq, or -1.
int find_glb(int n, const std::vector<uint8_t>& leq, int x, int y) {
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq[size_t(z) * n + x] || !leq[size_t(z) * n + y]) continue;
    if (best < 0 || leq[size_t(best) * n + z]) best = z;
  }
  if (best < 0) return -1;
  for (int z = 0; z < n; ++z)
    if (leq[size_t(z) * n + x] && leq[size_t(z) * n + y] && !leq[size_t(z) * n + best]) return -1;
  return best;
}

int find_lub(int n, const std::vector<uint8_t>& leq, int x, int y) {
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq[size_t(x) * n + z] || !leq[size_t(y) * n + z]) continue;
    if (best < 0 || leq[size_t(z) * n + best]) best = z;
  }
  if (best < 0) return -1;
  for (int z = 0; z < n; ++z)
    if (leq[size_t(x) * n + z] && leq[size_t(y) * n + z] && !leq[size_t(best) * n + z]) return -1;
  return best;
}

}  // namespace

struct LatticeBuilder {
  static Lattice assemble(int n, std::vector<uint8_t> leq, std::vector<int> meet,
                          std::vector<int> join, std::optional<int> bottom,
                          std::optional<int> top, bool distributive,
                          std::vector<std::string> labels) {
    Lattice l;
    l.n_ = n;
    l.leq_ = std::move(leq);
    l.meet_ = std::move(meet);
    l.join_ = std::move(join);
    l.bottom_ = bottom;
    l.top_ = top;
    l.distributive_ = distributive;
    l.labels_ = std::move(labels);
    return l;
  }
};

LatticeBuildResult try_build_lattice(int n, const std::vector<uint8_t>& leq,
                                     std::vector<std::string> labels) {
  LatticeBuildResult out;
  if (n < 1) {
    add_violation(out.report, LatticeAxiom::bounds, {-1, -1, -1}, "empty carrier");
    return out;
  }
  if (leq.size() != size_t(n) * n) throw usage_error("order relation has wrong size");
  if (labels.empty()) labels = default_labels(n);
  if (int(labels.size()) != n) throw usage_error("label count does not match carrier size");

  if (!check_poset(n, leq, out.report)) return out;

  std::vector<int> meet(size_t(n) * n, -1), join(size_t(n) * n, -1);
  bool tables_ok = true;
  for (int x = 0; x < n && tables_ok; ++x)
    for (int y = x; y < n; ++y) {
      int m = find_glb(n, leq, x, y);
      if (m < 0) {
        add_violation(out.report, LatticeAxiom::meet_exists, {x, y, -1},
                      "no greatest lower bound for (" + labels[x] + "," + labels[y] + ")");
        tables_ok = false;
        break;
      }
      int j = find_lub(n, leq, x, y);
      if (j < 0) {
        add_violation(out.report, LatticeAxiom::join_exists, {x, y, -1},
                      "no least upper bound for (" + labels[x] + "," + labels[y] + ")");
        tables_ok = false;
        break;
      }
      meet[size_t(x) * n + y] = meet[size_t(y) * n + x] = m;
      join[size_t(x) * n + y] = join[size_t(y) * n + x] = j;
    }
  if (!tables_ok) return out;

  std::optional<int> bottom, top;
  for (int c = 0; c < n; ++c) {
    bool is_bot = true, is_top = true;
    for (int x = 0; x < n; ++x) {
      is_bot = is_bot && leq[size_t(c) * n + x];
      is_top = is_top && leq[size_t(x) * n + c];
    }
    if (is_bot) bottom = c;
    if (is_top) top = c;
  }

  bool distributive = true;
  for (int x = 0; x < n && distributive; ++x)
    for (int y = 0; y < n && distributive; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = meet[size_t(x) * n + join[size_t(y) * n + z]];
        int rhs = join[size_t(meet[size_t(x) * n + y]) * n + meet[size_t(x) * n + z]];
        if (lhs != rhs) {
          add_violation(out.report, LatticeAxiom::distributivity, {x, y, z},
                        "x^(yvz) != (x^y)v(x^z) at (" + labels[x] + "," + labels[y] + "," +
                            labels[z] + ")");
          distributive = false;
          break;
        }
      }

  out.lattice = LatticeBuilder::assemble(n, leq, std::move(meet), std::move(join), bottom, top,
                                         distributive, std::move(labels));
  return out;
}

Lattice Lattice::from_leq(int n, const std::vector<uint8_t>& leq, std::vector<std::string> labels) {
  auto r = try_build_lattice(n, leq, std::move(labels));
  if (!r.lattice) {
    const AxiomViolation* v = r.report.first();
    throw invalid_lattice("not a lattice: " + (v ? v->detail : std::string("unknown")),
                          v ? axiom_name(v->axiom) : "?");
  }
  return std::move(*r.lattice);
}

Lattice Lattice::from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<int, int>>& covers) {
  int n = int(labels.size());
  std::vector<uint8_t> leq(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x) leq[size_t(x) * n + x] = 1;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) throw usage_error("cover index out of range");
    leq[size_t(lo) * n + hi] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (leq[size_t(x) * n + k])
        for (int y = 0; y < n; ++y)
          if (leq[size_t(k) * n + y]) leq[size_t(x) * n + y] = 1;
  return from_leq(n, leq, labels);
}

std::optional<int> Lattice::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ElementSet Lattice::down_set(int a) const {
  ElementSet s(n_);
  for (int x = 0; x < n_; ++x)
    if (leq(x, a)) s.insert(x);
  return s;
}

ElementSet Lattice::up_set(int a) const {
  ElementSet s(n_);
  for (int x = 0; x < n_; ++x)
    if (leq(a, x)) s.insert(x);
  return s;
}

bool Lattice::covers(int x, int y) const {
  if (x == y || !leq(x, y)) return false;
  for (int z = 0; z < n_; ++z)
    if (z != x && z != y && leq(x, z) && leq(z, y)) return false;
  return true;
}

ValidationReport validate(const Lattice& l) {
  int n = l.size();
  std::vector<uint8_t> leq(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq[size_t(x) * n + y] = l.leq(x, y);

  ValidationReport r;
  if (!check_poset(n, leq, r)) return r;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = find_glb(n, leq, x, y);
      if (m < 0)
        add_violation(r, LatticeAxiom::meet_exists, {x, y, -1},
                      "no greatest lower bound for (" + l.label(x) + "," + l.label(y) + ")");
      else if (m != l.meet(x, y))
        add_violation(r, LatticeAxiom::meet_table, {x, y, -1},
                      "meet table disagrees with the order at (" + l.label(x) + "," + l.label(y) + ")");
      int j = find_lub(n, leq, x, y);
      if (j < 0)
        add_violation(r, LatticeAxiom::join_exists, {x, y, -1},
                      "no least upper bound for (" + l.label(x) + "," + l.label(y) + ")");
      else if (j != l.join(x, y))
        add_violation(r, LatticeAxiom::join_table, {x, y, -1},
                      "join table disagrees with the order at (" + l.label(x) + "," + l.label(y) + ")");
    }
  if (!r.violations.empty()) return r;

  if (l.bottom() && !ElementSet::full(n).is_subset_of(l.up_set(*l.bottom())))
    add_violation(r, LatticeAxiom::bounds, {*l.bottom(), -1, -1}, "bottom not below every element");
  if (l.top() && !ElementSet::full(n).is_subset_of(l.down_set(*l.top())))
    add_violation(r, LatticeAxiom::bounds, {*l.top(), -1, -1}, "top not above every element");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = l.meet(x, l.join(y, z));
        int rhs = l.join(l.meet(x, y), l.meet(x, z));
        if (lhs != rhs) {
          add_violation(r, LatticeAxiom::distributivity, {x, y, z},
                        "x^(yvz) != (x^y)v(x^z) at (" + l.label(x) + "," + l.label(y) + "," +
                            l.label(z) + ")");
          return r;
        }
      }
  return r;
}

Lattice chain(int k) {
  if (k < 1) throw usage_error("chain length must be at least 1");
  std::vector<uint8_t> leq(size_t(k) * k, 0);
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) leq[size_t(x) * k + y] = 1;
  return Lattice::from_leq(k, leq);
}

Lattice boolean_lattice(int k) {
  if (k < 0 || k > 16) throw usage_error("boolean_lattice supports 0 <= k <= 16");
  return downset_lattice(Poset::antichain(k));
}

LatticeFacts sublattice_facts(const Lattice& l) {
  LatticeFacts f;
  int n = l.size();
  f.is_chain = true;
  for (int x = 0; x < n && f.is_chain; ++x)
    for (int y = 0; y < n; ++y)
      if (!l.leq(x, y) && !l.leq(y, x)) {
        f.is_chain = false;
        break;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.covers(x, y)) f.covers.emplace_back(x, y);
  if (l.bottom())
    for (int y = 0; y < n; ++y)
      if (l.covers(*l.bottom(), y)) f.atoms.push_back(y);
  if (l.top())
    for (int x = 0; x < n; ++x)
      if (l.covers(x, *l.top())) f.coatoms.push_back(x);
  return f;
}

std::string set_to_string(const Lattice& l, const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](int e) {
    if (!first) os << ", ";
    first = false;
    os << l.label(e);
  });
  os << '}';
  return os.str();
}

}  // namespace latq
