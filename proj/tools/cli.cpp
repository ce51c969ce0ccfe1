#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "latq/boolean.hpp"
#include "latq/canonical.hpp"
#include "latq/claims.hpp"
#include "latq/congruence.hpp"
#include "latq/derivation.hpp"
#include "latq/generate.hpp"
#include "latq/ideal.hpp"
#include "latq/io.hpp"
#include "latq/search.hpp"

namespace latq::cli {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_partial = 2;
constexpr int exit_usage = 64;
constexpr int exit_invalid = 65;

struct Options {
  std::string format = "text";
  std::optional<long> seed;
  bool allow_nondistributive = false;
  bool machine() const { return format == "jsonl"; }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int element_of(const Lattice& l, const std::string& label) {
  auto idx = l.index_of(label);
  if (!idx) throw usage_error("unknown element label '" + label + "'");
  return *idx;
}

ElementSet set_from_labels(const Lattice& l, const std::string& csv) {
  ElementSet s(l.size());
  for (const std::string& lab : split(csv, ',')) s.insert(element_of(l, lab));
  return s;
}

Derivation map_from_string(const Lattice& l, const std::string& spec) {
  std::vector<int> map(l.size(), -1);
  for (const std::string& pair : split(spec, ',')) {
    auto colon = pair.find(':');
    if (colon == std::string::npos) throw usage_error("map entries look like 'x:y'");
    int from = element_of(l, pair.substr(0, colon));
    int to = element_of(l, pair.substr(colon + 1));
    if (map[from] != -1) throw usage_error("map assigns '" + l.label(from) + "' twice");
    map[from] = to;
  }
  for (int x = 0; x < l.size(); ++x)
    if (map[x] == -1) throw usage_error("map misses element '" + l.label(x) + "'");
  return Derivation{map};
}

json set_json(const Lattice& l, const ElementSet& s) {
  json arr = json::array();
  s.for_each([&](int e) { arr.push_back(l.label(e)); });
  return arr;
}

struct DerivationSelector {
  bool id = false;
  std::string lambda;
  std::string map;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_flag("--id", id, "use the identity derivation");
    auto* b = cmd->add_option("--lambda", lambda, "use the derivation x -> a ^ x for the element a");
    auto* c = cmd->add_option("--map", map, "explicit derivation table 'x:y,...'");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  Derivation resolve(const Lattice& l) const {
    int picked = int(id) + int(!lambda.empty()) + int(!map.empty());
    if (picked != 1) throw usage_error("pick exactly one of --id, --lambda, --map");
    if (id) return identity_derivation(l);
    if (!lambda.empty()) return lambda_derivation(l, element_of(l, lambda));
    Derivation d = map_from_string(l, map);
    DerivationCheck chk = is_derivation(l, d.map);
    if (!chk.ok) {
      std::string w = chk.witness ? " at (" + l.label(chk.witness->first) + "," +
                                        l.label(chk.witness->second) + ")"
                                  : "";
      throw usage_error("map is not a derivation: " + chk.violated_axiom + w);
    }
    return d;
  }
};

Lattice load(const std::string& path, const Options& opt) {
  LoadOptions lo;
  lo.allow_nondistributive = opt.allow_nondistributive;
  return load_lattice_file(path, lo);
}

void emit_config(std::ostream& out, const Options& opt, const std::string& command) {
  if (opt.machine()) {
    json j{{"record", "config"}, {"command", command}};
    j["seed"] = opt.seed ? json(*opt.seed) : json(nullptr);
    out << j.dump() << "\n";
  } else if (opt.seed) {
    out << "seed: " << *opt.seed << "\n";
  }
}

// ---- subcommand bodies ------------------------------------------------------

int run_dot(const std::string& path, const Options& opt, std::ostream& out) {
  out << to_dot(load(path, opt));
  return exit_ok;
}

int run_ideals(const std::string& mode, const std::string& path, const std::string& base_csv,
               const Options& opt, std::ostream& out) {
  Lattice l = load(path, opt);
  emit_config(out, opt, "ideals " + mode);
  auto generator_of = [&](const Ideal& i) {
    int gen = i.members.min();
    i.members.for_each([&](int e) {
      if (l.leq(gen, e)) gen = e;
    });
    return gen;
  };
  auto print = [&](const Ideal& i, const char* record) {
    if (opt.machine()) {
      json j{{"record", record}, {"members", set_json(l, i.members)},
             {"principal_generator", l.label(generator_of(i))},
             {"prime", is_prime_ideal(l, i)}};
      out << j.dump() << "\n";
    } else {
      out << set_to_string(l, i.members) << (is_prime_ideal(l, i) ? "  (prime)" : "") << "\n";
    }
  };
  if (mode == "list") {
    for (const Ideal& i : enumerate_ideals(l)) print(i, "ideal");
  } else if (mode == "primes") {
    for (const Ideal& i : prime_ideals(l)) print(i, "prime_ideal");
  } else {
    Ideal base = as_ideal(l, set_from_labels(l, base_csv));
    for (const Ideal& i : i_minimal_primes(l, base)) print(i, "minimal_prime");
  }
  return exit_ok;
}

int run_derivations_list(const std::string& path, const Options& opt, std::ostream& out) {
  Lattice l = load(path, opt);
  emit_config(out, opt, "derivations list");
  for (const Derivation& d : enumerate_derivations(l)) {
    if (opt.machine()) {
      json j{{"record", "derivation"}, {"map", derivation_to_string(l, d)},
             {"lambda_of", l.label(l.top() ? d(*l.top()) : d(0))}};
      out << j.dump() << "\n";
    } else {
      out << derivation_to_string(l, d) << "\n";
    }
  }
  return exit_ok;
}

int run_derivations_check(const std::string& path, const std::string& map, const Options& opt,
                          std::ostream& out) {
  Lattice l = load(path, opt);
  emit_config(out, opt, "derivations check");
  Derivation d = map_from_string(l, map);
  DerivationCheck chk = is_derivation(l, d.map);
  if (opt.machine()) {
    json j{{"record", "derivation_check"}, {"ok", chk.ok}};
    if (!chk.ok) {
      j["violated_axiom"] = chk.violated_axiom;
      j["witness"] = json::array(
          {l.label(chk.witness->first), l.label(chk.witness->second)});
    }
    out << j.dump() << "\n";
  } else if (chk.ok) {
    out << "derivation: yes\n";
  } else {
    out << "derivation: no; first violated axiom: " << chk.violated_axiom << " at ("
        << l.label(chk.witness->first) << "," << l.label(chk.witness->second) << ")\n";
  }
  return exit_ok;
}

int run_derivations_kernel(const std::string& path, const std::string& ideal_csv,
                           const DerivationSelector& sel, const Options& opt, std::ostream& out) {
  Lattice l = load(path, opt);
  emit_config(out, opt, "derivations kernel");
  Ideal i = as_ideal(l, set_from_labels(l, ideal_csv));
  Derivation d = sel.resolve(l);
  Ideal ker = kernel_ideal(l, d, i);
  ElementSet k = kernel_elements(l, d, i);
  if (opt.machine()) {
    out << json{{"record", "kernel_ideal"}, {"members", set_json(l, ker.members)}}.dump() << "\n";
    out << json{{"record", "kernel_elements"}, {"members", set_json(l, k)}}.dump() << "\n";
    for (int a = 0; a < l.size(); ++a)
      out << json{{"record", "annihilator"},
                  {"element", l.label(a)},
                  {"members", set_json(l, annihilator(l, d, i, a).members)}}
                 .dump()
          << "\n";
  } else {
    out << "kernel ideal: " << set_to_string(l, ker.members) << "\n";
    out << "kernel elements: " << set_to_string(l, k) << "\n";
    for (int a = 0; a < l.size(); ++a)
      out << "(" << l.label(a)
          << ") = " << set_to_string(l, annihilator(l, d, i, a).members) << "\n";
  }
  return exit_ok;
}

int run_theta(const std::string& path, const std::string& ideal_csv, const DerivationSelector& sel,
              bool allow_trivial, const Options& opt, std::ostream& out) {
  Lattice l = load(path, opt);
  emit_config(out, opt, "theta");
  Ideal i = as_ideal(l, set_from_labels(l, ideal_csv));
  if (is_trivial(l, i) && !allow_trivial)
    throw usage_error("the ideal is the whole carrier; pass --allow-trivial for the degenerate case");
  Derivation d = sel.resolve(l);
  Congruence th = theta(l, d, i, allow_trivial);
  QuotientLattice q = quotient(l, th);
  Ideal ker = kernel_ideal(l, d, i);
  ElementSet k = kernel_elements(l, d, i);
  std::optional<int> bottom_class = q.lattice.bottom();
  std::optional<int> top_class = q.lattice.top();

  if (opt.machine()) {
    out << json{{"record", "kernel_ideal"}, {"members", set_json(l, ker.members)}}.dump() << "\n";
    out << json{{"record", "kernel_elements"}, {"members", set_json(l, k)}}.dump() << "\n";
    for (int c = 0; c < th.num_classes(); ++c)
      out << json{{"record", "theta_class"},
                  {"id", c},
                  {"members", set_json(l, th.class_set(c))},
                  {"is_bottom", bottom_class && c == *bottom_class},
                  {"is_top", top_class && c == *top_class}}
                 .dump()
          << "\n";
    out << json{{"record", "quotient"},
                {"classes", th.num_classes()},
                {"boolean", is_boolean_algebra(q.lattice).is_boolean}}
               .dump()
        << "\n";
    out << json{{"record", "dot"}, {"kind", "lattice"}, {"dot", to_dot(l, th, bottom_class, top_class)}}.dump()
        << "\n";
    out << json{{"record", "dot"}, {"kind", "quotient"}, {"dot", to_dot(q.lattice)}}.dump() << "\n";
  } else {
    out << "kernel ideal: " << set_to_string(l, ker.members) << "\n";
    out << "kernel elements: " << set_to_string(l, k) << "\n";
    out << "classes: " << th.num_classes() << "\n";
    for (int c = 0; c < th.num_classes(); ++c) {
      out << "  [" << c << "] " << set_to_string(l, th.class_set(c));
      if (bottom_class && c == *bottom_class) out << "  <- bottom (kernel ideal)";
      if (top_class && c == *top_class) out << "  <- top (kernel elements)";
      out << "\n";
    }
    out << "quotient: " << th.num_classes() << " classes, "
        << (is_boolean_algebra(q.lattice).is_boolean ? "boolean" : "not boolean") << "\n";
    out << "dot (lattice, classes coloured):\n" << to_dot(l, th, bottom_class, top_class);
    out << "dot (quotient):\n" << to_dot(q.lattice);
  }
  return exit_ok;
}

int run_analyze(const std::string& path, const std::string& ideal_csv,
                const DerivationSelector& sel, const Options& opt, std::ostream& out) {
  Lattice l = load(path, opt);
  emit_config(out, opt, "analyze");
  Ideal i = as_ideal(l, set_from_labels(l, ideal_csv));
  if (is_trivial(l, i)) throw usage_error("analyze requires a nontrivial ideal");
  Derivation d = sel.resolve(l);

  Ideal ker = kernel_ideal(l, d, i);
  ElementSet k = kernel_elements(l, d, i);
  Congruence th = theta(l, d, i);
  QuotientLattice q = quotient(l, th);
  BooleanVerdict verdict = quotient_boolean(l, d, i);
  SigmaLattice sigma = sigma_poset(l, d, i);
  SigmaMaximalReport maximal = sigma_maximal_analysis(l, d, i);
  AtomReport atoms = atom_report(l, d, i);
  TwoElementReport two = two_element_criterion(l, d, i);

  if (opt.machine()) {
    out << json{{"record", "lattice"},
                {"n", l.size()},
                {"elements", l.labels()},
                {"distributive", l.distributive()},
                {"key", canonical_fingerprint(l)}}
               .dump()
        << "\n";
    out << json{{"record", "input"},
                {"ideal", set_json(l, i.members)},
                {"map", derivation_to_string(l, d)}}
               .dump()
        << "\n";
    out << json{{"record", "kernel_ideal"}, {"members", set_json(l, ker.members)},
                {"prime", is_prime_ideal(l, ker)}}
               .dump()
        << "\n";
    out << json{{"record", "kernel_elements"}, {"members", set_json(l, k)}}.dump() << "\n";
    for (int a = 0; a < l.size(); ++a)
      out << json{{"record", "annihilator"},
                  {"element", l.label(a)},
                  {"members", set_json(l, annihilator(l, d, i, a).members)}}
                 .dump()
          << "\n";
    for (int c = 0; c < th.num_classes(); ++c)
      out << json{{"record", "theta_class"}, {"id", c}, {"members", set_json(l, th.class_set(c))}}
                 .dump()
          << "\n";
    json vb{{"record", "boolean_verdict"}, {"boolean", verdict.is_boolean}};
    if (verdict.is_boolean) {
      json w = json::array();
      for (int x = 0; x < l.size(); ++x)
        w.push_back(json::array({l.label(x), l.label(verdict.witness[x])}));
      vb["witness"] = w;
    } else {
      vb["failure"] = l.label(*verdict.failure);
    }
    out << vb.dump() << "\n";
    out << json{{"record", "two_element"},
                {"quotient_is_two", two.quotient_is_two},
                {"kernel_prime", two.kernel_prime}}
               .dump()
        << "\n";
    out << json{{"record", "sigma"}, {"size", sigma.lattice.size()}}.dump() << "\n";
    json mj{{"record", "sigma_maximal"}, {"vacuous", maximal.vacuous}};
    if (!maximal.vacuous) {
      json reps = json::array();
      for (int r : maximal.maximal_reps) reps.push_back(l.label(r));
      mj["maximal"] = reps;
      mj["maximal_iff_prime"] = maximal.maximal_iff_prime;
      mj["maximal_iff_minimal_prime"] = maximal.maximal_iff_minimal_prime;
      mj["intersection_is_kernel"] = maximal.intersection_is_kernel;
    }
    out << mj.dump() << "\n";
    out << json{{"record", "atoms"},
                {"members", set_json(l, atoms.atoms)},
                {"atomic", atoms.is_atomic},
                {"atomic_literal", atoms.is_atomic_literal},
                {"gamma", set_json(l, atoms.gamma)}}
               .dump()
        << "\n";
  } else {
    out << "lattice: " << l.size() << " elements, "
        << (l.distributive() ? "distributive" : "NOT distributive");
    if (l.bottom()) out << ", bottom=" << l.label(*l.bottom());
    if (l.top()) out << ", top=" << l.label(*l.top());
    out << "\n";
    out << "ideal: " << set_to_string(l, i.members)
        << (is_prime_ideal(l, i) ? "  (prime)" : "  (not prime)") << "\n";
    out << "derivation: " << derivation_to_string(l, d) << "\n";
    out << "kernel ideal: " << set_to_string(l, ker.members)
        << (is_prime_ideal(l, ker) ? "  (prime)" : "  (not prime)") << "\n";
    out << "kernel elements: " << set_to_string(l, k) << "\n";
    out << "annihilators:\n";
    for (int a = 0; a < l.size(); ++a)
      out << "  (" << l.label(a)
          << ") = " << set_to_string(l, annihilator(l, d, i, a).members) << "\n";
    out << "classes: " << th.num_classes() << "\n";
    for (int c = 0; c < th.num_classes(); ++c)
      out << "  [" << c << "] " << set_to_string(l, th.class_set(c)) << "\n";
    out << "boolean: " << (verdict.is_boolean ? "yes" : "no")
        << " (decision routes agree)\n";
    if (verdict.is_boolean) {
      out << "complement witnesses:";
      for (int x = 0; x < l.size(); ++x)
        out << " " << l.label(x) << "->" << l.label(verdict.witness[x]);
      out << "\n";
    }
    out << "two-element quotient: " << (two.quotient_is_two ? "yes" : "no")
        << "; kernel ideal prime: " << (two.kernel_prime ? "yes" : "no") << "\n";
    out << "sigma: " << sigma.lattice.size() << " annihilator classes\n";
    if (maximal.vacuous) {
      out << "sigma maximal analysis: vacuous (kernel ideal is the whole carrier)\n";
    } else {
      out << "maximal annihilators:";
      for (int r : maximal.maximal_reps) out << " (" << l.label(r) << ")";
      out << "; prime: " << (maximal.maximal_iff_prime ? "yes" : "MISMATCH")
          << "; minimal primes: " << (maximal.maximal_iff_minimal_prime ? "yes" : "MISMATCH")
          << "; intersection = kernel: " << (maximal.intersection_is_kernel ? "yes" : "MISMATCH")
          << "\n";
    }
    out << "atoms over the kernel ideal: " << set_to_string(l, atoms.atoms)
        << "; atomic: " << (atoms.is_atomic ? "yes" : "no")
        << " (literal reading: " << (atoms.is_atomic_literal ? "yes" : "no") << ")\n";
    out << "gamma: " << set_to_string(l, atoms.gamma) << "\n";
  }
  return exit_ok;
}

int run_verify(int max_size, const std::string& claims_csv, bool fail_fast,
               const std::string& reproducer_dir, const Options& opt, std::ostream& out) {
  VerifyOptions vo;
  vo.max_size = max_size;
  vo.claims = split(claims_csv, ',');
  vo.fail_fast = fail_fast;
  emit_config(out, opt, "verify");
  VerifyReport r = run_verify(vo);

  long violations = 0;
  for (const ClaimTally& t : r.tallies) {
    if (t.fail > 0 && t.gate) ++violations;
    if (opt.machine()) {
      json j{{"record", "claim"}, {"id", t.id},     {"gate", t.gate}, {"pass", t.pass},
             {"fail", t.fail},    {"skip", t.skip}};
      if (t.fail > 0) j["first_failure"] = t.first_failure;
      out << j.dump() << "\n";
    } else {
      out << (t.fail == 0 ? "ok   " : (t.gate ? "FAIL " : "info "));
      out << t.id << "  pass=" << t.pass << " fail=" << t.fail << " skip=" << t.skip << "\n";
      if (t.fail > 0) out << "     first failure: " << t.first_failure << "\n";
    }
    if (t.fail > 0 && t.gate && !reproducer_dir.empty()) {
      std::string safe = t.id;
      for (char& ch : safe)
        if (ch == '.' || ch == '/') ch = '-';
      std::filesystem::create_directories(reproducer_dir);
      std::ofstream f(reproducer_dir + "/violation-" + safe + ".lat");
      f << t.reproducer_document;
    }
  }
  if (opt.machine()) {
    out << json{{"record", "verify_summary"},
                {"lattices", r.lattices},
                {"scenarios", r.scenarios},
                {"gate_violations", violations},
                {"aborted", r.aborted}}
               .dump()
        << "\n";
  } else {
    out << "lattices: " << r.lattices << "  scenarios: " << r.scenarios
        << "  gate violations: " << violations << (r.aborted ? "  (aborted)" : "") << "\n";
  }
  return violations == 0 ? exit_ok : exit_violation;
}

int run_search(int max_size, long budget, const Options& opt, std::ostream& out) {
  SearchOptions so;
  so.max_size = max_size;
  so.budget = budget;
  emit_config(out, opt, "search-openq");
  SearchFindings f = open_question_search(so);

  if (opt.machine()) {
    for (const IdealFinding& fd : f.findings)
      out << json{{"record", "finding"},
                  {"lattice", fd.lattice_key},
                  {"n", fd.n},
                  {"ideal", fd.ideal},
                  {"distinct_thetas", fd.distinct_thetas},
                  {"all_quotients_boolean", fd.all_quotients_boolean},
                  {"id_theta_minimum", fd.id_theta_minimum},
                  {"ideal_prime", fd.ideal_prime},
                  {"atomic_partition_condition", fd.atomic_partition_condition},
                  {"id_theta_is_identity", fd.id_theta_is_identity}}
                 .dump()
          << "\n";
    for (const FamilyTally& fam : f.families) {
      json j{{"record", "conclusion_tally"},
             {"id", fam.id},
             {"cases", fam.cases},
             {"counterexamples", fam.counterexamples}};
      if (fam.counterexamples > 0) j["first_counterexample"] = fam.first_counterexample;
      out << j.dump() << "\n";
    }
    for (const ConditionTally& c : f.conditions)
      out << json{{"record", "condition_tally"},
                  {"condition", c.condition},
                  {"tt", c.tt},
                  {"tf", c.tf},
                  {"ft", c.ft},
                  {"ff", c.ff}}
                 .dump()
          << "\n";
    out << json{{"record", "search_summary"}, {"cases", f.cases}, {"partial", f.partial}}.dump()
        << "\n";
  } else {
    out << "cases: " << f.cases << (f.partial ? " (partial: budget exhausted)" : "") << "\n";
    for (const FamilyTally& fam : f.families) {
      out << (fam.counterexamples == 0 ? "ok   " : "FAIL ") << fam.id << "  cases=" << fam.cases
          << " counterexamples=" << fam.counterexamples << "\n";
      if (fam.counterexamples > 0)
        out << "     first: " << fam.first_counterexample << "\n";
    }
    for (const ConditionTally& c : f.conditions)
      out << "condition " << c.condition << ": tt=" << c.tt << " tf=" << c.tf << " ft=" << c.ft
          << " ff=" << c.ff << "\n";
  }
  return f.partial ? exit_partial : exit_ok;
}

int default_max_size() {
  if (const char* env = std::getenv("LATQ_MAX_SIZE")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 6;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite distributive lattices, derivations, and their quotient congruences"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "jsonl"}))
      ->capture_default_str();
  long seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "seed recorded in reports");
  app.add_flag("--allow-nondistributive", opt.allow_nondistributive,
               "accept lattices that fail the distributivity check");

  std::string path, base_csv, ideal_csv, map_spec, claims_csv, reproducer_dir = ".";
  bool allow_trivial = false, fail_fast = false;
  int max_size = default_max_size();
  long budget = -1;

  auto* dot = app.add_subcommand("dot", "emit the Hasse diagram in DOT");
  dot->add_option("file", path)->required();

  auto* ideals_cmd = app.add_subcommand("ideals", "ideal structure");
  ideals_cmd->require_subcommand(1);
  auto* ideals_list = ideals_cmd->add_subcommand("list", "all ideals");
  ideals_list->add_option("file", path)->required();
  auto* ideals_primes = ideals_cmd->add_subcommand("primes", "prime ideals");
  ideals_primes->add_option("file", path)->required();
  auto* ideals_min = ideals_cmd->add_subcommand("minimal-primes", "minimal primes over a base ideal");
  ideals_min->add_option("file", path)->required();
  ideals_min->add_option("--base", base_csv, "base ideal as comma-separated labels")->required();

  auto* der_cmd = app.add_subcommand("derivations", "derivations on the lattice");
  der_cmd->require_subcommand(1);
  auto* der_list = der_cmd->add_subcommand("list", "all derivations");
  der_list->add_option("file", path)->required();
  auto* der_check = der_cmd->add_subcommand("check", "test a map against the derivation axioms");
  der_check->add_option("file", path)->required();
  der_check->add_option("--map", map_spec, "map table 'x:y,...'")->required();
  auto* der_kernel = der_cmd->add_subcommand("kernel", "kernel ideal, kernel elements, annihilators");
  der_kernel->add_option("file", path)->required();
  der_kernel->add_option("--ideal", ideal_csv, "ideal as comma-separated labels")->required();
  DerivationSelector kernel_sel;
  kernel_sel.attach(der_kernel);

  auto* theta_cmd = app.add_subcommand("theta", "the congruence induced by an ideal and a derivation");
  theta_cmd->add_option("file", path)->required();
  theta_cmd->add_option("--ideal", ideal_csv, "ideal as comma-separated labels")->required();
  theta_cmd->add_flag("--allow-trivial", allow_trivial, "accept the whole carrier as the ideal");
  DerivationSelector theta_sel;
  theta_sel.attach(theta_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one lattice, ideal, derivation");
  analyze_cmd->add_option("file", path)->required();
  analyze_cmd->add_option("--ideal", ideal_csv, "ideal as comma-separated labels")->required();
  DerivationSelector analyze_sel;
  analyze_sel.attach(analyze_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verify the law catalog over the generated corpus");
  verify_cmd->add_option("--max-size", max_size, "largest carrier size")->capture_default_str();
  verify_cmd->add_option("--claims", claims_csv, "comma-separated claim ids or prefixes");
  verify_cmd->add_flag("--fail-fast", fail_fast, "stop at the first gate violation");
  verify_cmd->add_option("--reproducers", reproducer_dir,
                         "directory for violation reproducer files ('' disables)")
      ->capture_default_str();

  auto* search_cmd = app.add_subcommand("search-openq", "sweep for open-question evidence");
  search_cmd->add_option("--max-size", max_size, "largest carrier size")->capture_default_str();
  search_cmd->add_option("--budget", budget, "case budget (negative = unlimited)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  if (*seed_opt) opt.seed = seed_value;

  try {
    if (*dot) return run_dot(path, opt, out);
    if (*ideals_list) return run_ideals("list", path, base_csv, opt, out);
    if (*ideals_primes) return run_ideals("primes", path, base_csv, opt, out);
    if (*ideals_min) return run_ideals("minimal-primes", path, base_csv, opt, out);
    if (*der_list) return run_derivations_list(path, opt, out);
    if (*der_check) return run_derivations_check(path, map_spec, opt, out);
    if (*der_kernel) return run_derivations_kernel(path, ideal_csv, kernel_sel, opt, out);
    if (*theta_cmd) return run_theta(path, ideal_csv, theta_sel, allow_trivial, opt, out);
    if (*analyze_cmd) return run_analyze(path, ideal_csv, analyze_sel, opt, out);
    if (*verify_cmd) return run_verify(max_size, claims_csv, fail_fast, reproducer_dir, opt, out);
    if (*search_cmd) return run_search(max_size, budget, opt, out);
  } catch (const invalid_lattice& e) {
    err << "error: " << e.what() << " [axiom: " << e.axiom() << "]\n";
    return exit_invalid;
  } catch (const theorem_violation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return exit_violation;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

}  // namespace latq::cli
