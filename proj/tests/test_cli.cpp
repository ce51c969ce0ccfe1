#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "latq/io.hpp"
#include "test_helpers.hpp"

using namespace latq;
using namespace latq::testing;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LATQ_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("lattice files load, reject junk, and round-trip") {
  Lattice d = load_lattice_file(fixture("diamond.lat"));
  CHECK(isomorphic(d, diamond()));
  CHECK(d.label(0) == "bot");

  std::ostringstream saved;
  save_lattice(saved, d, {"note"});
  std::istringstream in(saved.str());
  Lattice again = load_lattice(in);
  CHECK(again.labels() == d.labels());
  CHECK(isomorphic(again, d));

  std::istringstream bad("covers:\n");
  CHECK_THROWS_AS(load_lattice(bad), io_error);
  std::istringstream dup("elements: a a\ncovers:\n");
  CHECK_THROWS_AS(load_lattice(dup), io_error);
  std::istringstream unknown("elements: a b\ncovers:\na c\n");
  CHECK_THROWS_AS(load_lattice(unknown), io_error);

  // non-lattice: two maximal elements
  std::istringstream nolat("elements: a b c\ncovers:\na b\na c\n");
  CHECK_THROWS_AS(load_lattice(nolat), invalid_lattice);

  // non-distributive rejected unless allowed
  CHECK_THROWS_AS(load_lattice_file(fixture("m3.lat")), invalid_lattice);
  LoadOptions allow;
  allow.allow_nondistributive = true;
  Lattice m = load_lattice_file(fixture("m3.lat"), allow);
  CHECK(!m.distributive());
}

TEST_CASE("dot emission") {
  std::string dot = to_dot(diamond());
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"bot\" -> \"a\"") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"top\"") != std::string::npos);

  auto r = run_cli({"dot", fixture("diamond.lat")});
  CHECK(r.code == 0);
  CHECK(r.out == dot);
}

TEST_CASE("theta subcommand reproduces the worked diamond case") {
  auto r = run_cli({"theta", fixture("diamond.lat"), "--ideal", "bot", "--map",
                    "bot:bot,b:bot,a:a,top:a"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kernel ideal: {bot, b}") != std::string::npos);
  CHECK(r.out.find("kernel elements: {a, top}") != std::string::npos);
  CHECK(r.out.find("[0] {bot, b}  <- bottom") != std::string::npos);
  CHECK(r.out.find("[1] {a, top}  <- top") != std::string::npos);
  CHECK(r.out.find("boolean") != std::string::npos);
}

TEST_CASE("derivation selectors are exclusive and required") {
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "bot", "--id"}).code == 0);
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "bot", "--lambda", "a"}).code == 0);
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "bot"}).code == 64);
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "bot", "--id", "--lambda", "a"}).code ==
        64);
}

TEST_CASE("error exit codes") {
  CHECK(run_cli({"theta", "missing.lat", "--ideal", "bot", "--id"}).code == 64);
  CHECK(run_cli({"theta", fixture("m3.lat"), "--ideal", "bot", "--id"}).code == 65);
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "nope", "--id"}).code == 64);
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "a", "--id"}).code == 64);  // not an ideal
  CHECK(run_cli({"theta", fixture("diamond.lat"), "--ideal", "bot,a,b,top", "--id"}).code == 64);
  CHECK(run_cli({"nonsense"}).code == 64);

  auto r = run_cli({"theta", fixture("m3.lat"), "--ideal", "bot", "--id"});
  CHECK(r.err.find("distributiv") != std::string::npos);
}

TEST_CASE("ideals subcommands") {
  auto r = run_cli({"ideals", "list", fixture("chain4.lat")});
  CHECK(r.code == 0);
  CHECK(r.out.find("{a}") != std::string::npos);
  CHECK(r.out.find("{a, b, c, d}") != std::string::npos);

  auto p = run_cli({"ideals", "primes", fixture("diamond.lat")});
  CHECK(p.code == 0);
  CHECK(p.out.find("{bot, a}") != std::string::npos);
  CHECK(p.out.find("{bot, b}") != std::string::npos);
  CHECK(p.out.find("{bot}") == std::string::npos);

  auto m = run_cli({"ideals", "minimal-primes", fixture("diamond.lat"), "--base", "bot"});
  CHECK(m.code == 0);
  CHECK(m.out.find("{bot, a}") != std::string::npos);
  CHECK(m.out.find("{bot, b}") != std::string::npos);
}

TEST_CASE("derivations subcommands") {
  auto r = run_cli({"derivations", "list", fixture("diamond.lat")});
  CHECK(r.code == 0);
  CHECK(r.out.find("bot:bot,a:a,b:bot,top:a") != std::string::npos);

  auto ok = run_cli({"derivations", "check", fixture("diamond.lat"), "--map",
                     "bot:bot,b:bot,a:a,top:a"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("derivation: yes") != std::string::npos);

  auto bad = run_cli({"derivations", "check", fixture("diamond.lat"), "--map",
                      "bot:bot,a:b,b:a,top:top"});
  CHECK(bad.code == 0);
  CHECK(bad.out.find("derivation: no") != std::string::npos);
  CHECK(bad.out.find("first violated axiom") != std::string::npos);

  auto k = run_cli({"derivations", "kernel", fixture("diamond.lat"), "--ideal", "bot", "--lambda",
                    "a"});
  CHECK(k.code == 0);
  CHECK(k.out.find("kernel ideal: {bot, b}") != std::string::npos);
  CHECK(k.out.find("kernel elements: {a, top}") != std::string::npos);
}

TEST_CASE("analyze produces both formats and the jsonl stream re-parses") {
  auto text = run_cli({"analyze", fixture("diamond.lat"), "--ideal", "bot", "--lambda", "a"});
  CHECK(text.code == 0);
  CHECK(text.out.find("kernel ideal: {bot, b}  (prime)") != std::string::npos);
  CHECK(text.out.find("ideal: {bot}  (not prime)") != std::string::npos);
  CHECK(text.out.find("boolean: yes") != std::string::npos);

  auto machine = run_cli({"--format", "jsonl", "analyze", fixture("diamond.lat"), "--ideal", "bot",
                          "--lambda", "a"});
  CHECK(machine.code == 0);
  std::istringstream lines(machine.out);
  std::string line;
  int kernel_records = 0;
  while (std::getline(lines, line)) {
    json j = json::parse(line);  // throws on malformed output
    REQUIRE(j.contains("record"));
    if (j["record"] == "kernel_ideal") {
      ++kernel_records;
      CHECK(j["members"] == json::array({"bot", "b"}));
      CHECK(j["prime"] == true);
    }
    if (j["record"] == "two_element") {
      CHECK(j["quotient_is_two"] == true);
      CHECK(j["kernel_prime"] == true);
    }
  }
  CHECK(kernel_records == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::string> cmd = {"analyze", fixture("example2ii.lat"), "--ideal", "a", "--id"};
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> v = {"--format", "jsonl", "verify", "--max-size", "4", "--claims",
                                "quotient-bounds", "--reproducers", ""};
  auto x = run_cli(v);
  auto y = run_cli(v);
  CHECK(x.out == y.out);
}

TEST_CASE("the seed is recorded when given") {
  auto r = run_cli({"--seed", "42", "ideals", "list", fixture("chain4.lat")});
  CHECK(r.out.find("seed: 42") != std::string::npos);
  auto j = run_cli({"--format", "jsonl", "--seed", "42", "ideals", "list", fixture("chain4.lat")});
  CHECK(j.out.find("\"seed\":42") != std::string::npos);
}

TEST_CASE("verify exit codes and reproducers") {
  // healthy claims pass on a small corpus
  auto ok = run_cli({"verify", "--max-size", "4", "--claims", "quotient-bounds,greatest-congruence",
                     "--reproducers", ""});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("gate violations: 0") != std::string::npos);

  // the recorded defective uniqueness law fails and writes a reproducer
  std::string dir = "cli-test-reproducers";
  std::filesystem::remove_all(dir);
  auto bad = run_cli({"verify", "--max-size", "3", "--claims",
                      "unique-congruence-with-kernel-class.as-stated", "--reproducers", dir});
  CHECK(bad.code == 1);
  std::string repro = dir + "/violation-unique-congruence-with-kernel-class-as-stated.lat";
  REQUIRE(std::filesystem::exists(repro));
  // the reproducer is itself a loadable lattice document
  Lattice l = load_lattice_file(repro);
  CHECK(l.size() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("jsonl ideals name the principal generator") {
  auto r = run_cli({"--format", "jsonl", "ideals", "list", fixture("diamond.lat")});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::set<std::string> generators;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    if (j["record"] == "ideal") generators.insert(j["principal_generator"].get<std::string>());
  }
  CHECK(generators == std::set<std::string>{"bot", "a", "b", "top"});
}

TEST_CASE("the corpus-bound environment variable sets the verify default") {
  setenv("LATQ_MAX_SIZE", "3", 1);
  auto r = run_cli({"verify", "--claims", "quotient-bounds", "--reproducers", ""});
  unsetenv("LATQ_MAX_SIZE");
  CHECK(r.code == 0);
  CHECK(r.out.find("lattices: 3 ") != std::string::npos);
}

TEST_CASE("search-openq respects the budget and reports partial results") {
  auto full = run_cli({"search-openq", "--max-size", "3"});
  CHECK(full.code == 0);
  CHECK(full.out.find("family-i ") != std::string::npos);

  auto partial = run_cli({"search-openq", "--max-size", "4", "--budget", "2"});
  CHECK(partial.code == 2);
  CHECK(partial.out.find("partial") != std::string::npos);
}

TEST_CASE("jsonl search output parses") {
  auto r = run_cli({"--format", "jsonl", "search-openq", "--max-size", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  bool saw_tally = false;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    if (j["record"] == "conclusion_tally" && j["id"] == "family-i") {
      saw_tally = true;
      CHECK(j["counterexamples"] == 0);
    }
  }
  CHECK(saw_tally);
}
