#include "latq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace latq {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Lattice load_lattice(std::istream& in, const LoadOptions& opt) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  std::map<std::string, int> index;
  enum { expect_elements, expect_covers, in_covers } state = expect_elements;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(strip_comment(line));
    if (tokens.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };

    if (state == expect_elements) {
      if (tokens[0] != "elements:")
        throw io_error("expected 'elements:' first" + where());
      for (size_t t = 1; t < tokens.size(); ++t) {
        if (!index.try_emplace(tokens[t], int(labels.size())).second)
          throw io_error("duplicate element label '" + tokens[t] + "'" + where());
        labels.push_back(tokens[t]);
      }
      if (labels.empty()) throw io_error("element list is empty" + where());
      state = expect_covers;
      continue;
    }
    if (state == expect_covers) {
      if (tokens[0] != "covers:")
        throw io_error("expected 'covers:' after the element list" + where());
      if (tokens.size() > 1) throw io_error("cover pairs go on their own lines" + where());
      state = in_covers;
      continue;
    }
    if (tokens.size() != 2)
      throw io_error("cover lines hold exactly two labels" + where());
    auto lo = index.find(tokens[0]), hi = index.find(tokens[1]);
    if (lo == index.end()) throw io_error("unknown element '" + tokens[0] + "'" + where());
    if (hi == index.end()) throw io_error("unknown element '" + tokens[1] + "'" + where());
    covers.emplace_back(lo->second, hi->second);
  }
  if (state == expect_elements) throw io_error("empty lattice document");
  if (state == expect_covers) throw io_error("missing 'covers:' section");

  Lattice l = Lattice::from_covers(labels, covers);  // throws invalid_lattice

  if (!opt.allow_nondistributive && !l.distributive()) {
    ValidationReport r = validate(l);
    const AxiomViolation* v = r.first();
    throw invalid_lattice(
        "lattice is not distributive: " + (v ? v->detail : std::string("")) +
            " (pass --allow-nondistributive to accept it)",
        "distributivity");
  }
  return l;
}

Lattice load_lattice_file(const std::string& path, const LoadOptions& opt) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  return load_lattice(in, opt);
}

void save_lattice(std::ostream& out, const Lattice& l, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "elements:";
  for (int x = 0; x < l.size(); ++x) out << ' ' << l.label(x);
  out << "\ncovers:\n";
  for (auto [lo, hi] : sublattice_facts(l).covers)
    out << l.label(lo) << ' ' << l.label(hi) << "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const Lattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int x = 0; x < l.size(); ++x)
    os << "  \"" << dot_escape(l.label(x)) << "\";\n";
  for (auto [lo, hi] : sublattice_facts(l).covers)
    os << "  \"" << dot_escape(l.label(lo)) << "\" -> \"" << dot_escape(l.label(hi)) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Lattice& l, const Congruence& c, std::optional<int> bottom_class,
                   std::optional<int> top_class) {
  static const char* palette[] = {"lightgrey",  "lightyellow", "lightgreen",
                                  "lightcyan",  "lavender",    "mistyrose",
                                  "honeydew",   "aliceblue"};
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse, style=filled];\n";
  for (int x = 0; x < l.size(); ++x) {
    int cls = c.class_of(x);
    std::string color;
    if (bottom_class && cls == *bottom_class) color = "lightblue";       // kernel ideal class
    else if (top_class && cls == *top_class) color = "lightsalmon";      // kernel elements class
    else color = palette[cls % 8];
    os << "  \"" << dot_escape(l.label(x)) << "\" [fillcolor=" << color << ", tooltip=\"class "
       << cls << "\"];\n";
  }
  for (auto [lo, hi] : sublattice_facts(l).covers)
    os << "  \"" << dot_escape(l.label(lo)) << "\" -> \"" << dot_escape(l.label(hi)) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latq
