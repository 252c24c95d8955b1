#include "gira/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace gira {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw AlgebraError("PARSE", msg + " (line " + std::to_string(line) + ")");
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (!t.empty() && t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text) {
  FiniteAlgebra a;
  bool have_name = false, have_size = false, have_elems = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  // Pre-tokenize, dropping blank/comment lines but remembering line numbers.
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = tokens_of(raw);
    if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
  }

  auto elem = [&](const std::string& lbl, int ln) {
    int i = a.index_of(lbl);
    if (i < 0) fail(ln, "unknown element label '" + lbl + "'");
    return i;
  };

  size_t pos = 0;
  while (pos < lines.size()) {
    int ln = lines[pos].first;
    const auto& t = lines[pos].second;
    const std::string& key = t[0];
    if (key == "algebra") {
      if (t.size() != 2) fail(ln, "expected: algebra <name>");
      if (have_name) fail(ln, "duplicate 'algebra' line");
      a.name = t[1];
      have_name = true;
      ++pos;
    } else if (key == "size") {
      if (t.size() != 2) fail(ln, "expected: size <n>");
      if (have_size) fail(ln, "duplicate 'size' line");
      try {
        a.n = std::stoi(t[1]);
      } catch (...) {
        fail(ln, "size is not a number");
      }
      if (a.n <= 0) fail(ln, "size must be positive");
      have_size = true;
      ++pos;
    } else if (key == "elements") {
      if (!have_size) fail(ln, "'elements' before 'size'");
      if ((int)t.size() != a.n + 1) fail(ln, "expected " + std::to_string(a.n) + " element labels");
      a.elems.assign(t.begin() + 1, t.end());
      have_elems = true;
      ++pos;
    } else if (key == "const") {
      if (!have_elems) fail(ln, "'const' before 'elements'");
      if (t.size() != 4 || t[2] != "=") fail(ln, "expected: const <name> = <label>");
      int v = elem(t[3], ln);
      if (t[1] == "one") a.one = v;
      else if (t[1] == "zero") a.zero = v;
      else if (t[1] == "top") a.top = v;
      else if (t[1] == "bot") a.bot = v;
      else fail(ln, "unknown constant '" + t[1] + "'");
      ++pos;
    } else if (key == "table") {
      if (!have_elems) fail(ln, "'table' before 'elements'");
      if (t.size() != 2) fail(ln, "expected: table <name>");
      const std::string& which = t[1];
      bool binary = which == "meet" || which == "join" || which == "mult" || which == "imp";
      bool unary = which == "neg" || which == "bang";
      if (!binary && !unary) fail(ln, "unknown table '" + which + "'");
      int rows = binary ? a.n : 1;
      std::vector<int> tab;
      tab.reserve((size_t)rows * a.n);
      ++pos;
      for (int r = 0; r < rows; ++r) {
        if (pos >= lines.size()) fail(ln, "table '" + which + "' truncated");
        int rln = lines[pos].first;
        const auto& row = lines[pos].second;
        if ((int)row.size() != a.n)
          fail(rln, "table row needs " + std::to_string(a.n) + " labels");
        for (const auto& lbl : row) tab.push_back(elem(lbl, rln));
        ++pos;
      }
      if (which == "meet") a.meet = std::move(tab);
      else if (which == "join") a.join = std::move(tab);
      else if (which == "mult") a.mult = std::move(tab);
      else if (which == "imp") a.imp = std::move(tab);
      else if (which == "neg") a.neg = std::move(tab);
      else a.bang = std::move(tab);
    } else {
      fail(ln, "unknown key '" + key + "'");
    }
  }
  if (!have_name) throw AlgebraError("PARSE", "missing 'algebra' line");
  if (!have_size) throw AlgebraError("PARSE", "missing 'size' line");
  if (!have_elems) throw AlgebraError("PARSE", "missing 'elements' line");
  a.validate_shape();
  return a;
}

FiniteAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw AlgebraError("IO", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_algebra(ss.str());
}

std::string print_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name << "\n";
  out << "size " << a.n << "\n";
  out << "elements";
  for (const auto& e : a.elems) out << " " << e;
  out << "\n";
  auto cn = [&](const char* name, const std::optional<int>& c) {
    if (c) out << "const " << name << " = " << a.elems[*c] << "\n";
  };
  cn("one", a.one);
  cn("zero", a.zero);
  cn("top", a.top);
  cn("bot", a.bot);
  auto bin = [&](const char* name, const std::optional<std::vector<int>>& t) {
    if (!t) return;
    out << "table " << name << "\n";
    for (int i = 0; i < a.n; ++i) {
      for (int j = 0; j < a.n; ++j)
        out << (j ? " " : "") << a.elems[(*t)[i * a.n + j]];
      out << "\n";
    }
  };
  auto un = [&](const char* name, const std::optional<std::vector<int>>& t) {
    if (!t) return;
    out << "table " << name << "\n";
    for (int i = 0; i < a.n; ++i) out << (i ? " " : "") << a.elems[(*t)[i]];
    out << "\n";
  };
  bin("meet", a.meet);
  bin("join", a.join);
  bin("mult", a.mult);
  bin("imp", a.imp);
  un("neg", a.neg);
  un("bang", a.bang);
  return out.str();
}

}  // namespace gira
