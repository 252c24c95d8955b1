#include "gira/hilbert.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gira/parser.hpp"

namespace gira {

namespace {

std::vector<AxiomSchema> build_schemata() {
  auto S = [](const char* id, const char* text) {
    return AxiomSchema{id, parse_formula(text)};
  };
  return {
      S("HL1", "p -> p"),
      S("HL2", "(p -> q) -> ((q -> r) -> (p -> r))"),
      S("HL3", "(p -> (q -> r)) -> (q -> (p -> r))"),
      S("HL4", "~~p -> p"),
      S("HL5", "(p -> ~q) -> (q -> ~p)"),
      S("HL6", "p -> (q -> p*q)"),
      S("HL7", "(p -> (q -> r)) -> (p*q -> r)"),
      S("HL8", "1"),
      S("HL9", "1 -> (p -> p)"),
      S("HL10", "p -> (~p -> 0)"),
      S("HL11", "~0"),
      S("HL12", "p /\\ q -> p"),
      S("HL13", "p /\\ q -> q"),
      S("HL14", "(p -> q) /\\ (p -> r) -> (p -> q /\\ r)"),
      S("HL15", "p -> p \\/ q"),
      S("HL16", "q -> p \\/ q"),
      S("HL17", "(p -> r) /\\ (q -> r) -> (p \\/ q -> r)"),
      S("HL18", "p -> T"),
      S("HL19", "F -> p"),
      S("HL20", "q -> (!p -> q)"),
      S("HL21", "(!p -> (!p -> q)) -> (!p -> q)"),
      S("HL22", "!(p -> q) -> (!p -> !q)"),
      S("HL23", "!p -> p"),
      S("HL24", "!p -> !!p"),
      S("MINGLE", "p -> (p -> p)"),
  };
}

std::vector<std::string> hl_range(int lo, int hi) {
  std::vector<std::string> out;
  for (int i = lo; i <= hi; ++i) out.push_back("HL" + std::to_string(i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

const std::vector<AxiomSchema>& schemata() {
  static const std::vector<AxiomSchema> s = build_schemata();
  return s;
}

const AxiomSchema* schema_by_id(const std::string& id) {
  for (const auto& s : schemata())
    if (s.id == id) return &s;
  return nullptr;
}

std::optional<std::vector<std::pair<std::string, FormulaPtr>>> match_schema(
    const FormulaPtr& f, const AxiomSchema& s) {
  std::map<std::string, FormulaPtr> bind;
  std::function<bool(const FormulaPtr&, const FormulaPtr&)> go =
      [&](const FormulaPtr& pat, const FormulaPtr& t) -> bool {
    switch (pat->kind) {
      case Conn::Var: {
        auto it = bind.find(pat->var);
        if (it == bind.end()) {
          bind.emplace(pat->var, t);
          return true;
        }
        return equal(it->second, t);
      }
      case Conn::Const:
        return t->kind == Conn::Const && t->cst == pat->cst;
      case Conn::Neg:
      case Conn::Bang:
      case Conn::Quest:
        return t->kind == pat->kind && go(pat->a, t->a);
      default:
        return t->kind == pat->kind && go(pat->a, t->a) && go(pat->b, t->b);
    }
  };
  if (!go(s.pattern, f)) return std::nullopt;
  std::vector<std::pair<std::string, FormulaPtr>> out(bind.begin(), bind.end());
  return out;
}

bool System::has_axiom(const std::string& id) const {
  for (const auto& x : axiom_ids)
    if (x == id) return true;
  return false;
}

const System& system_mall() {
  static const System s{"MALL", hl_range(1, 19), true, true, false};
  return s;
}

const System& system_ll() {
  static const System s{"LL", hl_range(1, 24), true, true, true};
  return s;
}

const System& system_lr() {
  static const System s{"LR", concat(hl_range(1, 7), hl_range(12, 19)), true, true, false};
  return s;
}

const System& system_ill() {
  static const System s{
      "ILL", concat(concat(hl_range(1, 3), hl_range(6, 9)), hl_range(12, 24)),
      true, true, true};
  return s;
}

const System* system_by_id(const std::string& id) {
  if (id == "MALL") return &system_mall();
  if (id == "LL") return &system_ll();
  if (id == "LR") return &system_lr();
  if (id == "ILL") return &system_ill();
  return nullptr;
}

namespace {

CheckReport fail_step(int step_1based, const std::string& reason) {
  CheckReport r;
  r.pass = false;
  r.violations.push_back({"STEP-" + std::to_string(step_1based) + ": " + reason, {}, {}});
  return r;
}

}  // namespace

CheckReport check_derivation(const Derivation& d, const System& sys) {
  std::vector<char> categorical(d.steps.size(), 0);
  for (size_t k = 0; k < d.steps.size(); ++k) {
    const Step& st = d.steps[k];
    int kn = (int)k + 1;
    auto in_range = [&](int i) { return i >= 1 && i <= (int)k; };
    if (auto* ax = std::get_if<JAxiom>(&st.just)) {
      const AxiomSchema* sch = schema_by_id(ax->id);
      if (!sch) return fail_step(kn, "unknown axiom id " + ax->id);
      if (!sys.has_axiom(ax->id))
        return fail_step(kn, ax->id + " is not an axiom of " + sys.id);
      if (!match_schema(st.f, *sch))
        return fail_step(kn, "formula is not an instance of " + ax->id);
      categorical[k] = 1;
    } else if (auto* hy = std::get_if<JHyp>(&st.just)) {
      if (hy->index < 1 || hy->index > (int)d.hyps.size())
        return fail_step(kn, "hypothesis index out of range");
      if (!equal(st.f, d.hyps[hy->index - 1]))
        return fail_step(kn, "formula differs from hypothesis " + std::to_string(hy->index));
      categorical[k] = 0;
    } else if (auto* mp = std::get_if<JMp>(&st.just)) {
      if (!sys.has_mp) return fail_step(kn, "mp is not a rule of " + sys.id);
      if (!in_range(mp->i) || !in_range(mp->j))
        return fail_step(kn, "mp references must point at earlier steps");
      const FormulaPtr& phi = d.steps[mp->i - 1].f;
      const FormulaPtr& imp = d.steps[mp->j - 1].f;
      if (imp->kind != Conn::Imp || !equal(imp->a, phi) || !equal(imp->b, st.f))
        return fail_step(kn, "mp shapes do not match");
      categorical[k] = categorical[mp->i - 1] && categorical[mp->j - 1];
    } else if (auto* adj = std::get_if<JAdj>(&st.just)) {
      if (!sys.has_adj) return fail_step(kn, "adj is not a rule of " + sys.id);
      if (!in_range(adj->i) || !in_range(adj->j))
        return fail_step(kn, "adj references must point at earlier steps");
      if (st.f->kind != Conn::Meet || !equal(st.f->a, d.steps[adj->i - 1].f) ||
          !equal(st.f->b, d.steps[adj->j - 1].f))
        return fail_step(kn, "adj shapes do not match");
      categorical[k] = categorical[adj->i - 1] && categorical[adj->j - 1];
    } else if (auto* nec = std::get_if<JNec>(&st.just)) {
      if (!sys.has_nec) return fail_step(kn, "nec is not a rule of " + sys.id);
      if (!in_range(nec->i))
        return fail_step(kn, "nec reference must point at an earlier step");
      if (st.f->kind != Conn::Bang || !equal(st.f->a, d.steps[nec->i - 1].f))
        return fail_step(kn, "nec shape does not match");
      // nec promotes theorems only: the premise must not depend on hypotheses
      if (!categorical[nec->i - 1])
        return fail_step(kn, "nec applied to a step that depends on hypotheses");
      categorical[k] = 1;
    }
  }
  if (d.steps.empty()) return fail_step(0, "derivation has no steps");
  return {};
}

CheckReport soundness_scan(const Derivation& d, const System& sys,
                           const std::vector<FiniteAlgebra>& corpus) {
  CheckReport r;
  if (d.steps.empty()) return fail_step(0, "derivation has no steps");
  (void)sys;
  const FormulaPtr& conclusion = d.steps.back().f;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!semantic_consequence(d.hyps, conclusion, corpus[i])) {
      r.violations.push_back(
          {"SEMANTIC-VIOLATION in corpus algebra " + std::to_string(i) + " (" +
               corpus[i].name + ")",
           {(int)i},
           {}});
    }
  }
  r.pass = r.violations.empty();
  return r;
}

namespace {

[[noreturn]] void dfail(int line, const std::string& msg) {
  throw AlgebraError("PARSE", msg + " (line " + std::to_string(line) + ")");
}

}  // namespace

Derivation parse_derivation(const std::string& text) {
  Derivation d;
  bool have_name = false, have_system = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "derivation") {
      if (!(ls >> d.name)) dfail(lineno, "expected: derivation <name>");
      have_name = true;
    } else if (key == "system") {
      if (!(ls >> d.system_id)) dfail(lineno, "expected: system <id>");
      if (!system_by_id(d.system_id)) dfail(lineno, "unknown system " + d.system_id);
      have_system = true;
    } else if (key == "hyp") {
      std::string rest;
      std::getline(ls, rest);
      d.hyps.push_back(parse_formula(rest));
    } else if (key == "step") {
      std::string numtok;
      if (!(ls >> numtok) || numtok.back() != ':')
        dfail(lineno, "expected: step <k>: <formula> by <just>");
      int k = 0;
      try { k = std::stoi(numtok.substr(0, numtok.size() - 1)); } catch (...) {
        dfail(lineno, "bad step number");
      }
      if (k != (int)d.steps.size() + 1)
        dfail(lineno, "steps must be numbered consecutively from 1");
      std::string rest;
      std::getline(ls, rest);
      size_t by = rest.rfind(" by ");
      if (by == std::string::npos) dfail(lineno, "missing 'by <justification>'");
      FormulaPtr f = parse_formula(rest.substr(0, by));
      std::istringstream js(rest.substr(by + 4));
      std::string jkind;
      js >> jkind;
      Justification just;
      if (jkind == "axiom") {
        std::string id;
        if (!(js >> id)) dfail(lineno, "expected axiom id");
        just = JAxiom{id};
      } else if (jkind == "hyp") {
        int i;
        if (!(js >> i)) dfail(lineno, "expected hypothesis index");
        just = JHyp{i};
      } else if (jkind == "mp") {
        int i, j;
        if (!(js >> i >> j)) dfail(lineno, "expected two step indices");
        just = JMp{i, j};
      } else if (jkind == "adj") {
        int i, j;
        if (!(js >> i >> j)) dfail(lineno, "expected two step indices");
        just = JAdj{i, j};
      } else if (jkind == "nec") {
        int i;
        if (!(js >> i)) dfail(lineno, "expected a step index");
        just = JNec{i};
      } else {
        dfail(lineno, "unknown justification '" + jkind + "'");
      }
      d.steps.push_back({f, just});
    } else {
      dfail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_name) throw AlgebraError("PARSE", "missing 'derivation' line");
  if (!have_system) throw AlgebraError("PARSE", "missing 'system' line");
  return d;
}

Derivation parse_derivation_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw AlgebraError("IO", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_derivation(ss.str());
}

}  // namespace gira
