#include "gira/formula.hpp"

#include <stdexcept>

namespace gira {

namespace mk {

FormulaPtr var(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Conn::Var;
  f->var = std::move(name);
  return f;
}

FormulaPtr constant(ConstSym c) {
  auto f = std::make_shared<Formula>();
  f->kind = Conn::Const;
  f->cst = c;
  return f;
}

FormulaPtr one() { return constant(ConstSym::One); }
FormulaPtr zero() { return constant(ConstSym::Zero); }
FormulaPtr top() { return constant(ConstSym::Top); }
FormulaPtr bot() { return constant(ConstSym::Bot); }

namespace {
FormulaPtr unary(Conn k, FormulaPtr x) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->a = std::move(x);
  return f;
}
FormulaPtr binary(Conn k, FormulaPtr x, FormulaPtr y) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->a = std::move(x);
  f->b = std::move(y);
  return f;
}
}  // namespace

FormulaPtr neg(FormulaPtr f) { return unary(Conn::Neg, std::move(f)); }
FormulaPtr bang(FormulaPtr f) { return unary(Conn::Bang, std::move(f)); }
FormulaPtr quest(FormulaPtr f) { return unary(Conn::Quest, std::move(f)); }
FormulaPtr mult(FormulaPtr f, FormulaPtr g) { return binary(Conn::Mult, std::move(f), std::move(g)); }
FormulaPtr par(FormulaPtr f, FormulaPtr g) { return binary(Conn::Par, std::move(f), std::move(g)); }
FormulaPtr imp(FormulaPtr f, FormulaPtr g) { return binary(Conn::Imp, std::move(f), std::move(g)); }
FormulaPtr meet(FormulaPtr f, FormulaPtr g) { return binary(Conn::Meet, std::move(f), std::move(g)); }
FormulaPtr join(FormulaPtr f, FormulaPtr g) { return binary(Conn::Join, std::move(f), std::move(g)); }

}  // namespace mk

bool equal(const FormulaPtr& f, const FormulaPtr& g) {
  if (f == g) return true;
  if (!f || !g) return false;
  if (f->kind != g->kind) return false;
  switch (f->kind) {
    case Conn::Var: return f->var == g->var;
    case Conn::Const: return f->cst == g->cst;
    case Conn::Neg:
    case Conn::Bang:
    case Conn::Quest:
      return equal(f->a, g->a);
    default:
      return equal(f->a, g->a) && equal(f->b, g->b);
  }
}

namespace {
void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == Conn::Var) out.insert(f->var);
  collect_vars(f->a, out);
  collect_vars(f->b, out);
}
void collect_conns(const FormulaPtr& f, std::set<Conn>& out) {
  if (!f) return;
  out.insert(f->kind);
  collect_conns(f->a, out);
  collect_conns(f->b, out);
}
}  // namespace

std::vector<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

std::set<Conn> connectives(const FormulaPtr& f) {
  std::set<Conn> s;
  collect_conns(f, s);
  return s;
}

namespace {

// Precedence levels: -> (1, right assoc) < \/ (2) < /\ (3) < * (4) < unary.
int prec_of(Conn k) {
  switch (k) {
    case Conn::Imp: return 1;
    case Conn::Join: return 2;
    case Conn::Meet: return 3;
    case Conn::Mult: return 4;
    default: return 5;
  }
}

// min_prec: a child whose precedence is below it gets parenthesized.
void print_rec(const FormulaPtr& f, int min_prec, std::string& out) {
  switch (f->kind) {
    case Conn::Var:
      out += f->var;
      return;
    case Conn::Const:
      out += f->cst == ConstSym::One ? "1" : f->cst == ConstSym::Zero ? "0"
             : f->cst == ConstSym::Top ? "T" : "F";
      return;
    case Conn::Neg:
    case Conn::Bang:
    case Conn::Quest: {
      out += f->kind == Conn::Neg ? "~" : f->kind == Conn::Bang ? "!" : "?";
      // unary binds to atoms only; anything looser below needs parens
      if (prec_of(f->a->kind) >= 5) {
        print_rec(f->a, 5, out);
      } else {
        out += "(";
        print_rec(f->a, 0, out);
        out += ")";
      }
      return;
    }
    case Conn::Par:
      throw std::logic_error("par has no surface syntax; expand_defined first");
    default: {
      int p = prec_of(f->kind);
      bool need = p < min_prec;
      if (need) out += "(";
      const char* op = f->kind == Conn::Imp ? " -> " : f->kind == Conn::Join ? " \\/ "
                       : f->kind == Conn::Meet ? " /\\ " : "*";
      // -> is right-associative, the rest associate to the left
      if (f->kind == Conn::Imp) {
        print_rec(f->a, p + 1, out);
        out += op;
        print_rec(f->b, p, out);
      } else {
        print_rec(f->a, p, out);
        out += op;
        print_rec(f->b, p + 1, out);
      }
      if (need) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

FormulaPtr expand_defined(const FormulaPtr& f) {
  if (!f) return f;
  switch (f->kind) {
    case Conn::Var:
    case Conn::Const:
      return f;
    case Conn::Par: {
      auto x = expand_defined(f->a);
      auto y = expand_defined(f->b);
      return mk::imp(mk::neg(x), y);
    }
    case Conn::Quest:
      return mk::neg(mk::bang(mk::neg(expand_defined(f->a))));
    case Conn::Neg:
      return mk::neg(expand_defined(f->a));
    case Conn::Bang:
      return mk::bang(expand_defined(f->a));
    case Conn::Mult:
      return mk::mult(expand_defined(f->a), expand_defined(f->b));
    case Conn::Imp:
      return mk::imp(expand_defined(f->a), expand_defined(f->b));
    case Conn::Meet:
      return mk::meet(expand_defined(f->a), expand_defined(f->b));
    case Conn::Join:
      return mk::join(expand_defined(f->a), expand_defined(f->b));
  }
  return f;
}

FormulaPtr substitute(const FormulaPtr& pattern,
                      const std::vector<std::pair<std::string, FormulaPtr>>& subst) {
  if (!pattern) return pattern;
  switch (pattern->kind) {
    case Conn::Var:
      for (const auto& [name, repl] : subst)
        if (name == pattern->var) return repl;
      return pattern;
    case Conn::Const:
      return pattern;
    case Conn::Neg:
      return mk::neg(substitute(pattern->a, subst));
    case Conn::Bang:
      return mk::bang(substitute(pattern->a, subst));
    case Conn::Quest:
      return mk::quest(substitute(pattern->a, subst));
    case Conn::Mult:
      return mk::mult(substitute(pattern->a, subst), substitute(pattern->b, subst));
    case Conn::Par:
      return mk::par(substitute(pattern->a, subst), substitute(pattern->b, subst));
    case Conn::Imp:
      return mk::imp(substitute(pattern->a, subst), substitute(pattern->b, subst));
    case Conn::Meet:
      return mk::meet(substitute(pattern->a, subst), substitute(pattern->b, subst));
    case Conn::Join:
      return mk::join(substitute(pattern->a, subst), substitute(pattern->b, subst));
  }
  return pattern;
}

std::string print_equation(const Equation& e) {
  return print_formula(e.lhs) + " = " + print_formula(e.rhs);
}

std::string print_quasiequation(const Quasiequation& q) {
  std::string s;
  for (size_t i = 0; i < q.premises.size(); ++i) {
    if (i) s += " & ";
    s += print_equation(q.premises[i]);
  }
  s += " => ";
  s += print_equation(q.conclusion);
  return s;
}

}  // namespace gira
