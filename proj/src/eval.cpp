#include "gira/eval.hpp"

#include "gira/parallel.hpp"

namespace gira {

namespace {

[[noreturn]] void missing(const char* what) {
  throw AlgebraError("MISSING-TABLE", std::string(what) + " table required by formula");
}

int const_index(const FiniteAlgebra& a, ConstSym c) {
  const std::optional<int>* p = nullptr;
  const char* name = "";
  switch (c) {
    case ConstSym::One: p = &a.one; name = "one"; break;
    case ConstSym::Zero: p = &a.zero; name = "zero"; break;
    case ConstSym::Top: p = &a.top; name = "top"; break;
    case ConstSym::Bot: p = &a.bot; name = "bot"; break;
  }
  if (!*p)
    throw AlgebraError("MISSING-CONSTANT", std::string(name) + " required by formula");
  return **p;
}

}  // namespace

int eval(const FormulaPtr& f, const FiniteAlgebra& a, const Assignment& v) {
  switch (f->kind) {
    case Conn::Var: {
      auto it = v.find(f->var);
      if (it == v.end())
        throw AlgebraError("UNBOUND-VARIABLE", "no value for '" + f->var + "'");
      return it->second;
    }
    case Conn::Const:
      return const_index(a, f->cst);
    case Conn::Neg:
      if (!a.neg) missing("neg");
      return a.ng(eval(f->a, a, v));
    case Conn::Bang:
      if (!a.bang) missing("bang");
      return a.bg(eval(f->a, a, v));
    case Conn::Quest: {
      // ?p = ~!~p
      if (!a.neg) missing("neg");
      if (!a.bang) missing("bang");
      return a.ng(a.bg(a.ng(eval(f->a, a, v))));
    }
    case Conn::Mult:
      if (!a.mult) missing("mult");
      return a.ml(eval(f->a, a, v), eval(f->b, a, v));
    case Conn::Par: {
      // p par q = ~p -> q
      if (!a.neg) missing("neg");
      if (!a.imp) missing("imp");
      return a.im(a.ng(eval(f->a, a, v)), eval(f->b, a, v));
    }
    case Conn::Imp:
      if (!a.imp) missing("imp");
      return a.im(eval(f->a, a, v), eval(f->b, a, v));
    case Conn::Meet:
      if (!a.meet) missing("meet");
      return a.mt(eval(f->a, a, v), eval(f->b, a, v));
    case Conn::Join:
      if (!a.join) missing("join");
      return a.jn(eval(f->a, a, v), eval(f->b, a, v));
  }
  throw AlgebraError("BAD-FORMULA", "unknown connective");
}

bool designated(const FiniteAlgebra& a, const FormulaPtr& f, const Assignment& v) {
  if (!a.meet) missing("meet");
  int one = const_index(a, ConstSym::One);
  return a.mt(eval(f, a, v), one) == one;
}

namespace {

// Assignments in lexicographic order: variables sorted by name, the last
// variable cycling fastest.
struct AssignmentSpace {
  std::vector<std::string> vars;
  int n;
  long long total;

  AssignmentSpace(std::vector<std::string> vs, int size) : vars(std::move(vs)), n(size) {
    total = 1;
    for (size_t i = 0; i < vars.size(); ++i) total *= n;
  }

  Assignment decode(long long idx) const {
    Assignment v;
    for (size_t i = vars.size(); i-- > 0;) {
      v[vars[i]] = (int)(idx % n);
      idx /= n;
    }
    return v;
  }
};

}  // namespace

std::optional<Assignment> falsifying_assignment(const FiniteAlgebra& a,
                                                const FormulaPtr& f) {
  AssignmentSpace sp(variables(f), a.n);
  long long bad = par::first_fail(sp.total, [&](long long i) {
    return designated(a, f, sp.decode(i));
  });
  if (bad < 0) return std::nullopt;
  return sp.decode(bad);
}

bool validates(const FiniteAlgebra& a, const FormulaPtr& f) {
  return !falsifying_assignment(a, f).has_value();
}

std::optional<Assignment> equation_counterexample(const FiniteAlgebra& a,
                                                  const Equation& e) {
  std::set<std::string> s;
  for (const auto& x : variables(e.lhs)) s.insert(x);
  for (const auto& x : variables(e.rhs)) s.insert(x);
  AssignmentSpace sp({s.begin(), s.end()}, a.n);
  long long bad = par::first_fail(sp.total, [&](long long i) {
    Assignment v = sp.decode(i);
    return eval(e.lhs, a, v) == eval(e.rhs, a, v);
  });
  if (bad < 0) return std::nullopt;
  return sp.decode(bad);
}

bool satisfies(const FiniteAlgebra& a, const Equation& e) {
  return !equation_counterexample(a, e).has_value();
}

std::optional<Assignment> quasiequation_counterexample(const FiniteAlgebra& a,
                                                       const Quasiequation& q) {
  std::set<std::string> s;
  for (const auto& eq : q.premises) {
    for (const auto& x : variables(eq.lhs)) s.insert(x);
    for (const auto& x : variables(eq.rhs)) s.insert(x);
  }
  for (const auto& x : variables(q.conclusion.lhs)) s.insert(x);
  for (const auto& x : variables(q.conclusion.rhs)) s.insert(x);
  AssignmentSpace sp({s.begin(), s.end()}, a.n);
  long long bad = par::first_fail(sp.total, [&](long long i) {
    Assignment v = sp.decode(i);
    for (const auto& eq : q.premises)
      if (eval(eq.lhs, a, v) != eval(eq.rhs, a, v)) return true;
    return eval(q.conclusion.lhs, a, v) == eval(q.conclusion.rhs, a, v);
  });
  if (bad < 0) return std::nullopt;
  return sp.decode(bad);
}

bool satisfies(const FiniteAlgebra& a, const Quasiequation& q) {
  return !quasiequation_counterexample(a, q).has_value();
}

bool semantic_consequence(const std::vector<FormulaPtr>& gamma,
                          const FormulaPtr& f, const FiniteAlgebra& a) {
  std::set<std::string> s;
  for (const auto& g : gamma)
    for (const auto& x : variables(g)) s.insert(x);
  for (const auto& x : variables(f)) s.insert(x);
  AssignmentSpace sp({s.begin(), s.end()}, a.n);
  long long bad = par::first_fail(sp.total, [&](long long i) {
    Assignment v = sp.decode(i);
    for (const auto& g : gamma)
      if (!designated(a, g, v)) return true;
    return designated(a, f, v);
  });
  return bad < 0;
}

Equation tau(const FormulaPtr& f) {
  return {mk::meet(f, mk::one()), mk::one()};
}

std::pair<FormulaPtr, FormulaPtr> rho(const Equation& e) {
  return {mk::imp(e.lhs, e.rhs), mk::imp(e.rhs, e.lhs)};
}

}  // namespace gira
