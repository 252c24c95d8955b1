#ifndef GIRA_FORMULA_HPP
#define GIRA_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gira {

enum class Conn { Var, Const, Neg, Bang, Quest, Mult, Par, Imp, Meet, Join };
enum class ConstSym { One, Zero, Top, Bot };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula tree. Par and Quest are definitional macros
/// (p par q := ~p -> q, ?p := ~!~p); Par has no surface syntax and is
/// expanded before printing or evaluation.
struct Formula {
  Conn kind;
  ConstSym cst = ConstSym::One;  // Const only
  std::string var;               // Var only
  FormulaPtr a, b;
};

namespace mk {
FormulaPtr var(std::string name);
FormulaPtr constant(ConstSym c);
FormulaPtr one();
FormulaPtr zero();
FormulaPtr top();
FormulaPtr bot();
FormulaPtr neg(FormulaPtr f);
FormulaPtr bang(FormulaPtr f);
FormulaPtr quest(FormulaPtr f);
FormulaPtr mult(FormulaPtr f, FormulaPtr g);
FormulaPtr par(FormulaPtr f, FormulaPtr g);
FormulaPtr imp(FormulaPtr f, FormulaPtr g);
FormulaPtr meet(FormulaPtr f, FormulaPtr g);
FormulaPtr join(FormulaPtr f, FormulaPtr g);
}  // namespace mk

bool equal(const FormulaPtr& f, const FormulaPtr& g);

/// Variable names in f, sorted.
std::vector<std::string> variables(const FormulaPtr& f);

/// Connectives occurring in f (fragment profile).
std::set<Conn> connectives(const FormulaPtr& f);

/// Canonical printer with minimal parentheses; parse(print(f)) == f for
/// any Par-free formula. Throws on Par.
std::string print_formula(const FormulaPtr& f);

/// Rewrites p par q to ~p -> q and ?p to ~!~p, recursively.
FormulaPtr expand_defined(const FormulaPtr& f);

/// Substitute formulas for variables (used for axiom schema instances).
FormulaPtr substitute(const FormulaPtr& pattern,
                      const std::vector<std::pair<std::string, FormulaPtr>>& subst);

struct Equation {
  FormulaPtr lhs, rhs;
};

struct Quasiequation {
  std::vector<Equation> premises;
  Equation conclusion;
};

std::string print_equation(const Equation& e);
std::string print_quasiequation(const Quasiequation& q);

}  // namespace gira

#endif
