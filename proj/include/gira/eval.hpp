#ifndef GIRA_EVAL_HPP
#define GIRA_EVAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gira/algebra.hpp"
#include "gira/formula.hpp"

namespace gira {

/// Total map from the formula's variables to element indices.
using Assignment = std::map<std::string, int>;

/// Structural evaluation; Quest/Par are expanded on the fly. Throws
/// MISSING-TABLE / MISSING-CONSTANT / UNBOUND-VARIABLE.
int eval(const FormulaPtr& f, const FiniteAlgebra& a, const Assignment& v);

/// eval(f) /\ 1 = 1, i.e. eval(f) >= 1.
bool designated(const FiniteAlgebra& a, const FormulaPtr& f, const Assignment& v);

/// designated under every assignment. When not, the witness overload
/// yields the lexicographically first falsifying assignment (variables
/// sorted by name, elements by index).
bool validates(const FiniteAlgebra& a, const FormulaPtr& f);
std::optional<Assignment> falsifying_assignment(const FiniteAlgebra& a,
                                                const FormulaPtr& f);

bool satisfies(const FiniteAlgebra& a, const Equation& e);
bool satisfies(const FiniteAlgebra& a, const Quasiequation& q);
std::optional<Assignment> equation_counterexample(const FiniteAlgebra& a,
                                                  const Equation& e);
std::optional<Assignment> quasiequation_counterexample(const FiniteAlgebra& a,
                                                       const Quasiequation& q);

/// Every assignment making all of gamma designated makes f designated.
bool semantic_consequence(const std::vector<FormulaPtr>& gamma,
                          const FormulaPtr& f, const FiniteAlgebra& a);

/// tau(f) = (f /\ 1 = 1); rho(l = r) = (l -> r, r -> l).
Equation tau(const FormulaPtr& f);
std::pair<FormulaPtr, FormulaPtr> rho(const Equation& e);

}  // namespace gira

#endif
