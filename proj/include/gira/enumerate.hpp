#ifndef GIRA_ENUMERATE_HPP
#define GIRA_ENUMERATE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "gira/algebra.hpp"
#include "gira/formula.hpp"
#include "gira/profile.hpp"

namespace gira {

/// A property to falsify: a formula (falsified when some assignment is
/// undesignated), an equation, or a quasiequation.
using SearchGoal = std::variant<FormulaPtr, Equation, Quasiequation>;

struct SearchSpec {
  Profile profile = Profile::CRL;
  int max_size = 3;
  std::optional<SearchGoal> goal;
  /// Partial tables to complete: -1 entries are holes, everything else is
  /// frozen. When set, only algebras of frozen.n are searched.
  std::optional<FiniteAlgebra> frozen;
};

struct SearchResult {
  std::vector<FiniteAlgebra> models;  // canonical forms, sizes ascending then key order
  long long count = 0;
  bool exhausted = false;
  std::optional<FiniteAlgebra> counterexample;
  double wall_ms = 0.0;
};

/// All models of the profile with size <= max_size, modulo isomorphism.
/// Depth-first table completion with constraint propagation; every emitted
/// model re-passes check_profile. Size caps: 6 for lattice-based profiles,
/// 5 for the semilattice ones (gs, gl, v-l7), 3 for lr (its implication
/// table is barely constrained, so the space explodes immediately).
SearchResult enumerate_models(const SearchSpec& spec);

/// First model in canonical enumeration order falsifying the goal, or
/// exhausted=true when there is none up to max_size.
SearchResult find_countermodel(const SearchSpec& spec);

/// Convenience: the models of exactly the given size.
std::vector<FiniteAlgebra> enumerate_profile_size(Profile p, int n);

bool falsifies(const FiniteAlgebra& a, const SearchGoal& goal);

}  // namespace gira

#endif
