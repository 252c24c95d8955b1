#ifndef GIRA_ISO_HPP
#define GIRA_ISO_HPP

#include <optional>
#include <string>
#include <vector>

#include "gira/algebra.hpp"

namespace gira {

/// Bijection sigma with sigma(x op y) = sigma(x) op sigma(y) for every
/// present table and sigma(c) = c for every present constant, found by
/// brute force over permutations. Both algebras must have the same size
/// and signature (SIGNATURE-MISMATCH otherwise). Intended for the small
/// sizes the enumerator produces; sizes above 8 are rejected (SIZE-LIMIT).
std::optional<std::vector<int>> is_isomorphic(const FiniteAlgebra& a,
                                              const FiniteAlgebra& b);

/// Renaming-invariant key: the lexicographically smallest encoding of the
/// tables over all permutations of the carrier. Two algebras of equal
/// signature are isomorphic iff their keys are equal.
std::string canonical_key(const FiniteAlgebra& a);

/// The permuted copy realizing canonical_key, with generic element names
/// e0..e{n-1}.
FiniteAlgebra canonical_form(const FiniteAlgebra& a);

}  // namespace gira

#endif
