#ifndef GIRA_PROFILE_HPP
#define GIRA_PROFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gira/algebra.hpp"

namespace gira {

/// Axiom profiles, weakest first within each chain. Girale-side profiles
/// are cumulative: checking GIRALE runs the GIRARD and CRL layers first,
/// so a report always names the weakest broken layer.
enum class Profile {
  PosetLattice,
  GS,
  GL,
  VL7,
  CRL,
  Girard,
  BoundedGirard,
  Girale,
  BoundedGirale,
  LR,
  Heyting,
};

const char* profile_name(Profile p);
std::optional<Profile> profile_from_name(const std::string& s);
std::vector<Profile> all_profiles();

struct Violation {
  std::string condition;       // e.g. "MULT-ASSOC", "L3", "G2"
  std::vector<int> witness;    // lexicographically first offending tuple
  std::vector<int> values;     // evaluated sides, when meaningful
};

struct CheckReport {
  bool pass = true;
  std::vector<Violation> violations;
};

/// Exhaustively evaluates every condition of the profile over all element
/// tuples. Missing tables or constants required by the profile throw
/// MISSING-TABLE / MISSING-CONSTANT; axiom failures go into the report.
/// Each violated condition carries its lexicographically first witness.
CheckReport check_profile(const FiniteAlgebra& a, Profile p);

/// Tables/constants a profile needs. Used by check_profile and by the
/// model enumerator to decide the signature of emitted models.
struct ProfileNeeds {
  bool meet = false, join = false, mult = false, imp = false;
  bool neg = false, bang = false;
  bool one = false, zero = false, top = false, bot = false;
};
ProfileNeeds profile_needs(Profile p);

}  // namespace gira

#endif
