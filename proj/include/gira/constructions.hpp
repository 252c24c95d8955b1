#ifndef GIRA_CONSTRUCTIONS_HPP
#define GIRA_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "gira/algebra.hpp"
#include "gira/congruence.hpp"
#include "gira/profile.hpp"

namespace gira {

/// The height-three lattice with n atoms, carrying the standard
/// negation/multiplication/modality tables; imp is derived as ~(a * ~b).
/// n=1 degenerates to the two-element Boolean algebra with 0=bot, 1=top.
/// For n>=2 the carrier order is bot, one, a3..an, zero, top.
///
/// amend_neg (the default) replaces ~one=bot by the involution
/// ~one=zero, ~zero=one; the verbatim table is kept as a diagnostic mode
/// because it breaks ~~one=one. For n>=3 the multiplication is broken
/// either way: (a*a)*0 = bot but a*(a*0) = top for any free atom a.
FiniteAlgebra gen_gn(int n, bool amend_neg = true);

/// Which G_n table cells to re-search. Unfrozen mult cells are unordered
/// pairs of element indices (commutativity is kept); unfreezing neg
/// re-enumerates the whole negation table.
struct RepairSpec {
  std::vector<std::pair<int, int>> unfrozen_mult;
  bool unfrozen_neg = false;
};

/// Enumerates completions of the unfrozen cells (over the amended G_n
/// base), keeping those that pass BOUNDED-GIRALE; imp is re-derived as the
/// residual of each candidate multiplication. Results are canonical forms
/// in deterministic order. n <= 4.
std::vector<FiniteAlgebra> repair_search(int n, const RepairSpec& spec);

/// Subset H of idempotent elements <= 1 inducing a modality. Validation
/// (INVALID-H / NO-SUP): 1 in H, members idempotent and below 1, closed
/// under mult, and each restriction {b in H : b <= a} nonempty and closed
/// under join, so that its maximum exists.
bool valid_modality_subset(const FiniteAlgebra& a, Subset h, std::string* why = nullptr);

/// bang[x] = max{b in H : b <= x}. The result passes GIRALE (checked).
FiniteAlgebra induce_modality(const FiniteAlgebra& a, Subset h);

/// All valid modality subsets, sorted by mask.
std::vector<Subset> rc_heyting_subsets(const FiniteAlgebra& a);

/// The algebra on the image of bang: meet/join inherited, mult = meet,
/// imp_h(u,v) = !(u -> v), one = 1, bot = least element. Passes HEYTING.
struct HeytResult {
  FiniteAlgebra algebra;
  std::vector<int> image;  // heyt index -> base index
};
HeytResult heyt(const FiniteAlgebra& a);

/// Heyt(A) satisfies ~~x = x, with ~u = u -> bot computed in Heyt(A).
bool boolean_girale_check(const FiniteAlgebra& a);

/// The maps H |-> H /\ !A and G |-> Fil_A(G) are mutually inverse
/// order-isomorphisms between the filter lattices of A and Heyt(A).
CheckReport heyt_con_iso(const FiniteAlgebra& a);

/// Frame completion over the semilattice filters Gamma_A: hereditary
/// families of filters with meet = intersection, join = union, and the
/// relational product/residual. Verifies the result passes CRL and that
/// a |-> {F : a in F} embeds the {meet, imp, one} structure.
struct FrameCompletion {
  std::vector<Subset> filters;      // Gamma_A, each a carrier subset
  std::vector<Subset> families;     // hereditary families, bits index filters
  FiniteAlgebra algebra;
  std::vector<int> embedding;       // carrier -> family index
  CheckReport embedding_report;
};
FrameCompletion frame_completion(const FiniteAlgebra& a, int cap = 4);

/// Phase completion over the polar N(S) = {b : ~b >= a for all a in S}:
/// closed sets are the fixpoints of N o N, multiplication is the closure
/// of the setwise product, negation is N, and a |-> NN({a}) = (a] embeds
/// the Girard structure. The result passes BOUNDED-GIRARD.
struct PhaseCompletion {
  std::vector<Subset> closed;       // closed sets, sorted by mask
  FiniteAlgebra algebra;
  std::vector<int> embedding;       // carrier -> closed-set index
  CheckReport embedding_report;
};
PhaseCompletion phase_completion(const FiniteAlgebra& a, int cap = 8);

/// Phase completion followed by the induced modality on the idempotents
/// below 1: embeds any Girard algebra into a girale, preserving the
/// Girard signature.
CheckReport conservativity_check(const FiniteAlgebra& a);

}  // namespace gira

#endif
