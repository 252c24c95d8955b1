#ifndef GIRA_CONGRUENCE_HPP
#define GIRA_CONGRUENCE_HPP

#include <cstdint>
#include <vector>

#include "gira/algebra.hpp"
#include "gira/profile.hpp"

namespace gira {

/// Carrier subsets as bitmasks; element i is bit i. Enumeration entry
/// points reject carriers above the size cap (SIZE-LIMIT).
using Subset = std::uint32_t;

constexpr int kDefaultEnumCap = 10;

/// Filter conditions: contains 1, up-closed, meet-closed, closed under
/// modus ponens, and closed under ! when the algebra has a bang table.
bool is_filter(const FiniteAlgebra& a, Subset f);

/// Least filter containing X. With a bang table this uses the generated
/// description {a : !(b1 /\ ... /\ bk) <= a, bi in X} together with the
/// up-set of 1; without one it iterates the closure conditions to a
/// fixpoint. Both routes agree on girales (tested).
Subset generate_filter(const FiniteAlgebra& a, Subset x);
Subset generate_filter_iterative(const FiniteAlgebra& a, Subset x);

/// For a girale this is the lattice up-set of !a.
Subset principal_filter(const FiniteAlgebra& a, int elem);

/// All filters, sorted by (size, mask). Inclusion is the lattice order.
std::vector<Subset> all_filters(const FiniteAlgebra& a, int cap = kDefaultEnumCap);

/// Partition of the carrier in block-leader form: rep[i] is the smallest
/// element of i's block.
using Partition = std::vector<int>;

Partition identity_partition(int n);
Partition full_partition(int n);
bool partition_leq(const Partition& finer, const Partition& coarser);
Partition partition_join(const Partition& p, const Partition& q);
Partition partition_meet(const Partition& p, const Partition& q);

/// Compatibility with every present operation table.
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// theta_F = {(a,b) : a->b in F and b->a in F}. Throws
/// THETA-NOT-EQUIVALENCE when the relation fails to be one (possible for
/// subsets that are not filters).
Partition theta_of(const FiniteAlgebra& a, Subset f);

/// 1/theta read as a filter: {a : a /\ 1 ~ 1}. On integral algebras this
/// is the congruence block of 1 itself; in general the block of 1 need
/// not be up-closed, and this is the map inverse to theta_of.
Subset filter_of(const FiniteAlgebra& a, const Partition& theta);

/// Smallest congruence identifying a and b, computed by closure under the
/// operation tables; when imp and one are present the filter route
/// theta_of(generate_filter({a<->b})) is computed as well and must agree.
Partition principal_congruence(const FiniteAlgebra& a, int x, int y);

/// All congruences: principal ones closed under join.
std::vector<Partition> all_congruences(const FiniteAlgebra& a,
                                       int cap = kDefaultEnumCap);

/// Verifies theta |-> 1/theta and F |-> theta_F are mutually inverse
/// order-isomorphisms between the filter and congruence lattices.
CheckReport check_con_fil_iso(const FiniteAlgebra& a);

/// (c,d) in Cg(a,b)  iff  !(a<->b) <= c<->d, for all quadruples.
CheckReport edpc_check(const FiniteAlgebra& a);

bool is_simple(const FiniteAlgebra& a);
bool is_subdirectly_irreducible(const FiniteAlgebra& a);

}  // namespace gira

#endif
