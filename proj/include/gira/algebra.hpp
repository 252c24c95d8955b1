#ifndef GIRA_ALGEBRA_HPP
#define GIRA_ALGEBRA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gira {

/// Error with a machine-readable code (NOT-A-SEMILATTICE, NO-RESIDUAL, ...)
/// and, when it makes sense, a witness tuple of element indices.
class AlgebraError : public std::runtime_error {
public:
  AlgebraError(std::string code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

private:
  std::string code_;
  std::vector<int> witness_;
};

/// A finite algebra: carrier {0..n-1} with explicit operation tables.
/// Binary tables are row-major, row = left argument. All tables and
/// constants are optional; which ones must be present depends on the
/// profile being checked. Values are immutable by convention: every
/// operation in this library builds new algebras instead of mutating.
struct FiniteAlgebra {
  std::string name;
  int n = 0;
  std::vector<std::string> elems;

  std::optional<std::vector<int>> meet, join, mult, imp;  // n*n
  std::optional<std::vector<int>> neg, bang;              // n
  std::optional<int> one, zero, top, bot;

  int mt(int a, int b) const { return (*meet)[a * n + b]; }
  int jn(int a, int b) const { return (*join)[a * n + b]; }
  int ml(int a, int b) const { return (*mult)[a * n + b]; }
  int im(int a, int b) const { return (*imp)[a * n + b]; }
  int ng(int a) const { return (*neg)[a]; }
  int bg(int a) const { return (*bang)[a]; }

  const std::string& label(int a) const { return elems[a]; }
  int index_of(const std::string& label) const;  // -1 if unknown

  /// Structural sanity: label count/uniqueness, table sizes, entry ranges,
  /// constants in range. Throws AlgebraError on violation. Algebraic laws
  /// are left to check_profile.
  void validate_shape() const;

  /// Same tables/constants present in both algebras.
  bool same_signature(const FiniteAlgebra& other) const;

  /// Copy with elements renamed through a permutation: element i of the
  /// result is element perm[i] of this algebra.
  FiniteAlgebra permuted(const std::vector<int>& perm) const;
};

/// Partial order induced by a meet table: a <= b iff a /\ b = a.
struct Order {
  int n = 0;
  std::vector<char> le;  // n*n
  bool leq(int a, int b) const { return le[a * n + b] != 0; }
};

/// Order from the meet table. Requires meet to be a semilattice
/// (commutative, associative, idempotent); otherwise throws
/// NOT-A-SEMILATTICE with the offending pair/triple.
Order order_from_meet(const FiniteAlgebra& a);

/// Like order_from_meet but reports failure instead of throwing.
std::optional<Order> try_order_from_meet(const FiniteAlgebra& a);

/// imp[a][b] = max { c : a*c <= b }. Requires meet and mult. Throws
/// NO-RESIDUAL(a,b) when the candidate set is empty or has no greatest
/// element, or when the resulting table fails the adjunction
/// a*b <= c  iff  a <= b->c. If the algebra already carries an imp
/// table, the derived one must agree cell by cell (IMP-MISMATCH).
std::vector<int> residual_from_mult(const FiniteAlgebra& a);

/// neg[a] = imp[a][zero]. Requires imp and zero.
std::vector<int> neg_from_zero(const FiniteAlgebra& a);

/// Direct product; tables componentwise, constants paired when present in
/// both factors. Element (i,j) of A x B has index i*B.n + j.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Minimum element of the order, or -1 if there is none. (A finite
/// lattice always has one.)
int order_minimum(const Order& ord);
int order_maximum(const Order& ord);

}  // namespace gira

#endif
