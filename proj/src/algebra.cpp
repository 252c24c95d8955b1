#include "gira/algebra.hpp"

#include <algorithm>
#include <set>

namespace gira {

int FiniteAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < n; ++i)
    if (elems[i] == label) return i;
  return -1;
}

namespace {

void check_table(const std::string& which, const std::optional<std::vector<int>>& t,
                 size_t expect, int n) {
  if (!t) return;
  if (t->size() != expect)
    throw AlgebraError("BAD-TABLE", which + " table has wrong size");
  for (int v : *t)
    if (v < 0 || v >= n)
      throw AlgebraError("BAD-TABLE", which + " table entry out of range");
}

void check_const(const std::string& which, const std::optional<int>& c, int n) {
  if (c && (*c < 0 || *c >= n))
    throw AlgebraError("MISSING-CONSTANT", which + " out of range");
}

}  // namespace

void FiniteAlgebra::validate_shape() const {
  if (n <= 0) throw AlgebraError("BAD-ALGEBRA", "size must be positive");
  if ((int)elems.size() != n)
    throw AlgebraError("BAD-ALGEBRA", "element label count != size");
  std::set<std::string> seen(elems.begin(), elems.end());
  if ((int)seen.size() != n)
    throw AlgebraError("BAD-ALGEBRA", "element labels not distinct");
  size_t sq = (size_t)n * n;
  check_table("meet", meet, sq, n);
  check_table("join", join, sq, n);
  check_table("mult", mult, sq, n);
  check_table("imp", imp, sq, n);
  check_table("neg", neg, (size_t)n, n);
  check_table("bang", bang, (size_t)n, n);
  check_const("one", one, n);
  check_const("zero", zero, n);
  check_const("top", top, n);
  check_const("bot", bot, n);
}

bool FiniteAlgebra::same_signature(const FiniteAlgebra& o) const {
  return n == o.n && meet.has_value() == o.meet.has_value() &&
         join.has_value() == o.join.has_value() &&
         mult.has_value() == o.mult.has_value() &&
         imp.has_value() == o.imp.has_value() &&
         neg.has_value() == o.neg.has_value() &&
         bang.has_value() == o.bang.has_value() &&
         one.has_value() == o.one.has_value() &&
         zero.has_value() == o.zero.has_value() &&
         top.has_value() == o.top.has_value() &&
         bot.has_value() == o.bot.has_value();
}

FiniteAlgebra FiniteAlgebra::permuted(const std::vector<int>& perm) const {
  // perm maps new index -> old index; inv maps old -> new.
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  FiniteAlgebra r;
  r.name = name;
  r.n = n;
  r.elems.resize(n);
  for (int i = 0; i < n; ++i) r.elems[i] = elems[perm[i]];
  auto bin = [&](const std::optional<std::vector<int>>& t) {
    std::optional<std::vector<int>> out;
    if (t) {
      out.emplace((size_t)n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          (*out)[i * n + j] = inv[(*t)[perm[i] * n + perm[j]]];
    }
    return out;
  };
  auto un = [&](const std::optional<std::vector<int>>& t) {
    std::optional<std::vector<int>> out;
    if (t) {
      out.emplace(n);
      for (int i = 0; i < n; ++i) (*out)[i] = inv[(*t)[perm[i]]];
    }
    return out;
  };
  auto cn = [&](const std::optional<int>& c) {
    return c ? std::optional<int>(inv[*c]) : std::nullopt;
  };
  r.meet = bin(meet);
  r.join = bin(join);
  r.mult = bin(mult);
  r.imp = bin(imp);
  r.neg = un(neg);
  r.bang = un(bang);
  r.one = cn(one);
  r.zero = cn(zero);
  r.top = cn(top);
  r.bot = cn(bot);
  return r;
}

std::optional<Order> try_order_from_meet(const FiniteAlgebra& a) {
  if (!a.meet) return std::nullopt;
  int n = a.n;
  for (int x = 0; x < n; ++x)
    if (a.mt(x, x) != x) return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.mt(x, y) != a.mt(y, x)) return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.mt(a.mt(x, y), z) != a.mt(x, a.mt(y, z))) return std::nullopt;
  Order ord;
  ord.n = n;
  ord.le.assign((size_t)n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ord.le[x * n + y] = (a.mt(x, y) == x) ? 1 : 0;
  return ord;
}

Order order_from_meet(const FiniteAlgebra& a) {
  if (!a.meet) throw AlgebraError("MISSING-TABLE", "meet table required");
  int n = a.n;
  for (int x = 0; x < n; ++x)
    if (a.mt(x, x) != x)
      throw AlgebraError("NOT-A-SEMILATTICE", "meet not idempotent", {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.mt(x, y) != a.mt(y, x))
        throw AlgebraError("NOT-A-SEMILATTICE", "meet not commutative", {x, y});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.mt(a.mt(x, y), z) != a.mt(x, a.mt(y, z)))
          throw AlgebraError("NOT-A-SEMILATTICE", "meet not associative", {x, y, z});
  return *try_order_from_meet(a);
}

std::vector<int> residual_from_mult(const FiniteAlgebra& a) {
  if (!a.meet) throw AlgebraError("MISSING-TABLE", "meet table required");
  if (!a.mult) throw AlgebraError("MISSING-TABLE", "mult table required");
  Order ord = order_from_meet(a);
  int n = a.n;
  std::vector<int> res((size_t)n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // candidates c with x*c <= y; the residual is their greatest element
      std::vector<int> cand;
      for (int c = 0; c < n; ++c)
        if (ord.leq(a.ml(x, c), y)) cand.push_back(c);
      if (cand.empty())
        throw AlgebraError("NO-RESIDUAL", "no candidate for " + a.label(x) +
                                              " -> " + a.label(y), {x, y});
      int best = -1;
      for (int c : cand) {
        bool greatest = true;
        for (int d : cand)
          if (!ord.leq(d, c)) { greatest = false; break; }
        if (greatest) { best = c; break; }
      }
      if (best < 0)
        throw AlgebraError("NO-RESIDUAL", "candidate set for " + a.label(x) +
                                              " -> " + a.label(y) +
                                              " has no greatest element", {x, y});
      res[x * n + y] = best;
    }
  }
  // adjunction must hold for the derived table (fails when x |-> x*c is
  // not monotone, in which case there is no residual either)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int c = 0; c < n; ++c)
        if (ord.leq(a.ml(x, c), y) != ord.leq(c, res[x * n + y]))
          throw AlgebraError("NO-RESIDUAL", "adjunction fails at (" + a.label(x) +
                                                ", " + a.label(y) + ")", {x, y, c});
  if (a.imp) {
    for (int i = 0; i < n * n; ++i)
      if ((*a.imp)[i] != res[i])
        throw AlgebraError("IMP-MISMATCH", "given imp table disagrees with residual",
                           {i / n, i % n});
  }
  return res;
}

std::vector<int> neg_from_zero(const FiniteAlgebra& a) {
  if (!a.imp) throw AlgebraError("MISSING-TABLE", "imp table required");
  if (!a.zero) throw AlgebraError("MISSING-CONSTANT", "zero required");
  std::vector<int> out(a.n);
  for (int x = 0; x < a.n; ++x) out[x] = a.im(x, *a.zero);
  return out;
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  FiniteAlgebra r;
  r.name = a.name + "x" + b.name;
  r.n = a.n * b.n;
  r.elems.resize(r.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      r.elems[i * b.n + j] = "(" + a.elems[i] + "," + b.elems[j] + ")";
  auto bin = [&](const std::optional<std::vector<int>>& ta,
                 const std::optional<std::vector<int>>& tb) {
    std::optional<std::vector<int>> out;
    if (ta && tb) {
      out.emplace((size_t)r.n * r.n);
      for (int i1 = 0; i1 < a.n; ++i1)
        for (int j1 = 0; j1 < b.n; ++j1)
          for (int i2 = 0; i2 < a.n; ++i2)
            for (int j2 = 0; j2 < b.n; ++j2) {
              int x = i1 * b.n + j1, y = i2 * b.n + j2;
              (*out)[x * r.n + y] =
                  (*ta)[i1 * a.n + i2] * b.n + (*tb)[j1 * b.n + j2];
            }
    }
    return out;
  };
  auto un = [&](const std::optional<std::vector<int>>& ta,
                const std::optional<std::vector<int>>& tb) {
    std::optional<std::vector<int>> out;
    if (ta && tb) {
      out.emplace(r.n);
      for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j)
          (*out)[i * b.n + j] = (*ta)[i] * b.n + (*tb)[j];
    }
    return out;
  };
  auto cn = [&](const std::optional<int>& ca, const std::optional<int>& cb) {
    return (ca && cb) ? std::optional<int>(*ca * b.n + *cb) : std::nullopt;
  };
  r.meet = bin(a.meet, b.meet);
  r.join = bin(a.join, b.join);
  r.mult = bin(a.mult, b.mult);
  r.imp = bin(a.imp, b.imp);
  r.neg = un(a.neg, b.neg);
  r.bang = un(a.bang, b.bang);
  r.one = cn(a.one, b.one);
  r.zero = cn(a.zero, b.zero);
  r.top = cn(a.top, b.top);
  r.bot = cn(a.bot, b.bot);
  return r;
}

int order_minimum(const Order& ord) {
  for (int m = 0; m < ord.n; ++m) {
    bool min = true;
    for (int x = 0; x < ord.n; ++x)
      if (!ord.leq(m, x)) { min = false; break; }
    if (min) return m;
  }
  return -1;
}

int order_maximum(const Order& ord) {
  for (int m = 0; m < ord.n; ++m) {
    bool max = true;
    for (int x = 0; x < ord.n; ++x)
      if (!ord.leq(x, m)) { max = false; break; }
    if (max) return m;
  }
  return -1;
}

}  // namespace gira
