#include "gira/congruence.hpp"

#include <algorithm>
#include <set>

namespace gira {

namespace {

void check_enum_size(const FiniteAlgebra& a, int cap) {
  if (a.n > cap)
    throw AlgebraError("SIZE-LIMIT", "carrier size " + std::to_string(a.n) +
                                         " exceeds enumeration cap " +
                                         std::to_string(cap));
}

bool bit(Subset s, int i) { return (s >> i) & 1u; }

}  // namespace

bool is_filter(const FiniteAlgebra& a, Subset f) {
  if (!a.meet || !a.imp || !a.one)
    throw AlgebraError("MISSING-TABLE", "filters need meet, imp and one");
  int n = a.n;
  Order ord = order_from_meet(a);
  if (!bit(f, *a.one)) return false;
  for (int x = 0; x < n; ++x) {
    if (!bit(f, x)) continue;
    for (int y = 0; y < n; ++y) {
      if (ord.leq(x, y) && !bit(f, y)) return false;                  // up-closed
      if (bit(f, y) && !bit(f, a.mt(x, y))) return false;             // meet-closed
      if (bit(f, a.im(x, y)) && !bit(f, y)) return false;             // mp-closed
    }
    if (a.bang && !bit(f, a.bg(x))) return false;                     // bang-closed
  }
  return true;
}

Subset generate_filter_iterative(const FiniteAlgebra& a, Subset x) {
  if (!a.meet || !a.imp || !a.one)
    throw AlgebraError("MISSING-TABLE", "filters need meet, imp and one");
  int n = a.n;
  Order ord = order_from_meet(a);
  Subset f = x | (1u << *a.one);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      if (!bit(f, p)) continue;
      for (int q = 0; q < n; ++q) {
        if (ord.leq(p, q) && !bit(f, q)) { f |= 1u << q; changed = true; }
        if (bit(f, q) && !bit(f, a.mt(p, q))) { f |= 1u << a.mt(p, q); changed = true; }
        if (bit(f, a.im(p, q)) && !bit(f, q)) { f |= 1u << q; changed = true; }
      }
      if (a.bang && !bit(f, a.bg(p))) { f |= 1u << a.bg(p); changed = true; }
    }
  }
  return f;
}

Subset generate_filter(const FiniteAlgebra& a, Subset x) {
  if (!a.bang) return generate_filter_iterative(a, x);
  if (!a.meet || !a.imp || !a.one)
    throw AlgebraError("MISSING-TABLE", "filters need meet, imp and one");
  int n = a.n;
  Order ord = order_from_meet(a);
  // meets of nonempty subsets of X = closure of X under binary meet
  std::set<int> meets;
  for (int i = 0; i < n; ++i)
    if (bit(x, i)) meets.insert(i);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(meets.begin(), meets.end());
    for (int p : cur)
      for (int q : cur)
        if (meets.insert(a.mt(p, q)).second) grew = true;
  }
  Subset f = 0;
  for (int y = 0; y < n; ++y)
    if (ord.leq(*a.one, y)) f |= 1u << y;  // up-set of 1
  for (int m : meets) {
    int bm = a.bg(m);
    for (int y = 0; y < n; ++y)
      if (ord.leq(bm, y)) f |= 1u << y;
  }
  return f;
}

Subset principal_filter(const FiniteAlgebra& a, int elem) {
  if (a.bang) {
    Order ord = order_from_meet(a);
    Subset f = 0;
    for (int y = 0; y < a.n; ++y)
      if (ord.leq(a.bg(elem), y)) f |= 1u << y;
    return f;
  }
  return generate_filter_iterative(a, 1u << elem);
}

std::vector<Subset> all_filters(const FiniteAlgebra& a, int cap) {
  check_enum_size(a, cap);
  std::vector<Subset> out;
  Subset limit = (a.n >= 31) ? 0 : (1u << a.n);
  for (Subset s = 0; s < limit; ++s)
    if (bit(s, *a.one) && is_filter(a, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset p, Subset q) {
    int cp = __builtin_popcount(p), cq = __builtin_popcount(q);
    return cp != cq ? cp < cq : p < q;
  });
  return out;
}

Partition identity_partition(int n) {
  Partition p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Partition full_partition(int n) { return Partition(n, 0); }

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    up[y] = x;  // smaller index wins, keeping leaders canonical
    return true;
  }
  Partition normalized() {
    int n = (int)up.size();
    Partition p(n);
    for (int i = 0; i < n; ++i) p[i] = find(i);
    return p;
  }
};

}  // namespace

bool partition_leq(const Partition& finer, const Partition& coarser) {
  int n = (int)finer.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (finer[i] == finer[j] && coarser[i] != coarser[j]) return false;
  return true;
}

Partition partition_join(const Partition& p, const Partition& q) {
  int n = (int)p.size();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    uf.unite(i, p[i]);
    uf.unite(i, q[i]);
  }
  return uf.normalized();
}

Partition partition_meet(const Partition& p, const Partition& q) {
  int n = (int)p.size();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] == p[j] && q[i] == q[j]) uf.unite(i, j);
  return uf.normalized();
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  int n = a.n;
  auto bin_ok = [&](const std::optional<std::vector<int>>& t) {
    if (!t) return true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (p[x] != p[y]) continue;
        for (int c = 0; c < n; ++c) {
          if (p[(*t)[x * n + c]] != p[(*t)[y * n + c]]) return false;
          if (p[(*t)[c * n + x]] != p[(*t)[c * n + y]]) return false;
        }
      }
    return true;
  };
  auto un_ok = [&](const std::optional<std::vector<int>>& t) {
    if (!t) return true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p[x] == p[y] && p[(*t)[x]] != p[(*t)[y]]) return false;
    return true;
  };
  return bin_ok(a.meet) && bin_ok(a.join) && bin_ok(a.mult) && bin_ok(a.imp) &&
         un_ok(a.neg) && un_ok(a.bang);
}

Partition theta_of(const FiniteAlgebra& a, Subset f) {
  if (!a.imp) throw AlgebraError("MISSING-TABLE", "imp table required");
  int n = a.n;
  auto rel = [&](int x, int y) {
    return bit(f, a.im(x, y)) && bit(f, a.im(y, x));
  };
  for (int x = 0; x < n; ++x)
    if (!rel(x, x))
      throw AlgebraError("THETA-NOT-EQUIVALENCE", "relation not reflexive", {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (rel(x, y) && rel(y, z) && !rel(x, z))
          throw AlgebraError("THETA-NOT-EQUIVALENCE", "relation not transitive",
                             {x, y, z});
  UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rel(x, y)) uf.unite(x, y);
  return uf.normalized();
}

Subset filter_of(const FiniteAlgebra& a, const Partition& theta) {
  if (!a.one) throw AlgebraError("MISSING-CONSTANT", "one required");
  if (!a.meet) throw AlgebraError("MISSING-TABLE", "meet required");
  // {x : x /\ 1 ~ 1}. The bare class of 1 is not up-closed unless the
  // algebra is integral; meeting with 1 first makes the two maps inverse.
  Subset f = 0;
  for (int x = 0; x < a.n; ++x)
    if (theta[a.mt(x, *a.one)] == theta[*a.one]) f |= 1u << x;
  return f;
}

namespace {

// Closure route: smallest compatible partition containing (x,y).
Partition congruence_closure(const FiniteAlgebra& a, int x, int y) {
  int n = a.n;
  UnionFind uf(n);
  uf.unite(x, y);
  bool changed = true;
  auto spread_bin = [&](const std::optional<std::vector<int>>& t) {
    if (!t) return;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (uf.find(p) != uf.find(q)) continue;
        for (int c = 0; c < n; ++c) {
          if (uf.unite((*t)[p * n + c], (*t)[q * n + c])) changed = true;
          if (uf.unite((*t)[c * n + p], (*t)[c * n + q])) changed = true;
        }
      }
  };
  auto spread_un = [&](const std::optional<std::vector<int>>& t) {
    if (!t) return;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (uf.find(p) == uf.find(q) && uf.unite((*t)[p], (*t)[q])) changed = true;
  };
  while (changed) {
    changed = false;
    spread_bin(a.meet);
    spread_bin(a.join);
    spread_bin(a.mult);
    spread_bin(a.imp);
    spread_un(a.neg);
    spread_un(a.bang);
  }
  return uf.normalized();
}

}  // namespace

Partition principal_congruence(const FiniteAlgebra& a, int x, int y) {
  Partition closure = congruence_closure(a, x, y);
  if (a.meet && a.imp && a.one) {
    // independent route through the generated filter of a<->b
    int bi = a.mt(a.im(x, y), a.im(y, x));
    Partition via_filter = theta_of(a, generate_filter(a, 1u << bi));
    if (via_filter != closure)
      throw AlgebraError("CG-ROUTE-MISMATCH",
                         "filter route and closure route disagree for Cg(" +
                             a.label(x) + "," + a.label(y) + ")",
                         {x, y});
  }
  return closure;
}

std::vector<Partition> all_congruences(const FiniteAlgebra& a, int cap) {
  check_enum_size(a, cap);
  int n = a.n;
  std::set<Partition> found;
  found.insert(identity_partition(n));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      found.insert(congruence_closure(a, x, y));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Partition> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (found.insert(partition_join(cur[i], cur[j])).second) grew = true;
  }
  std::vector<Partition> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
    auto blocks = [](const Partition& r) {
      std::set<int> s(r.begin(), r.end());
      return (int)s.size();
    };
    int bp = blocks(p), bq = blocks(q);
    if (bp != bq) return bp > bq;  // finer (more blocks) first
    return p < q;
  });
  return out;
}

CheckReport check_con_fil_iso(const FiniteAlgebra& a) {
  CheckReport r;
  auto fils = all_filters(a);
  auto cons = all_congruences(a);
  auto add = [&](const std::string& cond, std::vector<int> w = {}) {
    r.violations.push_back({cond, std::move(w), {}});
  };
  if (fils.size() != cons.size()) {
    add("CON-FIL-COUNT: " + std::to_string(fils.size()) + " filters vs " +
        std::to_string(cons.size()) + " congruences");
  }
  std::set<Partition> con_set(cons.begin(), cons.end());
  std::set<Subset> fil_set(fils.begin(), fils.end());
  for (Subset f : fils) {
    Partition th = theta_of(a, f);
    if (!is_congruence(a, th) || !con_set.count(th)) {
      add("CON-FIL-THETA-NOT-CONGRUENCE");
      continue;
    }
    if (filter_of(a, th) != f) add("CON-FIL-ROUNDTRIP-F");
  }
  for (const Partition& th : cons) {
    Subset f = filter_of(a, th);
    if (!fil_set.count(f)) {
      add("CON-FIL-ONE-CLASS-NOT-FILTER");
      continue;
    }
    if (theta_of(a, f) != th) add("CON-FIL-ROUNDTRIP-THETA");
  }
  for (Subset f : fils)
    for (Subset g : fils) {
      bool inc = (f & g) == f;
      bool tinc = partition_leq(theta_of(a, f), theta_of(a, g));
      if (inc != tinc) add("CON-FIL-ORDER");
    }
  r.pass = r.violations.empty();
  return r;
}

CheckReport edpc_check(const FiniteAlgebra& a) {
  if (!a.bang) throw AlgebraError("MISSING-TABLE", "bang table required");
  CheckReport r;
  int n = a.n;
  Order ord = order_from_meet(a);
  auto iff = [&](int x, int y) { return a.mt(a.im(x, y), a.im(y, x)); };
  for (int x = 0; x < n && r.pass; ++x)
    for (int y = 0; y < n && r.pass; ++y) {
      Partition cg = congruence_closure(a, x, y);
      for (int c = 0; c < n && r.pass; ++c)
        for (int d = 0; d < n; ++d) {
          bool in_cg = cg[c] == cg[d];
          bool ineq = ord.leq(a.bg(iff(x, y)), iff(c, d));
          if (in_cg != ineq) {
            r.violations.push_back({"EDPC", {x, y, c, d}, {}});
            r.pass = false;
            break;
          }
        }
    }
  return r;
}

bool is_simple(const FiniteAlgebra& a) {
  return all_congruences(a).size() == 2;
}

bool is_subdirectly_irreducible(const FiniteAlgebra& a) {
  auto cons = all_congruences(a);
  Partition id = identity_partition(a.n);
  Partition monolith = full_partition(a.n);
  bool nontrivial = false;
  for (const auto& th : cons) {
    if (th == id) continue;
    nontrivial = true;
    monolith = partition_meet(monolith, th);
  }
  return nontrivial && monolith != id;
}

}  // namespace gira
