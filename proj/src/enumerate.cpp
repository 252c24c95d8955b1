#include "gira/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "gira/congruence.hpp"
#include "gira/constructions.hpp"
#include "gira/eval.hpp"
#include "gira/iso.hpp"
#include "gira/parallel.hpp"

namespace gira {

namespace {

int size_cap(Profile p) {
  switch (p) {
    case Profile::GS:
    case Profile::GL:
    case Profile::VL7:
      return 5;
    case Profile::LR:
      return 3;
    default:
      return 6;
  }
}

// ---------------------------------------------------------------------------
// Order seeds. Relations are enumerated as subsets of the numeric order on
// {0..n-1} (every finite poset has a linear extension, so this loses no
// isomorphism class), then deduplicated by canonical form.

struct OrderTables {
  std::vector<int> meet, join;  // join empty for semilattice-only seeds
};

bool transitive(const std::vector<char>& le, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[i * n + j]) continue;
      for (int k = 0; k < n; ++k)
        if (le[j * n + k] && !le[i * n + k]) return false;
    }
  return true;
}

// greatest lower bound of (i,j), or -1
int glb(const std::vector<char>& le, int n, int i, int j) {
  int best = -1;
  for (int k = 0; k < n; ++k) {
    if (!le[k * n + i] || !le[k * n + j]) continue;
    bool top_of_lb = true;
    for (int l = 0; l < n; ++l)
      if (le[l * n + i] && le[l * n + j] && !le[l * n + k]) { top_of_lb = false; break; }
    if (top_of_lb) { best = k; break; }
  }
  return best;
}

int lub(const std::vector<char>& le, int n, int i, int j) {
  int best = -1;
  for (int k = 0; k < n; ++k) {
    if (!le[i * n + k] || !le[j * n + k]) continue;
    bool bottom_of_ub = true;
    for (int l = 0; l < n; ++l)
      if (le[i * n + l] && le[j * n + l] && !le[k * n + l]) { bottom_of_ub = false; break; }
    if (bottom_of_ub) { best = k; break; }
  }
  return best;
}

std::vector<OrderTables> order_seeds(int n, bool need_join) {
  std::vector<OrderTables> out;
  std::map<std::string, bool> seen;
  int pairs = n * (n - 1) / 2;
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    std::vector<char> le((size_t)n * n, 0);
    int bitpos = 0;
    for (int i = 0; i < n; ++i) {
      le[i * n + i] = 1;
      for (int j = i + 1; j < n; ++j, ++bitpos)
        le[i * n + j] = (mask >> bitpos) & 1;
    }
    if (!transitive(le, n)) continue;
    OrderTables t;
    t.meet.assign((size_t)n * n, 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        int m = glb(le, n, i, j);
        if (m < 0) { ok = false; break; }
        t.meet[i * n + j] = m;
      }
    if (!ok) continue;
    if (need_join) {
      t.join.assign((size_t)n * n, 0);
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          int m = lub(le, n, i, j);
          if (m < 0) { ok = false; break; }
          t.join[i * n + j] = m;
        }
      if (!ok) continue;
    }
    FiniteAlgebra probe;
    probe.n = n;
    probe.elems.resize(n);
    for (int i = 0; i < n; ++i) probe.elems[i] = "e" + std::to_string(i);
    probe.meet = t.meet;
    if (need_join) probe.join = t.join;
    std::string key = canonical_key(probe);
    if (seen.emplace(key, true).second) out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multiplication completion for the residuated profiles.

struct MultSearch {
  int n;
  const std::vector<int>& meet;
  const std::vector<int>& join;
  Order ord;
  int unit;
  std::vector<int> mult;
  std::vector<std::pair<int, int>> cells;
  std::vector<FiniteAlgebra>* out;

  bool leq(int a, int b) const { return ord.leq(a, b); }
  int mt(int a, int b) const { return meet[a * n + b]; }
  int jn(int a, int b) const { return join[a * n + b]; }
  int m(int a, int b) const { return mult[a * n + b]; }

  // Partial-table consistency: monotonicity, distributivity over join,
  // associativity, all on known cells only.
  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = m(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          if (leq(b, c) && m(a, c) >= 0 && !leq(ab, m(a, c))) return false;
          int ac = m(a, c);
          if (ac >= 0) {
            int e = jn(b, c);
            if (m(a, e) >= 0 && m(a, e) != jn(ab, ac)) return false;
          }
          if (ab >= 0 && m(ab, c) >= 0 && m(b, c) >= 0 && m(a, m(b, c)) >= 0 &&
              m(ab, c) != m(a, m(b, c)))
            return false;
        }
      }
    return true;
  }

  void emit_complete() {
    FiniteAlgebra a;
    a.n = n;
    a.elems.resize(n);
    for (int i = 0; i < n; ++i) a.elems[i] = "e" + std::to_string(i);
    a.meet = meet;
    a.join = join;
    a.mult = mult;
    a.one = unit;
    try {
      a.imp = residual_from_mult(a);
    } catch (const AlgebraError&) {
      return;  // no residual: not residuated
    }
    if (!check_profile(a, Profile::CRL).pass) return;
    out->push_back(std::move(a));
  }

  void run(size_t idx) {
    if (idx == cells.size()) {
      emit_complete();
      return;
    }
    auto [x, y] = cells[idx];
    for (int v = 0; v < n; ++v) {
      mult[x * n + y] = v;
      mult[y * n + x] = v;
      if (consistent()) run(idx + 1);
    }
    mult[x * n + y] = -1;
    mult[y * n + x] = -1;
  }
};

// All commutative residuated lattices on the given lattice tables with the
// given unit, as labeled algebras (dedup happens upstream).
std::vector<FiniteAlgebra> crls_on_lattice(int n, const std::vector<int>& meet,
                                           const std::vector<int>& join, int unit) {
  std::vector<FiniteAlgebra> out;
  FiniteAlgebra probe;
  probe.n = n;
  probe.elems.resize(n);
  probe.meet = meet;
  MultSearch ms{n, meet, join, *try_order_from_meet(probe), unit, {}, {}, &out};
  int bot = order_minimum(ms.ord);
  if (unit == bot && n > 1) return out;  // unit row + annihilation collapse
  ms.mult.assign((size_t)n * n, -1);
  for (int x = 0; x < n; ++x) {
    ms.mult[bot * n + x] = bot;  // needed for residuals into bot
    ms.mult[x * n + bot] = bot;
    ms.mult[unit * n + x] = x;
    ms.mult[x * n + unit] = x;
  }
  if (ms.mult[unit * n + bot] != bot && n > 1) return out;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (ms.mult[x * n + y] < 0) ms.cells.push_back({x, y});
  if (!ms.consistent()) return out;
  ms.run(0);
  return out;
}

// ---------------------------------------------------------------------------
// Implication completion for the semilattice profiles (gs, gl, v-l7): each
// row must preserve binary meets (L3), the diagonal must be designated
// (L2), and the unit row is the identity (L1); the remaining laws are
// checked between filled rows and the complete table re-passes the
// profile at the end.

struct ImpSearch {
  Profile profile;
  int n;
  const std::vector<int>& meet;
  const std::vector<int>* join;  // only for gl
  Order ord;
  int unit;
  std::vector<std::vector<int>> rows;     // rows[a], empty = unassigned
  std::vector<std::vector<int>> cands;    // meet-preserving maps
  std::vector<FiniteAlgebra>* out;

  bool leq(int a, int b) const { return ord.leq(a, b); }
  int mt(int a, int b) const { return meet[a * n + b]; }
  bool designated(int x) const { return leq(unit, x); }

  bool row_filled(int a) const { return !rows[a].empty(); }

  bool cross_laws_ok() const {
    // L4: a->b <= (c->a) -> (c->b)
    for (int a = 0; a < n; ++a) {
      if (!row_filled(a)) continue;
      for (int c = 0; c < n; ++c) {
        if (!row_filled(c)) continue;
        for (int b = 0; b < n; ++b) {
          int ca = rows[c][a];
          if (!row_filled(ca)) continue;
          if (!leq(rows[a][b], rows[ca][rows[c][b]])) return false;
        }
      }
    }
    // L5: a->(b->c) <= b->(a->c)
    for (int a = 0; a < n; ++a) {
      if (!row_filled(a)) continue;
      for (int b = 0; b < n; ++b) {
        if (!row_filled(b)) continue;
        for (int c = 0; c < n; ++c)
          if (!leq(rows[a][rows[b][c]], rows[b][rows[a][c]])) return false;
      }
    }
    // L6: a->b, b->a >= 1 implies a = b
    for (int a = 0; a < n; ++a) {
      if (!row_filled(a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!row_filled(b)) continue;
        if (designated(rows[a][b]) && designated(rows[b][a])) return false;
      }
    }
    if (profile == Profile::VL7) {
      // x <= ((x->y) /\ 1) -> y
      for (int a = 0; a < n; ++a) {
        if (!row_filled(a)) continue;
        for (int b = 0; b < n; ++b) {
          int w = mt(rows[a][b], unit);
          if (!row_filled(w)) continue;
          if (!leq(a, rows[w][b])) return false;
        }
      }
    }
    if (profile == Profile::GL) {
      // (a->c) /\ (b->c) = (a\/b) -> c
      for (int a = 0; a < n; ++a) {
        if (!row_filled(a)) continue;
        for (int b = 0; b < n; ++b) {
          if (!row_filled(b)) continue;
          int j = (*join)[a * n + b];
          if (!row_filled(j)) continue;
          for (int c = 0; c < n; ++c)
            if (mt(rows[a][c], rows[b][c]) != rows[j][c]) return false;
        }
      }
    }
    return true;
  }

  void emit_complete() {
    FiniteAlgebra a;
    a.n = n;
    a.elems.resize(n);
    for (int i = 0; i < n; ++i) a.elems[i] = "e" + std::to_string(i);
    a.meet = meet;
    if (join) a.join = *join;
    std::vector<int> imp((size_t)n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) imp[x * n + y] = rows[x][y];
    a.imp = std::move(imp);
    a.one = unit;
    if (!check_profile(a, profile).pass) return;
    out->push_back(std::move(a));
  }

  void run(int a) {
    while (a < n && row_filled(a)) ++a;
    if (a == n) {
      emit_complete();
      return;
    }
    for (const auto& cand : cands) {
      if (!designated(cand[a])) continue;  // L2
      rows[a] = cand;
      if (cross_laws_ok()) run(a + 1);
      rows[a].clear();
    }
  }
};

std::vector<FiniteAlgebra> imps_on_semilattice(Profile profile, int n,
                                               const std::vector<int>& meet,
                                               const std::vector<int>* join, int unit) {
  std::vector<FiniteAlgebra> out;
  FiniteAlgebra probe;
  probe.n = n;
  probe.elems.resize(n);
  probe.meet = meet;
  ImpSearch is{profile, n, meet, join, *try_order_from_meet(probe), unit,
               {},      {}, &out};
  is.rows.resize(n);
  // identity must itself be meet-preserving, so L1 fixes the unit row
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  is.rows[unit] = ident;

  // all meet-preserving self-maps
  std::vector<int> f(n, 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    long long t = code;
    for (int i = 0; i < n; ++i) { f[i] = (int)(t % n); t /= n; }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x; y < n; ++y)
        if (f[is.mt(x, y)] != is.mt(f[x], f[y])) { ok = false; break; }
    if (ok) is.cands.push_back(f);
  }
  if (!is.cross_laws_ok()) return out;
  is.run(0);
  return out;
}

// ---------------------------------------------------------------------------

void add_models(std::map<std::string, FiniteAlgebra>& pool,
                std::vector<FiniteAlgebra> batch, Profile p, const char* stem) {
  for (auto& a : batch) {
    std::string key = canonical_key(a);
    if (pool.count(key)) continue;
    FiniteAlgebra canon = canonical_form(a);
    if (!check_profile(canon, p).pass) continue;  // no propagation shortcuts
    canon.name = stem + std::to_string(canon.n) + "_" + std::to_string(pool.size());
    pool.emplace(std::move(key), std::move(canon));
  }
}

std::vector<FiniteAlgebra> finish(std::map<std::string, FiniteAlgebra>& pool,
                                  const char* stem) {
  std::vector<FiniteAlgebra> out;
  int idx = 0;
  for (auto& [k, a] : pool) {
    a.name = std::string(stem) + std::to_string(a.n) + "_" + std::to_string(idx++);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<FiniteAlgebra> girards_of_size(int n) {
  auto seeds = order_seeds(n, true);
  std::map<std::string, FiniteAlgebra> pool;
  std::vector<std::vector<FiniteAlgebra>> buckets(seeds.size() * n);
  par::for_each((long long)buckets.size(), [&](long long r) {
    const auto& seed = seeds[r / n];
    int unit = (int)(r % n);
    auto crls = crls_on_lattice(n, seed.meet, seed.join, unit);
    for (auto& c : crls) {
      for (int z = 0; z < n; ++z) {
        bool inv = true;
        for (int b = 0; b < n && inv; ++b)
          if (c.im(c.im(b, z), z) != b) inv = false;
        if (!inv) continue;
        FiniteAlgebra g = c;
        g.zero = z;
        g.neg = neg_from_zero(g);
        buckets[r].push_back(std::move(g));
      }
    }
  });
  for (auto& b : buckets) add_models(pool, std::move(b), Profile::Girard, "girard");
  return finish(pool, "girard");
}

std::vector<FiniteAlgebra> crls_of_size(int n) {
  auto seeds = order_seeds(n, true);
  std::map<std::string, FiniteAlgebra> pool;
  std::vector<std::vector<FiniteAlgebra>> buckets(seeds.size() * n);
  par::for_each((long long)buckets.size(), [&](long long r) {
    const auto& seed = seeds[r / n];
    buckets[r] = crls_on_lattice(n, seed.meet, seed.join, (int)(r % n));
  });
  for (auto& b : buckets) add_models(pool, std::move(b), Profile::CRL, "crl");
  return finish(pool, "crl");
}

std::vector<FiniteAlgebra> girales_of_size(int n) {
  auto girards = girards_of_size(n);
  std::map<std::string, FiniteAlgebra> pool;
  for (const auto& g : girards) {
    for (Subset h : rc_heyting_subsets(g)) {
      FiniteAlgebra gi = induce_modality(g, h);
      add_models(pool, {gi}, Profile::Girale, "girale");
    }
  }
  return finish(pool, "girale");
}

void set_bounds(FiniteAlgebra& a) {
  Order ord = order_from_meet(a);
  a.top = order_maximum(ord);
  a.bot = order_minimum(ord);
}

std::vector<FiniteAlgebra> lattices_of_size(int n) {
  auto seeds = order_seeds(n, true);
  std::map<std::string, FiniteAlgebra> pool;
  for (const auto& seed : seeds) {
    FiniteAlgebra a;
    a.n = n;
    a.elems.resize(n);
    for (int i = 0; i < n; ++i) a.elems[i] = "e" + std::to_string(i);
    a.meet = seed.meet;
    a.join = seed.join;
    add_models(pool, {a}, Profile::PosetLattice, "lat");
  }
  return finish(pool, "lat");
}

std::vector<FiniteAlgebra> heytings_of_size(int n) {
  auto seeds = order_seeds(n, true);
  std::map<std::string, FiniteAlgebra> pool;
  for (const auto& seed : seeds) {
    FiniteAlgebra a;
    a.n = n;
    a.elems.resize(n);
    for (int i = 0; i < n; ++i) a.elems[i] = "e" + std::to_string(i);
    a.meet = seed.meet;
    a.join = seed.join;
    a.mult = seed.meet;
    Order ord = order_from_meet(a);
    a.one = order_maximum(ord);
    try {
      a.imp = residual_from_mult(a);
    } catch (const AlgebraError&) {
      continue;  // meet not residuated: not a Heyting lattice
    }
    a.top = a.one;
    a.bot = order_minimum(ord);
    add_models(pool, {a}, Profile::Heyting, "heyt");
  }
  return finish(pool, "heyt");
}

std::vector<FiniteAlgebra> semilattice_profile_of_size(Profile p, int n) {
  bool need_join = p == Profile::GL;
  auto seeds = order_seeds(n, need_join);
  std::map<std::string, FiniteAlgebra> pool;
  std::vector<std::vector<FiniteAlgebra>> buckets(seeds.size() * n);
  par::for_each((long long)buckets.size(), [&](long long r) {
    const auto& seed = seeds[r / n];
    int unit = (int)(r % n);
    buckets[r] = imps_on_semilattice(p, n, seed.meet,
                                     need_join ? &seed.join : nullptr, unit);
  });
  const char* stem = p == Profile::GS ? "gs" : p == Profile::GL ? "gl" : "vl7";
  for (auto& b : buckets) add_models(pool, std::move(b), p, stem);
  return finish(pool, stem);
}

std::vector<FiniteAlgebra> lrs_of_size(int n) {
  auto seeds = order_seeds(n, true);
  std::map<std::string, FiniteAlgebra> pool;
  long long tables = 1;
  for (int i = 0; i < n * n; ++i) tables *= n;
  for (const auto& seed : seeds) {
    FiniteAlgebra base;
    base.n = n;
    base.elems.resize(n);
    for (int i = 0; i < n; ++i) base.elems[i] = "e" + std::to_string(i);
    base.meet = seed.meet;
    base.join = seed.join;
    set_bounds(base);
    // involutive De Morgan negations
    std::vector<std::vector<int>> negs;
    long long un = 1;
    for (int i = 0; i < n; ++i) un *= n;
    for (long long code = 0; code < un; ++code) {
      std::vector<int> ng(n);
      long long t = code;
      for (int i = 0; i < n; ++i) { ng[i] = (int)(t % n); t /= n; }
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        if (ng[ng[x]] != x) ok = false;
        for (int y = 0; y < n && ok; ++y)
          if (ng[base.jn(x, y)] != base.mt(ng[x], ng[y])) ok = false;
      }
      if (ok) negs.push_back(std::move(ng));
    }
    for (const auto& ng : negs) {
      FiniteAlgebra a = base;
      a.neg = ng;
      for (long long code = 0; code < tables; ++code) {
        std::vector<int> imp(n * n);
        long long t = code;
        for (int i = 0; i < n * n; ++i) { imp[i] = (int)(t % n); t /= n; }
        a.imp = std::move(imp);
        if (check_profile(a, Profile::LR).pass) add_models(pool, {a}, Profile::LR, "lr");
      }
    }
  }
  return finish(pool, "lr");
}

std::vector<FiniteAlgebra> with_bounds(std::vector<FiniteAlgebra> models, Profile p,
                                       const char* stem) {
  std::map<std::string, FiniteAlgebra> pool;
  for (auto& a : models) {
    set_bounds(a);
    add_models(pool, {a}, p, stem);
  }
  return finish(pool, stem);
}

// Frozen-structure completion: plain depth-first search over the holes,
// with the profile check as the only filter.
std::vector<FiniteAlgebra> complete_frozen(const FiniteAlgebra& frozen, Profile p) {
  struct Hole { int table; size_t index; };
  FiniteAlgebra work = frozen;
  std::vector<std::optional<std::vector<int>>*> tabs = {&work.meet, &work.join,
                                                        &work.mult, &work.imp,
                                                        &work.neg,  &work.bang};
  std::vector<Hole> holes;
  for (int t = 0; t < (int)tabs.size(); ++t) {
    if (!*tabs[t]) continue;
    for (size_t i = 0; i < (*tabs[t])->size(); ++i)
      if ((**tabs[t])[i] < 0) holes.push_back({t, i});
  }
  std::map<std::string, FiniteAlgebra> pool;
  std::function<void(size_t)> rec = [&](size_t h) {
    if (h == holes.size()) {
      if (check_profile(work, p).pass) add_models(pool, {work}, p, "frozen");
      return;
    }
    for (int v = 0; v < work.n; ++v) {
      (**tabs[holes[h].table])[holes[h].index] = v;
      rec(h + 1);
    }
    (**tabs[holes[h].table])[holes[h].index] = -1;
  };
  if (holes.size() > 12)
    throw AlgebraError("SIZE-LIMIT", "too many holes in frozen structure");
  rec(0);
  return finish(pool, "frozen");
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_profile_size(Profile p, int n) {
  switch (p) {
    case Profile::PosetLattice:
      return lattices_of_size(n);
    case Profile::GS:
    case Profile::GL:
    case Profile::VL7:
      return semilattice_profile_of_size(p, n);
    case Profile::CRL:
      return crls_of_size(n);
    case Profile::Girard:
      return girards_of_size(n);
    case Profile::BoundedGirard:
      return with_bounds(girards_of_size(n), Profile::BoundedGirard, "bgirard");
    case Profile::Girale:
      return girales_of_size(n);
    case Profile::BoundedGirale:
      return with_bounds(girales_of_size(n), Profile::BoundedGirale, "bgirale");
    case Profile::LR:
      return lrs_of_size(n);
    case Profile::Heyting:
      return heytings_of_size(n);
  }
  return {};
}

bool falsifies(const FiniteAlgebra& a, const SearchGoal& goal) {
  if (const auto* f = std::get_if<FormulaPtr>(&goal)) return !validates(a, *f);
  if (const auto* e = std::get_if<Equation>(&goal)) return !satisfies(a, *e);
  return !satisfies(a, std::get<Quasiequation>(goal));
}

SearchResult enumerate_models(const SearchSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  SearchResult res;
  if (spec.frozen) {
    res.models = complete_frozen(*spec.frozen, spec.profile);
  } else {
    if (spec.max_size > size_cap(spec.profile))
      throw AlgebraError("SIZE-LIMIT",
                         std::string("profile ") + profile_name(spec.profile) +
                             " is capped at size " + std::to_string(size_cap(spec.profile)));
    for (int n = 1; n <= spec.max_size; ++n) {
      auto batch = enumerate_profile_size(spec.profile, n);
      for (auto& a : batch) res.models.push_back(std::move(a));
    }
  }
  res.count = (long long)res.models.size();
  res.exhausted = true;
  res.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

SearchResult find_countermodel(const SearchSpec& spec) {
  if (!spec.goal) throw AlgebraError("BAD-ARGUMENT", "find_countermodel needs a goal");
  auto start = std::chrono::steady_clock::now();
  SearchResult res;
  auto scan = [&](std::vector<FiniteAlgebra> batch) {
    for (auto& a : batch) {
      bool bad = falsifies(a, *spec.goal);
      res.models.push_back(std::move(a));
      if (bad) {
        res.counterexample = res.models.back();
        return true;
      }
    }
    return false;
  };
  bool found = false;
  if (spec.frozen) {
    found = scan(complete_frozen(*spec.frozen, spec.profile));
  } else {
    if (spec.max_size > size_cap(spec.profile))
      throw AlgebraError("SIZE-LIMIT",
                         std::string("profile ") + profile_name(spec.profile) +
                             " is capped at size " + std::to_string(size_cap(spec.profile)));
    for (int n = 1; n <= spec.max_size && !found; ++n)
      found = scan(enumerate_profile_size(spec.profile, n));
  }
  res.count = (long long)res.models.size();
  res.exhausted = !found;
  res.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

}  // namespace gira
