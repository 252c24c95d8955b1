#include "gira/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gira/iso.hpp"

namespace gira {

namespace {

bool bit(Subset s, int i) { return (s >> i) & 1u; }

void require_profile(const FiniteAlgebra& a, Profile p) {
  CheckReport r = check_profile(a, p);
  if (!r.pass)
    throw AlgebraError("PRECONDITION",
                       a.name + " does not pass profile " + profile_name(p) +
                           " (first violation: " + r.violations.front().condition + ")");
}

}  // namespace

FiniteAlgebra gen_gn(int n, bool amend_neg) {
  if (n < 1) throw AlgebraError("BAD-ARGUMENT", "gen_gn needs n >= 1");
  FiniteAlgebra a;
  a.name = "G" + std::to_string(n);
  if (n == 1) {
    a.n = 2;
    a.elems = {"bot", "top"};
    a.meet = std::vector<int>{0, 0, 0, 1};
    a.join = std::vector<int>{0, 1, 1, 1};
    a.mult = std::vector<int>{0, 0, 0, 1};
    a.one = 1;
    a.zero = 0;
    a.top = 1;
    a.bot = 0;
    a.neg = std::vector<int>{1, 0};
    a.bang = std::vector<int>{0, 1};
    std::vector<int> imp(4);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        imp[x * 2 + y] = (*a.neg)[a.ml(x, (*a.neg)[y])];
    a.imp = std::move(imp);
    return a;
  }
  int sz = n + 2;
  int bot = 0, one = 1, zero = n, top = n + 1;
  a.n = sz;
  a.elems.resize(sz);
  a.elems[bot] = "bot";
  a.elems[one] = "one";
  a.elems[zero] = "zero";
  a.elems[top] = "top";
  for (int i = 2; i < n; ++i) a.elems[i] = "a" + std::to_string(i + 1);
  auto is_atom = [&](int x) { return x != bot && x != top; };

  std::vector<int> meet(sz * sz), join(sz * sz);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      if (x == y) { meet[x * sz + y] = x; join[x * sz + y] = x; continue; }
      if (x == bot || y == top) { meet[x * sz + y] = x; join[x * sz + y] = y; continue; }
      if (y == bot || x == top) { meet[x * sz + y] = y; join[x * sz + y] = x; continue; }
      meet[x * sz + y] = bot;   // distinct atoms
      join[x * sz + y] = top;
    }
  a.meet = std::move(meet);
  a.join = std::move(join);

  std::vector<int> mult(sz * sz);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      int v;
      if (x == bot || y == bot) v = bot;
      else if (x == one) v = y;
      else if (y == one) v = x;
      else if (x == y && is_atom(x) && x != zero) v = bot;  // free atoms square to bot
      else v = top;
      mult[x * sz + y] = v;
    }
  a.mult = std::move(mult);

  std::vector<int> neg(sz);
  neg[bot] = top;
  neg[top] = bot;
  neg[one] = amend_neg ? zero : bot;
  neg[zero] = one;
  for (int i = 2; i < n; ++i) neg[i] = i;
  a.neg = std::move(neg);

  std::vector<int> imp(sz * sz);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      imp[x * sz + y] = (*a.neg)[a.ml(x, (*a.neg)[y])];
  a.imp = std::move(imp);

  std::vector<int> bang(sz, bot);
  bang[one] = one;
  bang[top] = one;
  a.bang = std::move(bang);

  a.one = one;
  a.zero = zero;
  a.top = top;
  a.bot = bot;
  return a;
}

std::vector<FiniteAlgebra> repair_search(int n, const RepairSpec& spec) {
  if (n > 4) throw AlgebraError("SIZE-LIMIT", "repair_search limited to n <= 4");
  FiniteAlgebra base = gen_gn(n, true);
  int sz = base.n;

  // normalize unfrozen cells to ordered pairs i <= j
  std::set<std::pair<int, int>> cells;
  for (auto [i, j] : spec.unfrozen_mult) {
    if (i < 0 || i >= sz || j < 0 || j >= sz)
      throw AlgebraError("BAD-ARGUMENT", "unfrozen cell out of range");
    cells.insert({std::min(i, j), std::max(i, j)});
  }
  std::vector<std::pair<int, int>> cellv(cells.begin(), cells.end());

  long long mult_combos = 1;
  for (size_t i = 0; i < cellv.size(); ++i) mult_combos *= sz;
  long long neg_combos = 1;
  if (spec.unfrozen_neg)
    for (int i = 0; i < sz; ++i) neg_combos *= sz;
  if (mult_combos > (1 << 20) || mult_combos * neg_combos > (1 << 24))
    throw AlgebraError("SIZE-LIMIT", "too many unfrozen cells");

  std::map<std::string, FiniteAlgebra> found;
  for (long long mc = 0; mc < mult_combos; ++mc) {
    FiniteAlgebra cand = base;
    cand.imp.reset();
    long long m = mc;
    for (auto [i, j] : cellv) {
      int v = (int)(m % sz);
      m /= sz;
      (*cand.mult)[i * sz + j] = v;
      (*cand.mult)[j * sz + i] = v;
    }
    for (long long nc = 0; nc < neg_combos; ++nc) {
      FiniteAlgebra cand2 = cand;
      if (spec.unfrozen_neg) {
        long long t = nc;
        for (int i = 0; i < sz; ++i) {
          (*cand2.neg)[i] = (int)(t % sz);
          t /= sz;
        }
      }
      try {
        cand2.imp = residual_from_mult(cand2);
      } catch (const AlgebraError&) {
        continue;  // no residual, not a candidate
      }
      if (!check_profile(cand2, Profile::BoundedGirale).pass) continue;
      FiniteAlgebra canon = canonical_form(cand2);
      canon.name = base.name + "r";
      found.emplace(canonical_key(cand2), std::move(canon));
    }
  }
  std::vector<FiniteAlgebra> out;
  int idx = 0;
  for (auto& [key, alg] : found) {
    alg.name = base.name + "r" + std::to_string(idx++);
    out.push_back(std::move(alg));
  }
  return out;
}

bool valid_modality_subset(const FiniteAlgebra& a, Subset h, std::string* why) {
  auto reject = [&](const std::string& r) {
    if (why) *why = r;
    return false;
  };
  if (!a.one || !a.meet || !a.mult)
    throw AlgebraError("MISSING-TABLE", "modality subsets need meet, mult and one");
  Order ord = order_from_meet(a);
  int n = a.n;
  if (!bit(h, *a.one)) return reject("ONE-NOT-IN-H");
  for (int x = 0; x < n; ++x) {
    if (!bit(h, x)) continue;
    if (!ord.leq(x, *a.one)) return reject("H-NOT-BELOW-ONE");
    if (a.ml(x, x) != x) return reject("H-NOT-IDEMPOTENT");
    for (int y = 0; y < n; ++y)
      if (bit(h, y) && !bit(h, a.ml(x, y))) return reject("H-NOT-MULT-CLOSED");
  }
  for (int x = 0; x < n; ++x) {
    Subset below = 0;
    for (int b = 0; b < n; ++b)
      if (bit(h, b) && ord.leq(b, x)) below |= 1u << b;
    if (below == 0) return reject("NO-SUP");
    if (a.join) {
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (bit(below, p) && bit(below, q) && !bit(below, a.jn(p, q)))
            return reject("H-RESTRICTION-NOT-JOIN-CLOSED");
    }
  }
  return true;
}

FiniteAlgebra induce_modality(const FiniteAlgebra& a, Subset h) {
  std::string why;
  if (!valid_modality_subset(a, h, &why)) {
    if (why == "NO-SUP")
      throw AlgebraError("NO-SUP", "some restriction of H is empty");
    throw AlgebraError("INVALID-H", why);
  }
  Order ord = order_from_meet(a);
  int n = a.n;
  FiniteAlgebra out = a;
  std::vector<int> bang(n);
  for (int x = 0; x < n; ++x) {
    int best = -1;
    for (int b = 0; b < n; ++b) {
      if (!bit(h, b) || !ord.leq(b, x)) continue;
      if (best < 0 || ord.leq(best, b)) best = b;
    }
    // join-closure of the restriction makes the max unique
    bang[x] = best;
  }
  out.bang = std::move(bang);
  CheckReport r = check_profile(out, Profile::Girale);
  if (!r.pass)
    throw AlgebraError("PROFILE-FAIL", "induced modality does not satisfy the girale laws (" +
                                           r.violations.front().condition + ")");
  return out;
}

std::vector<Subset> rc_heyting_subsets(const FiniteAlgebra& a) {
  require_profile(a, Profile::Girard);
  int n = a.n;
  if (n > 20) throw AlgebraError("SIZE-LIMIT", "carrier too large");
  Order ord = order_from_meet(a);
  // candidates live inside the idempotents below 1
  Subset pool = 0;
  for (int x = 0; x < n; ++x)
    if (ord.leq(x, *a.one) && a.ml(x, x) == x) pool |= 1u << x;
  std::vector<int> poolv;
  for (int x = 0; x < n; ++x)
    if (bit(pool, x)) poolv.push_back(x);
  std::vector<Subset> out;
  for (Subset pick = 0; pick < (1u << poolv.size()); ++pick) {
    Subset h = 0;
    for (size_t i = 0; i < poolv.size(); ++i)
      if (bit(pick, (int)i)) h |= 1u << poolv[i];
    if (valid_modality_subset(a, h)) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HeytResult heyt(const FiniteAlgebra& a) {
  require_profile(a, Profile::Girale);
  int n = a.n;
  std::vector<int> image;
  std::vector<int> to_h(n, -1);
  for (int x = 0; x < n; ++x) {
    int v = a.bg(x);
    if (to_h[v] < 0) {
      to_h[v] = 0;  // mark
      image.push_back(v);
    }
  }
  std::sort(image.begin(), image.end());
  int m = (int)image.size();
  std::fill(to_h.begin(), to_h.end(), -1);
  for (int i = 0; i < m; ++i) to_h[image[i]] = i;

  auto inside = [&](int v, const char* what) {
    if (to_h[v] < 0)
      throw AlgebraError("HEYT-NOT-CLOSED",
                         std::string("bang image not closed under ") + what +
                             " at " + a.label(v));
    return to_h[v];
  };

  FiniteAlgebra h;
  h.name = "Heyt(" + a.name + ")";
  h.n = m;
  h.elems.resize(m);
  for (int i = 0; i < m; ++i) h.elems[i] = a.label(image[i]);
  std::vector<int> meet(m * m), join(m * m), imp(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      meet[i * m + j] = inside(a.mt(image[i], image[j]), "meet");
      join[i * m + j] = inside(a.jn(image[i], image[j]), "join");
      imp[i * m + j] = inside(a.bg(a.im(image[i], image[j])), "imp");
    }
  h.meet = meet;
  h.join = std::move(join);
  h.imp = std::move(imp);
  h.mult = std::move(meet);  // Heyting fusion is the meet
  h.one = to_h[*a.one];
  Order hord = order_from_meet(h);
  h.bot = order_minimum(hord);
  h.top = h.one;
  CheckReport r = check_profile(h, Profile::Heyting);
  if (!r.pass)
    throw AlgebraError("PROFILE-FAIL", "bang image is not a Heyting algebra (" +
                                           r.violations.front().condition + ")");
  return {std::move(h), std::move(image)};
}

bool boolean_girale_check(const FiniteAlgebra& a) {
  HeytResult h = heyt(a);
  const FiniteAlgebra& hh = h.algebra;
  for (int u = 0; u < hh.n; ++u) {
    int nu = hh.im(u, *hh.bot);
    if (hh.im(nu, *hh.bot) != u) return false;
  }
  return true;
}

CheckReport heyt_con_iso(const FiniteAlgebra& a) {
  CheckReport r;
  auto add = [&](const std::string& cond) { r.violations.push_back({cond, {}, {}}); };
  HeytResult hr = heyt(a);
  const FiniteAlgebra& h = hr.algebra;

  auto fils_a = all_filters(a);
  auto fils_h = all_filters(h);
  std::set<Subset> fila_set(fils_a.begin(), fils_a.end());
  std::set<Subset> filh_set(fils_h.begin(), fils_h.end());

  if (fils_a.size() != fils_h.size()) add("HEYT-FIL-COUNT");

  auto down = [&](Subset fa) {  // restrict a filter of A to the bang image
    Subset g = 0;
    for (int i = 0; i < h.n; ++i)
      if (bit(fa, hr.image[i])) g |= 1u << i;
    return g;
  };
  auto up = [&](Subset fh) {  // generate a filter of A from one of Heyt(A)
    Subset x = 0;
    for (int i = 0; i < h.n; ++i)
      if (bit(fh, i)) x |= 1u << hr.image[i];
    return generate_filter(a, x);
  };

  for (Subset fa : fils_a) {
    Subset g = down(fa);
    if (!filh_set.count(g)) { add("HEYT-FIL-IMAGE-NOT-FILTER"); continue; }
    if (up(g) != fa) add("HEYT-FIL-ROUNDTRIP-A");
  }
  for (Subset fh : fils_h) {
    Subset fa = up(fh);
    if (!fila_set.count(fa)) { add("HEYT-FIL-GEN-NOT-FILTER"); continue; }
    if (down(fa) != fh) add("HEYT-FIL-ROUNDTRIP-H");
  }
  for (Subset f : fils_a)
    for (Subset g : fils_a)
      if (((f & g) == f) != ((down(f) & down(g)) == down(f))) add("HEYT-FIL-ORDER");

  r.pass = r.violations.empty();
  return r;
}

}  // namespace gira
