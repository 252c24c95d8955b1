#include <algorithm>
#include <map>

#include "gira/constructions.hpp"

namespace gira {

namespace {

bool bit(Subset s, int i) { return (s >> i) & 1u; }

std::string set_label(const FiniteAlgebra& a, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < a.n; ++i)
    if (bit(s, i)) {
      if (!first) out += ",";
      out += a.label(i);
      first = false;
    }
  return out + "}";
}

void require_pass(const FiniteAlgebra& a, Profile p, const char* who) {
  CheckReport r = check_profile(a, p);
  if (!r.pass)
    throw AlgebraError("PRECONDITION", std::string(who) + " needs an algebra passing " +
                                           profile_name(p) + "; first violation: " +
                                           r.violations.front().condition);
}

}  // namespace

FrameCompletion frame_completion(const FiniteAlgebra& a, int cap) {
  require_pass(a, Profile::VL7, "frame_completion");
  if (a.n > cap)
    throw AlgebraError("SIZE-LIMIT", "frame_completion capped at size " + std::to_string(cap));
  Order ord = order_from_meet(a);
  int n = a.n;

  // semilattice filters: nonempty, up-closed, meet-closed subsets
  std::vector<Subset> filters;
  for (Subset s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!bit(s, x)) continue;
      for (int y = 0; y < n && ok; ++y) {
        if (ord.leq(x, y) && !bit(s, y)) ok = false;
        if (bit(s, y) && !bit(s, a.mt(x, y))) ok = false;
      }
    }
    if (ok) filters.push_back(s);
  }
  int nf = (int)filters.size();

  // hereditary families over the inclusion order of the filters
  std::vector<Subset> families;
  for (Subset x = 0; x < (1u << nf); ++x) {
    bool ok = true;
    for (int i = 0; i < nf && ok; ++i) {
      if (!bit(x, i)) continue;
      for (int j = 0; j < nf; ++j)
        if ((filters[i] & filters[j]) == filters[i] && !bit(x, j)) { ok = false; break; }
    }
    if (ok) families.push_back(x);
  }
  std::sort(families.begin(), families.end());
  int m = (int)families.size();
  std::map<Subset, int> family_index;
  for (int i = 0; i < m; ++i) family_index[families[i]] = i;

  auto lookup = [&](Subset fam, const char* what) {
    auto it = family_index.find(fam);
    if (it == family_index.end())
      throw AlgebraError("PROFILE-FAIL",
                         std::string("frame operation '") + what + "' left the family lattice");
    return it->second;
  };

  // R(F,G,H): a in F and a->b in G imply b in H
  std::vector<char> R((size_t)nf * nf * nf, 0);
  for (int fi = 0; fi < nf; ++fi)
    for (int gi = 0; gi < nf; ++gi)
      for (int hi = 0; hi < nf; ++hi) {
        bool holds = true;
        for (int x = 0; x < n && holds; ++x) {
          if (!bit(filters[fi], x)) continue;
          for (int y = 0; y < n; ++y)
            if (bit(filters[gi], a.im(x, y)) && !bit(filters[hi], y)) { holds = false; break; }
        }
        R[(fi * nf + gi) * nf + hi] = holds;
      }

  FiniteAlgebra d;
  d.name = "D(" + a.name + ")";
  d.n = m;
  d.elems.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string lbl = "{";
    bool first = true;
    for (int j = 0; j < nf; ++j)
      if (bit(families[i], j)) {
        if (!first) lbl += ",";
        lbl += set_label(a, filters[j]);
        first = false;
      }
    d.elems[i] = lbl + "}";
  }

  std::vector<int> dmeet(m * m), djoin(m * m), dmult(m * m), dimp(m * m);
  for (int xi = 0; xi < m; ++xi)
    for (int yi = 0; yi < m; ++yi) {
      dmeet[xi * m + yi] = lookup(families[xi] & families[yi], "meet");
      djoin[xi * m + yi] = lookup(families[xi] | families[yi], "join");
      Subset prod = 0;
      for (int hi = 0; hi < nf; ++hi) {
        bool in = false;
        for (int fi = 0; fi < nf && !in; ++fi) {
          if (!bit(families[yi], fi)) continue;
          for (int gi = 0; gi < nf; ++gi)
            if (bit(families[xi], gi) && R[(fi * nf + gi) * nf + hi]) { in = true; break; }
        }
        if (in) prod |= 1u << hi;
      }
      dmult[xi * m + yi] = lookup(prod, "mult");
      Subset res = 0;
      for (int hi = 0; hi < nf; ++hi) {
        bool in = true;
        for (int fi = 0; fi < nf && in; ++fi)
          for (int gi = 0; gi < nf; ++gi)
            if (R[(fi * nf + hi) * nf + gi] && bit(families[xi], fi) &&
                !bit(families[yi], gi)) { in = false; break; }
        if (in) res |= 1u << hi;
      }
      dimp[xi * m + yi] = lookup(res, "imp");
    }
  d.meet = std::move(dmeet);
  d.join = std::move(djoin);
  d.mult = std::move(dmult);
  d.imp = std::move(dimp);

  Subset one_fam = 0;
  for (int i = 0; i < nf; ++i)
    if (bit(filters[i], *a.one)) one_fam |= 1u << i;
  d.one = lookup(one_fam, "one");

  CheckReport crl = check_profile(d, Profile::CRL);
  if (!crl.pass)
    throw AlgebraError("PROFILE-FAIL", "frame completion fails CRL: " +
                                           crl.violations.front().condition);

  FrameCompletion out;
  out.filters = filters;
  out.families = families;
  out.algebra = std::move(d);
  out.embedding.resize(n);
  auto& rep = out.embedding_report;
  auto add = [&](const std::string& cond, std::vector<int> w = {}) {
    rep.violations.push_back({cond, std::move(w), {}});
  };
  for (int x = 0; x < n; ++x) {
    Subset fam = 0;
    for (int i = 0; i < nf; ++i)
      if (bit(filters[i], x)) fam |= 1u << i;
    out.embedding[x] = lookup(fam, "embedding");
  }
  const FiniteAlgebra& dd = out.algebra;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x < y && out.embedding[x] == out.embedding[y]) add("EMB-INJECTIVE", {x, y});
      if (out.embedding[a.mt(x, y)] != dd.mt(out.embedding[x], out.embedding[y]))
        add("EMB-MEET", {x, y});
      if (out.embedding[a.im(x, y)] != dd.im(out.embedding[x], out.embedding[y]))
        add("EMB-IMP", {x, y});
      if (a.join &&
          out.embedding[a.jn(x, y)] != dd.jn(out.embedding[x], out.embedding[y]))
        add("EMB-JOIN", {x, y});
    }
  if (out.embedding[*a.one] != *dd.one) add("EMB-ONE");
  rep.pass = rep.violations.empty();
  return out;
}

PhaseCompletion phase_completion(const FiniteAlgebra& a, int cap) {
  require_pass(a, Profile::Girard, "phase_completion");
  if (a.n > cap)
    throw AlgebraError("SIZE-LIMIT", "phase_completion capped at size " + std::to_string(cap));
  Order ord = order_from_meet(a);
  int n = a.n;
  int zero = *a.zero;
  auto neg_el = [&](int x) { return a.im(x, zero); };

  Subset full = (Subset)((1u << n) - 1);
  // polar: N(S) = {b : ~b >= a for all a in S}
  auto polar = [&](Subset s) {
    Subset out = 0;
    for (int b = 0; b < n; ++b) {
      bool in = true;
      for (int x = 0; x < n && in; ++x)
        if (bit(s, x) && !ord.leq(x, neg_el(b))) in = false;
      if (in) out |= 1u << b;
    }
    return out;
  };
  auto close = [&](Subset s) { return polar(polar(s)); };

  std::vector<Subset> closed;
  for (Subset s = 0; s <= full; ++s) {
    if (close(s) == s) closed.push_back(s);
    if (s == full) break;
  }
  std::sort(closed.begin(), closed.end());
  int m = (int)closed.size();
  std::map<Subset, int> index;
  for (int i = 0; i < m; ++i) index[closed[i]] = i;
  auto lookup = [&](Subset s, const char* what) {
    auto it = index.find(s);
    if (it == index.end())
      throw AlgebraError("PROFILE-FAIL",
                         std::string("phase operation '") + what + "' left the closed sets");
    return it->second;
  };

  FiniteAlgebra c;
  c.name = "C(" + a.name + ")";
  c.n = m;
  c.elems.resize(m);
  for (int i = 0; i < m; ++i) c.elems[i] = set_label(a, closed[i]);

  std::vector<int> cneg(m);
  for (int i = 0; i < m; ++i) cneg[i] = lookup(polar(closed[i]), "neg");

  std::vector<int> cmeet(m * m), cjoin(m * m), cmult(m * m), cimp(m * m);
  for (int xi = 0; xi < m; ++xi)
    for (int yi = 0; yi < m; ++yi) {
      cmeet[xi * m + yi] = lookup(closed[xi] & closed[yi], "meet");
      cjoin[xi * m + yi] = lookup(close(closed[xi] | closed[yi]), "join");
      Subset prod = 0;
      for (int x = 0; x < n; ++x)
        if (bit(closed[xi], x))
          for (int y = 0; y < n; ++y)
            if (bit(closed[yi], y)) prod |= 1u << a.ml(x, y);
      cmult[xi * m + yi] = lookup(close(prod), "mult");
    }
  for (int xi = 0; xi < m; ++xi)
    for (int yi = 0; yi < m; ++yi)
      cimp[xi * m + yi] = cneg[cmult[xi * m + cneg[yi]]];
  c.meet = std::move(cmeet);
  c.join = std::move(cjoin);
  c.mult = std::move(cmult);
  c.imp = std::move(cimp);
  c.neg = std::move(cneg);

  Subset one_set = close(1u << *a.one);
  c.one = lookup(one_set, "one");
  c.zero = lookup(polar(one_set), "zero");
  c.top = lookup(full, "top");
  c.bot = lookup(polar(full), "bot");

  CheckReport prof = check_profile(c, Profile::BoundedGirard);
  if (!prof.pass)
    throw AlgebraError("PROFILE-FAIL", "phase completion fails bounded-girard: " +
                                           prof.violations.front().condition);

  PhaseCompletion out;
  out.closed = closed;
  out.algebra = std::move(c);
  out.embedding.resize(n);
  auto& rep = out.embedding_report;
  auto add = [&](const std::string& cond, std::vector<int> w = {}) {
    rep.violations.push_back({cond, std::move(w), {}});
  };
  const FiniteAlgebra& cc = out.algebra;
  for (int x = 0; x < n; ++x) {
    Subset img = close(1u << x);
    Subset princ = 0;  // (x], the principal down-set
    for (int y = 0; y < n; ++y)
      if (ord.leq(y, x)) princ |= 1u << y;
    if (img != princ) add("PHASE-PRINCIPAL", {x});
    out.embedding[x] = lookup(img, "embedding");
  }
  for (int x = 0; x < n; ++x) {
    if (cc.ng(out.embedding[x]) != out.embedding[neg_el(x)]) add("EMB-NEG", {x});
    for (int y = 0; y < n; ++y) {
      if (x < y && out.embedding[x] == out.embedding[y]) add("EMB-INJECTIVE", {x, y});
      if (out.embedding[a.mt(x, y)] != cc.mt(out.embedding[x], out.embedding[y]))
        add("EMB-MEET", {x, y});
      if (out.embedding[a.jn(x, y)] != cc.jn(out.embedding[x], out.embedding[y]))
        add("EMB-JOIN", {x, y});
      if (out.embedding[a.ml(x, y)] != cc.ml(out.embedding[x], out.embedding[y]))
        add("EMB-MULT", {x, y});
      if (out.embedding[a.im(x, y)] != cc.im(out.embedding[x], out.embedding[y]))
        add("EMB-IMP", {x, y});
    }
  }
  if (out.embedding[*a.one] != *cc.one) add("EMB-ONE");
  if (out.embedding[zero] != *cc.zero) add("EMB-ZERO");
  if (a.top && out.embedding[*a.top] != *cc.top) add("EMB-TOP");
  if (a.bot && out.embedding[*a.bot] != *cc.bot) add("EMB-BOT");
  rep.pass = rep.violations.empty();
  return out;
}

CheckReport conservativity_check(const FiniteAlgebra& a) {
  CheckReport r;
  try {
    PhaseCompletion pc = phase_completion(a);
    for (auto& v : pc.embedding_report.violations) r.violations.push_back(v);
    const FiniteAlgebra& c = pc.algebra;
    Order ord = order_from_meet(c);
    Subset h = 0;
    for (int x = 0; x < c.n; ++x)
      if (ord.leq(x, *c.one) && c.ml(x, x) == x) h |= 1u << x;
    FiniteAlgebra g = induce_modality(c, h);  // girale laws checked inside
    CheckReport prof = check_profile(g, Profile::BoundedGirale);
    for (auto& v : prof.violations) r.violations.push_back(v);
  } catch (const AlgebraError& e) {
    r.violations.push_back({std::string("CONSTRUCTION: ") + e.what(), {}, {}});
  }
  r.pass = r.violations.empty();
  return r;
}

}  // namespace gira
