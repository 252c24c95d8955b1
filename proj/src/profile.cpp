#include "gira/profile.hpp"

#include <functional>

#include "gira/parallel.hpp"

namespace gira {

const char* profile_name(Profile p) {
  switch (p) {
    case Profile::PosetLattice: return "poset-lattice";
    case Profile::GS: return "gs";
    case Profile::GL: return "gl";
    case Profile::VL7: return "v-l7";
    case Profile::CRL: return "crl";
    case Profile::Girard: return "girard";
    case Profile::BoundedGirard: return "bounded-girard";
    case Profile::Girale: return "girale";
    case Profile::BoundedGirale: return "bounded-girale";
    case Profile::LR: return "lr";
    case Profile::Heyting: return "heyting";
  }
  return "?";
}

std::optional<Profile> profile_from_name(const std::string& s) {
  for (Profile p : all_profiles())
    if (s == profile_name(p)) return p;
  return std::nullopt;
}

std::vector<Profile> all_profiles() {
  return {Profile::PosetLattice, Profile::GS,      Profile::GL,
          Profile::VL7,          Profile::CRL,     Profile::Girard,
          Profile::BoundedGirard, Profile::Girale, Profile::BoundedGirale,
          Profile::LR,           Profile::Heyting};
}

ProfileNeeds profile_needs(Profile p) {
  ProfileNeeds r;
  switch (p) {
    case Profile::PosetLattice:
      r.meet = r.join = true;
      break;
    case Profile::GS:
    case Profile::VL7:
      r.meet = r.imp = r.one = true;
      break;
    case Profile::GL:
      r.meet = r.join = r.imp = r.one = true;
      break;
    case Profile::CRL:
      r.meet = r.join = r.mult = r.imp = r.one = true;
      break;
    case Profile::Girard:
      r.meet = r.join = r.mult = r.imp = r.one = r.zero = true;
      break;
    case Profile::BoundedGirard:
      r.meet = r.join = r.mult = r.imp = r.one = r.zero = r.top = true;
      break;
    case Profile::Girale:
      r.meet = r.join = r.mult = r.imp = r.one = r.zero = r.bang = true;
      break;
    case Profile::BoundedGirale:
      r.meet = r.join = r.mult = r.imp = r.one = r.zero = r.bang = r.top = true;
      break;
    case Profile::LR:
      r.meet = r.join = r.imp = r.neg = r.top = r.bot = true;
      break;
    case Profile::Heyting:
      r.meet = r.join = r.imp = r.one = true;
      break;
  }
  return r;
}

namespace {

// One equational/quasiequational condition, scanned over all tuples of the
// given arity in lexicographic order.
struct Cond {
  std::string id;
  int arity;
  bool needs_order;
  // t: tuple; vals: out parameter, the two evaluated sides (or -1).
  std::function<bool(const int* t, int* vals)> holds;
};

struct Checker {
  const FiniteAlgebra& a;
  std::optional<Order> ord;
  std::vector<Cond> conds;

  bool leq(int x, int y) const { return ord->leq(x, y); }

  void add(std::string id, int arity, bool needs_order,
           std::function<bool(const int*, int*)> f) {
    conds.push_back({std::move(id), arity, needs_order, std::move(f)});
  }

  void require_table(bool present, const char* what) {
    if (!present)
      throw AlgebraError("MISSING-TABLE", std::string(what) + " table required by profile");
  }
  void require_const(bool present, const char* what) {
    if (!present)
      throw AlgebraError("MISSING-CONSTANT", std::string(what) + " required by profile");
  }

  void meet_laws() {
    add("MEET-IDEM", 1, false, [&](const int* t, int* v) {
      v[0] = a.mt(t[0], t[0]); v[1] = t[0];
      return v[0] == v[1];
    });
    add("MEET-COMM", 2, false, [&](const int* t, int* v) {
      v[0] = a.mt(t[0], t[1]); v[1] = a.mt(t[1], t[0]);
      return v[0] == v[1];
    });
    add("MEET-ASSOC", 3, false, [&](const int* t, int* v) {
      v[0] = a.mt(a.mt(t[0], t[1]), t[2]); v[1] = a.mt(t[0], a.mt(t[1], t[2]));
      return v[0] == v[1];
    });
  }

  void join_laws() {
    add("JOIN-IDEM", 1, false, [&](const int* t, int* v) {
      v[0] = a.jn(t[0], t[0]); v[1] = t[0];
      return v[0] == v[1];
    });
    add("JOIN-COMM", 2, false, [&](const int* t, int* v) {
      v[0] = a.jn(t[0], t[1]); v[1] = a.jn(t[1], t[0]);
      return v[0] == v[1];
    });
    add("JOIN-ASSOC", 3, false, [&](const int* t, int* v) {
      v[0] = a.jn(a.jn(t[0], t[1]), t[2]); v[1] = a.jn(t[0], a.jn(t[1], t[2]));
      return v[0] == v[1];
    });
    // meet and join must induce the same order: a/\b=a iff a\/b=b
    add("ORDER-CONSISTENT", 2, false, [&](const int* t, int* v) {
      v[0] = a.mt(t[0], t[1]); v[1] = a.jn(t[0], t[1]);
      return (a.mt(t[0], t[1]) == t[0]) == (a.jn(t[0], t[1]) == t[1]);
    });
  }

  void gs_laws() {
    int one = *a.one;
    add("L1", 1, false, [&, one](const int* t, int* v) {
      v[0] = a.im(one, t[0]); v[1] = t[0];
      return v[0] == v[1];
    });
    add("L2", 1, true, [&, one](const int* t, int* v) {
      v[0] = a.im(t[0], t[0]); v[1] = one;
      return leq(one, a.im(t[0], t[0]));
    });
    add("L3", 3, false, [&](const int* t, int* v) {
      v[0] = a.mt(a.im(t[0], t[1]), a.im(t[0], t[2]));
      v[1] = a.im(t[0], a.mt(t[1], t[2]));
      return v[0] == v[1];
    });
    add("L4", 3, true, [&](const int* t, int* v) {
      v[0] = a.im(t[0], t[1]);
      v[1] = a.im(a.im(t[2], t[0]), a.im(t[2], t[1]));
      return leq(v[0], v[1]);
    });
    add("L5", 3, true, [&](const int* t, int* v) {
      v[0] = a.im(t[0], a.im(t[1], t[2]));
      v[1] = a.im(t[1], a.im(t[0], t[2]));
      return leq(v[0], v[1]);
    });
    add("L6", 2, true, [&, one](const int* t, int* v) {
      v[0] = a.im(t[0], t[1]); v[1] = a.im(t[1], t[0]);
      if (leq(one, v[0]) && leq(one, v[1])) return t[0] == t[1];
      return true;
    });
  }

  void gl_join_law() {
    add("GL-JOIN", 3, false, [&](const int* t, int* v) {
      v[0] = a.mt(a.im(t[0], t[2]), a.im(t[1], t[2]));
      v[1] = a.im(a.jn(t[0], t[1]), t[2]);
      return v[0] == v[1];
    });
  }

  void l7_law() {
    int one = *a.one;
    add("L7", 2, true, [&, one](const int* t, int* v) {
      v[0] = t[0];
      v[1] = a.im(a.mt(a.im(t[0], t[1]), one), t[1]);
      return leq(v[0], v[1]);
    });
  }

  void monoid_laws() {
    int one = *a.one;
    add("MULT-COMM", 2, false, [&](const int* t, int* v) {
      v[0] = a.ml(t[0], t[1]); v[1] = a.ml(t[1], t[0]);
      return v[0] == v[1];
    });
    add("MULT-ASSOC", 3, false, [&](const int* t, int* v) {
      v[0] = a.ml(a.ml(t[0], t[1]), t[2]); v[1] = a.ml(t[0], a.ml(t[1], t[2]));
      return v[0] == v[1];
    });
    add("MULT-UNIT", 1, false, [&, one](const int* t, int* v) {
      v[0] = a.ml(one, t[0]); v[1] = t[0];
      return v[0] == v[1];
    });
    add("RESIDUATION", 3, true, [&](const int* t, int* v) {
      v[0] = a.ml(t[0], t[1]); v[1] = a.im(t[1], t[2]);
      return leq(a.ml(t[0], t[1]), t[2]) == leq(t[0], a.im(t[1], t[2]));
    });
  }

  void girard_laws() {
    int zero = *a.zero;
    add("INVOLUTION", 1, false, [&, zero](const int* t, int* v) {
      v[0] = a.im(a.im(t[0], zero), zero); v[1] = t[0];
      return v[0] == v[1];
    });
    if (a.neg) {
      add("NEG-DEF", 1, false, [&, zero](const int* t, int* v) {
        v[0] = a.ng(t[0]); v[1] = a.im(t[0], zero);
        return v[0] == v[1];
      });
      add("NEG-INVOLUTIVE", 1, false, [&](const int* t, int* v) {
        v[0] = a.ng(a.ng(t[0])); v[1] = t[0];
        return v[0] == v[1];
      });
    }
  }

  void bounded_laws() {
    int top = *a.top;
    int zero = a.zero ? *a.zero : -1;
    add("TOP-MAX", 1, true, [&, top](const int* t, int* v) {
      v[0] = t[0]; v[1] = top;
      return leq(t[0], top);
    });
    if (zero >= 0) {
      int derived_bot = a.im(top, zero);
      if (a.bot) {
        add("BOT-DEF", 0, false, [&, derived_bot](const int*, int* v) {
          v[0] = *a.bot; v[1] = derived_bot;
          return v[0] == v[1];
        });
      }
      add("BOT-MIN", 1, true, [&, derived_bot](const int* t, int* v) {
        v[0] = derived_bot; v[1] = t[0];
        return leq(derived_bot, t[0]);
      });
    } else if (a.bot) {
      add("BOT-MIN", 1, true, [&](const int* t, int* v) {
        v[0] = *a.bot; v[1] = t[0];
        return leq(*a.bot, t[0]);
      });
    }
  }

  void girale_laws() {
    int one = *a.one;
    add("G1", 0, false, [&, one](const int*, int* v) {
      v[0] = a.bg(one); v[1] = one;
      return v[0] == v[1];
    });
    add("G2", 1, true, [&, one](const int* t, int* v) {
      v[0] = a.bg(t[0]); v[1] = a.mt(t[0], one);
      return leq(a.bg(t[0]), a.mt(t[0], one));
    });
    add("G3", 2, false, [&](const int* t, int* v) {
      v[0] = a.ml(a.bg(t[0]), a.bg(t[1])); v[1] = a.bg(a.mt(t[0], t[1]));
      return v[0] == v[1];
    });
    add("G4", 1, false, [&](const int* t, int* v) {
      v[0] = a.bg(a.bg(t[0])); v[1] = a.bg(t[0]);
      return v[0] == v[1];
    });
  }

  void heyting_laws() {
    int one = *a.one;
    add("INTEGRAL", 1, true, [&, one](const int* t, int* v) {
      v[0] = t[0]; v[1] = one;
      return leq(t[0], one);
    });
    add("MEET-RESIDUATION", 3, true, [&](const int* t, int* v) {
      v[0] = a.mt(t[0], t[1]); v[1] = a.im(t[1], t[2]);
      return leq(a.mt(t[0], t[1]), t[2]) == leq(t[0], a.im(t[1], t[2]));
    });
    if (a.mult) {
      add("MULT-IS-MEET", 2, false, [&](const int* t, int* v) {
        v[0] = a.ml(t[0], t[1]); v[1] = a.mt(t[0], t[1]);
        return v[0] == v[1];
      });
    }
  }

  void lr_laws() {
    add("NEG-INVOLUTIVE", 1, false, [&](const int* t, int* v) {
      v[0] = a.ng(a.ng(t[0])); v[1] = t[0];
      return v[0] == v[1];
    });
    add("NEG-DEMORGAN", 2, false, [&](const int* t, int* v) {
      v[0] = a.ng(a.jn(t[0], t[1])); v[1] = a.mt(a.ng(t[0]), a.ng(t[1]));
      if (v[0] != v[1]) return false;
      v[0] = a.ng(a.mt(t[0], t[1])); v[1] = a.jn(a.ng(t[0]), a.ng(t[1]));
      return v[0] == v[1];
    });
    add("LR-INEQ", 3, true, [&](const int* t, int* v) {
      v[0] = a.im(a.mt(a.im(t[0], t[0]), a.im(t[1], t[1])), t[2]);
      v[1] = t[2];
      return leq(v[0], v[1]);
    });
    if (a.mult) {
      add("MULT-COMM", 2, false, [&](const int* t, int* v) {
        v[0] = a.ml(t[0], t[1]); v[1] = a.ml(t[1], t[0]);
        return v[0] == v[1];
      });
      add("MULT-ASSOC", 3, false, [&](const int* t, int* v) {
        v[0] = a.ml(a.ml(t[0], t[1]), t[2]); v[1] = a.ml(t[0], a.ml(t[1], t[2]));
        return v[0] == v[1];
      });
      add("CONTRAPOSITION", 2, false, [&](const int* t, int* v) {
        v[0] = a.ng(a.ml(t[0], a.ng(t[1]))); v[1] = a.im(t[0], t[1]);
        return v[0] == v[1];
      });
    }
  }
};

}  // namespace

CheckReport check_profile(const FiniteAlgebra& a, Profile p) {
  a.validate_shape();
  ProfileNeeds need = profile_needs(p);
  Checker ck{a, std::nullopt, {}};

  ck.require_table(a.meet.has_value(), "meet");
  if (need.join) ck.require_table(a.join.has_value(), "join");
  if (need.mult) ck.require_table(a.mult.has_value(), "mult");
  if (need.imp) ck.require_table(a.imp.has_value(), "imp");
  if (need.neg) ck.require_table(a.neg.has_value(), "neg");
  if (need.bang) ck.require_table(a.bang.has_value(), "bang");
  if (need.one) ck.require_const(a.one.has_value(), "one");
  if (need.zero) ck.require_const(a.zero.has_value(), "zero");
  if (need.top) ck.require_const(a.top.has_value(), "top");
  if (need.bot) ck.require_const(a.bot.has_value(), "bot");

  ck.meet_laws();
  if (a.join) ck.join_laws();

  switch (p) {
    case Profile::PosetLattice:
      break;
    case Profile::GS:
      ck.gs_laws();
      break;
    case Profile::GL:
      ck.gs_laws();
      ck.gl_join_law();
      break;
    case Profile::VL7:
      ck.gs_laws();
      ck.l7_law();
      break;
    case Profile::CRL:
      ck.monoid_laws();
      break;
    case Profile::Girard:
      ck.monoid_laws();
      ck.girard_laws();
      break;
    case Profile::BoundedGirard:
      ck.monoid_laws();
      ck.girard_laws();
      ck.bounded_laws();
      break;
    case Profile::Girale:
      ck.monoid_laws();
      ck.girard_laws();
      ck.girale_laws();
      break;
    case Profile::BoundedGirale:
      ck.monoid_laws();
      ck.girard_laws();
      ck.bounded_laws();
      ck.girale_laws();
      break;
    case Profile::LR:
      ck.lr_laws();
      break;
    case Profile::Heyting:
      ck.heyting_laws();
      break;
  }

  ck.ord = try_order_from_meet(a);

  CheckReport report;
  int n = a.n;
  for (const Cond& c : ck.conds) {
    if (c.needs_order && !ck.ord) continue;  // meet violations already reported
    long long total = 1;
    for (int i = 0; i < c.arity; ++i) total *= n;
    auto decode = [&](long long idx, int* t) {
      for (int i = c.arity - 1; i >= 0; --i) { t[i] = (int)(idx % n); idx /= n; }
    };
    long long bad = par::first_fail(total, [&](long long idx) {
      int t[4] = {0, 0, 0, 0};
      int v[2];
      decode(idx, t);
      return c.holds(t, v);
    });
    if (bad >= 0) {
      int t[4] = {0, 0, 0, 0};
      int v[2] = {-1, -1};
      decode(bad, t);
      c.holds(t, v);
      Violation viol;
      viol.condition = c.id;
      viol.witness.assign(t, t + c.arity);
      if (v[0] >= 0) viol.values = {v[0], v[1]};
      report.violations.push_back(std::move(viol));
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace gira
