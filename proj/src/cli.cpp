#include "gira/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gira/algebra_io.hpp"
#include "gira/congruence.hpp"
#include "gira/constructions.hpp"
#include "gira/enumerate.hpp"
#include "gira/eval.hpp"
#include "gira/hilbert.hpp"
#include "gira/iso.hpp"
#include "gira/parallel.hpp"
#include "gira/parser.hpp"
#include "gira/profile.hpp"

namespace gira {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw AlgebraError("IO", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> labels_of(const FiniteAlgebra& a, const std::vector<int>& idxs) {
  std::vector<std::string> out;
  for (int i : idxs) out.push_back(a.label(i));
  return out;
}

json violations_json(const FiniteAlgebra& a, const CheckReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations) {
    json jv;
    jv["condition"] = viol.condition;
    jv["witness"] = labels_of(a, viol.witness);
    if (!viol.values.empty()) jv["values"] = labels_of(a, viol.values);
    v.push_back(jv);
  }
  return v;
}

void print_report(std::ostream& out, const FiniteAlgebra& a, const CheckReport& r) {
  for (const auto& viol : r.violations) {
    out << "  " << viol.condition;
    if (!viol.witness.empty()) {
      out << " at (";
      for (size_t i = 0; i < viol.witness.size(); ++i)
        out << (i ? "," : "") << a.label(viol.witness[i]);
      out << ")";
    }
    if (!viol.values.empty()) {
      out << " values (";
      for (size_t i = 0; i < viol.values.size(); ++i)
        out << (i ? "," : "") << a.label(viol.values[i]);
      out << ")";
    }
    out << "\n";
  }
}

std::string subset_label(const FiniteAlgebra& a, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < a.n; ++i)
    if ((s >> i) & 1u) {
      if (!first) out += ",";
      out += a.label(i);
      first = false;
    }
  return out + "}";
}

std::string partition_label(const FiniteAlgebra& a, const Partition& p) {
  std::string out;
  for (int leader = 0; leader < a.n; ++leader) {
    if (p[leader] != leader) continue;
    out += "{";
    bool first = true;
    for (int i = 0; i < a.n; ++i)
      if (p[i] == leader) {
        if (!first) out += ",";
        out += a.label(i);
        first = false;
      }
    out += "}";
  }
  return out;
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json_out = false;
};

int run_check(Ctx& c, const std::string& file, const std::string& prof, std::istream& in) {
  auto p = profile_from_name(prof);
  if (!p) {
    c.err << "unknown profile '" << prof << "'\n";
    return 2;
  }
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  CheckReport r = check_profile(a, *p);
  if (c.json_out) {
    json j;
    j["command"] = "check";
    j["algebra"] = a.name;
    j["profile"] = prof;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["violations"] = violations_json(a, r);
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "check " << a.name << ": profile " << prof << ": "
          << (r.pass ? "PASS" : "FAIL") << "\n";
    print_report(c.out, a, r);
  }
  return r.pass ? 0 : 1;
}

int run_eval(Ctx& c, const std::string& file, const std::string& expr, bool all,
             std::istream& in) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  FormulaPtr f = parse_formula(expr);
  if (all) {
    auto bad = falsifying_assignment(a, f);
    if (c.json_out) {
      json j;
      j["command"] = "eval";
      j["formula"] = print_formula(f);
      j["valid"] = !bad.has_value();
      if (bad) {
        json asg;
        for (const auto& [k, v] : *bad) asg[k] = a.label(v);
        j["assignment"] = asg;
      }
      c.out << j.dump(2) << "\n";
    } else if (bad) {
      c.out << "valid: no\nfalsifying assignment:";
      for (const auto& [k, v] : *bad) c.out << " " << k << "=" << a.label(v);
      c.out << "\n";
    } else {
      c.out << "valid: yes\n";
    }
    return bad ? 1 : 0;
  }
  if (!variables(f).empty()) {
    c.err << "formula has variables; use --all\n";
    return 2;
  }
  int v = eval(f, a, {});
  bool des = a.one && a.meet && designated(a, f, {});
  if (c.json_out) {
    json j;
    j["command"] = "eval";
    j["formula"] = print_formula(f);
    j["value"] = a.label(v);
    j["designated"] = des;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << print_formula(f) << " = " << a.label(v) << "\n";
    c.out << "designated: " << (des ? "yes" : "no") << "\n";
  }
  return des ? 0 : 1;
}

int run_derive(Ctx& c, const std::string& file, std::istream& in) {
  Derivation d = parse_derivation(slurp(file, in));
  const System* sys = system_by_id(d.system_id);
  CheckReport r = check_derivation(d, *sys);
  if (c.json_out) {
    json j;
    j["command"] = "derive";
    j["name"] = d.name;
    j["system"] = d.system_id;
    j["steps"] = d.steps.size();
    j["verdict"] = r.pass ? "pass" : "fail";
    if (!r.pass) j["reason"] = r.violations.front().condition;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "derivation " << d.name << ": system " << d.system_id << ": "
          << (r.pass ? "PASS" : "FAIL") << " (" << d.steps.size() << " steps)\n";
    if (!r.pass) c.out << "  " << r.violations.front().condition << "\n";
  }
  return r.pass ? 0 : 1;
}

int run_filters(Ctx& c, const std::string& file, std::istream& in, int cap) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  auto fils = cap > 0 ? all_filters(a, cap) : all_filters(a);
  if (c.json_out) {
    json j;
    j["command"] = "filters";
    j["algebra"] = a.name;
    j["count"] = fils.size();
    json arr = json::array();
    for (Subset f : fils) {
      json one = json::array();
      for (int i = 0; i < a.n; ++i)
        if ((f >> i) & 1u) one.push_back(a.label(i));
      arr.push_back(one);
    }
    j["filters"] = arr;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "filters of " << a.name << ": " << fils.size() << "\n";
    for (Subset f : fils) c.out << subset_label(a, f) << "\n";
  }
  return 0;
}

int run_con(Ctx& c, const std::string& file, std::istream& in, int cap) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  auto cons = cap > 0 ? all_congruences(a, cap) : all_congruences(a);
  if (c.json_out) {
    json j;
    j["command"] = "con";
    j["algebra"] = a.name;
    j["count"] = cons.size();
    json arr = json::array();
    for (const auto& th : cons) {
      json blocks = json::array();
      for (int leader = 0; leader < a.n; ++leader) {
        if (th[leader] != leader) continue;
        json blk = json::array();
        for (int i = 0; i < a.n; ++i)
          if (th[i] == leader) blk.push_back(a.label(i));
        blocks.push_back(blk);
      }
      arr.push_back(blocks);
    }
    j["congruences"] = arr;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "congruences of " << a.name << ": " << cons.size() << "\n";
    for (const auto& th : cons) c.out << partition_label(a, th) << "\n";
  }
  return 0;
}

int run_edpc(Ctx& c, const std::string& file, std::istream& in) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  CheckReport r = edpc_check(a);
  if (c.json_out) {
    json j;
    j["command"] = "edpc";
    j["algebra"] = a.name;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["violations"] = violations_json(a, r);
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "edpc " << a.name << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    print_report(c.out, a, r);
  }
  return r.pass ? 0 : 1;
}

int run_heyt(Ctx& c, const std::string& file, std::istream& in) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  HeytResult h = heyt(a);
  c.out << print_algebra(h.algebra);
  return 0;
}

int run_complete(Ctx& c, const std::string& mode, const std::string& file,
                 std::istream& in, int cap) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  if (mode == "frame") {
    FrameCompletion fc = cap > 0 ? frame_completion(a, cap) : frame_completion(a);
    c.out << print_algebra(fc.algebra);
    for (int x = 0; x < a.n; ++x)
      c.out << "# embed " << a.label(x) << " -> "
            << fc.algebra.label(fc.embedding[x]) << "\n";
    if (!fc.embedding_report.pass) {
      c.out << "# embedding violations:\n";
      print_report(c.out, a, fc.embedding_report);
      return 1;
    }
    return 0;
  }
  if (mode == "phase") {
    PhaseCompletion pc = cap > 0 ? phase_completion(a, cap) : phase_completion(a);
    c.out << print_algebra(pc.algebra);
    for (int x = 0; x < a.n; ++x)
      c.out << "# embed " << a.label(x) << " -> "
            << pc.algebra.label(pc.embedding[x]) << "\n";
    if (!pc.embedding_report.pass) {
      c.out << "# embedding violations:\n";
      print_report(c.out, a, pc.embedding_report);
      return 1;
    }
    return 0;
  }
  c.err << "unknown completion '" << mode << "' (use frame or phase)\n";
  return 2;
}

int run_induce(Ctx& c, const std::string& file, const std::string& subset,
               std::istream& in) {
  FiniteAlgebra a = parse_algebra(slurp(file, in));
  Subset h = 0;
  std::istringstream ss(subset);
  std::string lbl;
  while (std::getline(ss, lbl, ',')) {
    int i = a.index_of(lbl);
    if (i < 0) {
      c.err << "unknown element '" << lbl << "'\n";
      return 2;
    }
    h |= 1u << i;
  }
  FiniteAlgebra g = induce_modality(a, h);
  g.name = a.name + "_bang";
  c.out << print_algebra(g);
  return 0;
}

int run_search(Ctx& c, const std::string& prof, int size, const std::string& falsify,
               bool emit) {
  auto p = profile_from_name(prof);
  if (!p) {
    c.err << "unknown profile '" << prof << "'\n";
    return 2;
  }
  SearchSpec spec;
  spec.profile = *p;
  spec.max_size = size;
  if (!falsify.empty()) {
    // try quasiequation, then equation, then formula
    try {
      spec.goal = parse_quasiequation(falsify);
    } catch (const AlgebraError&) {
      try {
        spec.goal = parse_equation(falsify);
      } catch (const AlgebraError&) {
        spec.goal = parse_formula(falsify);
      }
    }
  }
  SearchResult r = spec.goal ? find_countermodel(spec) : enumerate_models(spec);
  if (c.json_out) {
    json j;
    j["command"] = "search";
    j["profile"] = prof;
    j["max_size"] = size;
    j["count"] = r.count;
    j["exhausted"] = r.exhausted;
    if (spec.goal)
      j["countermodel"] = r.counterexample ? json(print_algebra(*r.counterexample))
                                           : json(nullptr);
    if (emit) {
      json arr = json::array();
      for (const auto& m : r.models) arr.push_back(print_algebra(m));
      j["models"] = arr;
    }
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "search profile=" << prof << " max-size=" << size
          << ": models=" << r.count << " exhausted=" << (r.exhausted ? "yes" : "no")
          << "\n";
    if (spec.goal) {
      if (r.counterexample) {
        c.out << "countermodel:\n" << print_algebra(*r.counterexample);
      } else {
        c.out << "countermodel: none\n";
      }
    }
    if (emit)
      for (const auto& m : r.models) c.out << print_algebra(m);
  }
  if (spec.goal) return r.counterexample ? 0 : 1;
  return 0;
}

int run_translate(Ctx& c, const std::string& tau_f, const std::string& rho_e) {
  if (!tau_f.empty()) {
    Equation e = tau(parse_formula(tau_f));
    if (c.json_out) {
      json j;
      j["command"] = "translate";
      j["tau"] = print_equation(e);
      c.out << j.dump(2) << "\n";
    } else {
      c.out << print_equation(e) << "\n";
    }
    return 0;
  }
  if (!rho_e.empty()) {
    auto [f, g] = rho(parse_equation(rho_e));
    if (c.json_out) {
      json j;
      j["command"] = "translate";
      j["rho"] = {print_formula(f), print_formula(g)};
      c.out << j.dump(2) << "\n";
    } else {
      c.out << print_formula(f) << "\n" << print_formula(g) << "\n";
    }
    return 0;
  }
  c.err << "translate needs --tau or --rho\n";
  return 2;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx{out, err, false};
  CLI::App app{"gira: a workbench for finite residuated lattices, Girard algebras and girales"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_flag("--json", ctx.json_out, "emit machine-readable reports");
  app.add_option("--threads", threads, "worker threads for the scan kernels (0 = serial)");

  std::string file, prof, expr, subset, falsify, mode, tau_f, rho_e;
  int size = 3, n = 2, cap = 0;
  bool all = false, verbatim = false, emit = false;

  auto* check = app.add_subcommand("check", "check an algebra against a profile");
  check->add_option("file", file, "algebra file ('-' = stdin)");
  check->add_option("--profile", prof, "profile name")->required();

  auto* gen = app.add_subcommand("gen", "generate a built-in algebra family");
  std::string family;
  gen->add_option("family", family, "family (gn)")->required();
  gen->add_option("n", n, "member index")->required();
  gen->add_flag("--verbatim-neg", verbatim, "keep the non-involutive negation table");

  auto* evalc = app.add_subcommand("eval", "evaluate a formula on an algebra");
  evalc->add_option("file", file, "algebra file ('-' = stdin)");
  evalc->add_option("-e,--expr", expr, "formula")->required();
  evalc->add_flag("--all", all, "check all assignments");

  auto* derive = app.add_subcommand("derive", "check a derivation file");
  derive->add_option("file", file, "derivation file ('-' = stdin)");

  auto* filters = app.add_subcommand("filters", "list the filters of an algebra");
  filters->add_option("file", file, "algebra file ('-' = stdin)");
  filters->add_option("--cap", cap, "carrier size cap override");

  auto* con = app.add_subcommand("con", "list the congruences of an algebra");
  con->add_option("file", file, "algebra file ('-' = stdin)");
  con->add_option("--cap", cap, "carrier size cap override");

  auto* edpc = app.add_subcommand("edpc", "check definable principal congruences");
  edpc->add_option("file", file, "algebra file ('-' = stdin)");

  auto* heytc = app.add_subcommand("heyt", "emit the Heyting algebra on the bang image");
  heytc->add_option("file", file, "algebra file ('-' = stdin)");

  auto* complete = app.add_subcommand("complete", "frame or phase completion");
  complete->add_option("mode", mode, "frame | phase")->required();
  complete->add_option("file", file, "algebra file ('-' = stdin)");
  complete->add_option("--cap", cap, "size cap override");

  auto* induce = app.add_subcommand("induce", "induce a modality from a subset");
  induce->add_option("file", file, "algebra file ('-' = stdin)");
  induce->add_option("--subset", subset, "comma-separated element labels")->required();

  auto* search = app.add_subcommand("search", "enumerate models / find countermodels");
  search->add_option("--profile", prof, "profile name")->required();
  search->add_option("--size", size, "maximum size")->required();
  search->add_option("--falsify", falsify, "formula, equation or quasiequation");
  search->add_flag("--emit", emit, "print every model found");

  auto* translate = app.add_subcommand("translate", "tau / rho translations");
  translate->add_option("--tau", tau_f, "formula to translate");
  translate->add_option("--rho", rho_e, "equation to translate");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }
  par::set_threads(threads);

  try {
    if (check->parsed()) return run_check(ctx, file, prof, std::cin);
    if (gen->parsed()) {
      if (family != "gn") {
        err << "unknown family '" << family << "'\n";
        return 2;
      }
      out << print_algebra(gen_gn(n, !verbatim));
      return 0;
    }
    if (evalc->parsed()) return run_eval(ctx, file, expr, all, std::cin);
    if (derive->parsed()) return run_derive(ctx, file, std::cin);
    if (filters->parsed()) return run_filters(ctx, file, std::cin, cap);
    if (con->parsed()) return run_con(ctx, file, std::cin, cap);
    if (edpc->parsed()) return run_edpc(ctx, file, std::cin);
    if (heytc->parsed()) return run_heyt(ctx, file, std::cin);
    if (complete->parsed()) return run_complete(ctx, mode, file, std::cin, cap);
    if (induce->parsed()) return run_induce(ctx, file, subset, std::cin);
    if (search->parsed()) return run_search(ctx, prof, size, falsify, emit);
    if (translate->parsed()) return run_translate(ctx, tau_f, rho_e);
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace gira
