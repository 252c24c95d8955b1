#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gira/constructions.hpp"
#include "gira/eval.hpp"
#include "gira/hilbert.hpp"
#include "gira/iso.hpp"
#include "gira/parser.hpp"
#include "support/corpus.hpp"

using namespace gira;

namespace {

// random parseable formula (no par; that one has no surface syntax)
FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> v(0, 2);
      const char* names[] = {"p", "q", "r"};
      return mk::var(names[v(rng)]);
    }
    case 1: {
      // corpus algebras carry one and zero; top/bot stay optional
      std::uniform_int_distribution<int> c(0, 1);
      return mk::constant((ConstSym)c(rng));
    }
    case 2: return mk::neg(random_formula(rng, depth - 1));
    case 3: return mk::bang(random_formula(rng, depth - 1));
    case 4: return mk::quest(random_formula(rng, depth - 1));
    case 5: return mk::mult(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return mk::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7: return mk::meet(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return mk::join(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parser shapes: HL6 body, a variable, unary binding") {
  FormulaPtr f = parse_formula("p -> (q -> p*q)");
  REQUIRE(f->kind == Conn::Imp);
  CHECK(f->a->kind == Conn::Var);
  REQUIRE(f->b->kind == Conn::Imp);
  CHECK(f->b->b->kind == Conn::Mult);

  CHECK(equal(f, parse_formula("p -> q -> p*q")));  // -> is right-associative

  FormulaPtr x = parse_formula("x");
  CHECK(x->kind == Conn::Var);
  CHECK(x->var == "x");

  FormulaPtr g = parse_formula("~p -> q");
  REQUIRE(g->kind == Conn::Imp);
  CHECK(g->a->kind == Conn::Neg);
}

TEST_CASE("precedence: * binds tighter than /\\ tighter than \\/ tighter than ->") {
  FormulaPtr f = parse_formula("a /\\ b \\/ c");
  CHECK(f->kind == Conn::Join);
  CHECK(f->a->kind == Conn::Meet);
  FormulaPtr g = parse_formula("a \\/ b -> c * d /\\ e");
  REQUIRE(g->kind == Conn::Imp);
  CHECK(g->a->kind == Conn::Join);
  CHECK(g->b->kind == Conn::Meet);
  CHECK(g->b->a->kind == Conn::Mult);
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse_formula("p -> (q");
    FAIL("expected a syntax error");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == "SYNTAX-ERROR");
    CHECK(!e.witness().empty());
  }
}

TEST_CASE("printer/parser round-trip on a random corpus, depth <= 8") {
  std::mt19937 rng(987654);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = random_formula(rng, 8);
    CHECK(equal(parse_formula(print_formula(f)), f));
  }
  // the bounded constants, absent from the generator, round-trip too
  for (const char* s : {"T", "F", "p -> T /\\ F", "~T * ?F"}) {
    FormulaPtr f = parse_formula(s);
    CHECK(equal(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("equation and quasiequation parsing round-trips") {
  Equation e = parse_equation("x /\\ y = y /\\ x");
  CHECK(print_equation(e) == "x /\\ y = y /\\ x");
  Quasiequation q =
      parse_quasiequation("(x->y)/\\1=1 & (y->x)/\\1=1 => x=y");
  CHECK(q.premises.size() == 2);
  CHECK(print_quasiequation(q) ==
        "(x -> y) /\\ 1 = 1 & (y -> x) /\\ 1 = 1 => x = y");
}

TEST_CASE("eval: constants, bang, derived implication on G2") {
  FiniteAlgebra g2 = gen_gn(2);
  CHECK(eval(parse_formula("1"), g2, {}) == *g2.one);
  // frozen from the bang table of gen_gn(2)
  CHECK(eval(parse_formula("!0"), g2, {}) == g2.index_of("bot"));
  CHECK(eval(parse_formula("!0"), g2, {}) == g2.bg(*g2.zero));
  // frozen from the residual scan (same value the oracle in test_algebra checks)
  CHECK(eval(parse_formula("0 -> 0"), g2, {}) == g2.index_of("one"));
}

TEST_CASE("eval error paths: unbound variables and missing tables") {
  FiniteAlgebra g2 = gen_gn(2);
  CHECK_THROWS_WITH_AS(eval(parse_formula("p"), g2, {}),
                       doctest::Contains("UNBOUND-VARIABLE"), AlgebraError);
  FiniteAlgebra nobang = g2;
  nobang.bang.reset();
  CHECK_THROWS_WITH_AS(eval(parse_formula("!1"), nobang, {}),
                       doctest::Contains("MISSING-TABLE"), AlgebraError);
}

TEST_CASE("designated: 1 always, 0 not in G2, p -> p in every v-l7 algebra") {
  FiniteAlgebra g2 = gen_gn(2);
  CHECK(designated(g2, parse_formula("1"), {}));
  CHECK_FALSE(designated(g2, parse_formula("0"), {}));
  FormulaPtr pp = parse_formula("p -> p");
  for (const auto& a : testing::corpus(Profile::VL7, 3))
    for (int v = 0; v < a.n; ++v) CHECK(designated(a, pp, {{"p", v}}));
}

TEST_CASE("satisfies: meet commutativity and the antisymmetry quasiequation") {
  FiniteAlgebra g2 = gen_gn(2);
  CHECK(satisfies(g2, parse_equation("x /\\ y = y /\\ x")));
  Quasiequation antisym =
      parse_quasiequation("(x->y)/\\1=1 & (y->x)/\\1=1 => x=y");
  for (const auto& a : testing::corpus(Profile::GS, 3)) CHECK(satisfies(a, antisym));
}

TEST_CASE("validates: HL1..HL19 hold in G2") {
  FiniteAlgebra g2 = gen_gn(2);
  const char* axioms[] = {
      "p -> p",
      "(p -> q) -> ((q -> r) -> (p -> r))",
      "(p -> (q -> r)) -> (q -> (p -> r))",
      "~~p -> p",
      "(p -> ~q) -> (q -> ~p)",
      "p -> (q -> p*q)",
      "(p -> (q -> r)) -> (p*q -> r)",
      "1",
      "1 -> (p -> p)",
      "p -> (~p -> 0)",
      "~0",
      "p /\\ q -> p",
      "p /\\ q -> q",
      "(p -> q) /\\ (p -> r) -> (p -> q /\\ r)",
      "p -> p \\/ q",
      "q -> p \\/ q",
      "(p -> r) /\\ (q -> r) -> (p \\/ q -> r)",
      "p -> T",
      "F -> p",
  };
  for (const char* ax : axioms) CHECK_MESSAGE(validates(g2, parse_formula(ax)), ax);
}

TEST_CASE("falsifying_assignment is the lexicographically first one") {
  FiniteAlgebra g2 = gen_gn(2);
  // "p" fails first at p = bot (element 0)
  auto w = falsifying_assignment(g2, parse_formula("p"));
  REQUIRE(w.has_value());
  CHECK(w->at("p") == 0);
  // two variables: every p = bot case is designated (bot -> q = top),
  // so the first falsifier is (p, q) = (one, bot)
  auto w2 = falsifying_assignment(g2, parse_formula("p -> q"));
  REQUIRE(w2.has_value());
  CHECK(w2->at("p") == g2.index_of("one"));
  CHECK(w2->at("q") == g2.index_of("bot"));
}

TEST_CASE("quest evaluates through its expansion") {
  FiniteAlgebra g2 = gen_gn(2);
  // ?1 = ~!~1: ~1 = zero, !zero = bot, ~bot = top
  CHECK(eval(parse_formula("?1"), g2, {}) == g2.index_of("top"));
  CHECK(eval(parse_formula("?1"), g2, {}) ==
        eval(expand_defined(parse_formula("?1")), g2, {}));
}

TEST_CASE("connective sets are computable for fragment profiles") {
  auto conns = connectives(parse_formula("~p -> q /\\ 1"));
  CHECK(conns.count(Conn::Neg));
  CHECK(conns.count(Conn::Imp));
  CHECK(conns.count(Conn::Meet));
  CHECK(conns.count(Conn::Const));
  CHECK_FALSE(conns.count(Conn::Mult));
  CHECK_FALSE(conns.count(Conn::Bang));
}

TEST_CASE("semantic consequence: reflexivity, modus ponens, promotion") {
  FormulaPtr p = parse_formula("p"), q = parse_formula("q");
  FormulaPtr pq = parse_formula("p -> q"), bp = parse_formula("!p");
  for (const auto& a : testing::corpus(Profile::Girale, 3)) {
    CHECK(semantic_consequence({p}, p, a));
    CHECK(semantic_consequence({p, pq}, q, a));
    CHECK(semantic_consequence({p}, bp, a));
  }
  // and a non-consequence for contrast
  FiniteAlgebra g2 = gen_gn(2);
  CHECK_FALSE(semantic_consequence({pq}, q, g2));
}

TEST_CASE("tau and rho translations") {
  CHECK(print_equation(tau(parse_formula("p"))) == "p /\\ 1 = 1");
  auto [f, g] = rho(parse_equation("x = x"));
  CHECK(print_formula(f) == "x -> x");
  CHECK(print_formula(g) == "x -> x");
}

TEST_CASE("tau/rho bridge over the girale corpus") {
  std::mt19937 rng(7001);
  const auto& cs = testing::corpus(Profile::Girale, 4);
  for (const auto& a : cs) {
    for (int i = 0; i < 10; ++i) {
      FormulaPtr f = random_formula(rng, 4);
      CHECK(validates(a, f) == satisfies(a, tau(f)));
    }
    for (int i = 0; i < 5; ++i) {
      Equation e{random_formula(rng, 3), random_formula(rng, 3)};
      auto [l, r] = rho(e);
      CHECK((validates(a, l) && validates(a, r)) == satisfies(a, e));
    }
  }
}

TEST_CASE("expand_defined rewrites par and quest") {
  FormulaPtr par = mk::par(mk::var("a"), mk::var("b"));
  FormulaPtr expanded = expand_defined(par);
  CHECK(equal(expanded, parse_formula("~a -> b")));
  CHECK(equal(expand_defined(mk::quest(mk::one())), parse_formula("~!~1")));
  FormulaPtr plain = parse_formula("p -> q /\\ 1");
  CHECK(equal(expand_defined(plain), plain));
  // par evaluates through its expansion
  FiniteAlgebra g2 = gen_gn(2);
  for (int x = 0; x < g2.n; ++x)
    for (int y = 0; y < g2.n; ++y) {
      Assignment v{{"a", x}, {"b", y}};
      CHECK(eval(par, g2, v) == eval(expanded, g2, v));
    }
  CHECK_THROWS_AS((void)print_formula(par), std::logic_error);
}

TEST_CASE("evaluation commutes with isomorphism") {
  std::mt19937 rng(5150);
  FiniteAlgebra g2 = gen_gn(2);
  std::vector<int> perm = {2, 0, 3, 1};
  FiniteAlgebra h = g2.permuted(perm);
  std::vector<int> inv(4);
  for (int i = 0; i < 4; ++i) inv[perm[i]] = i;
  for (int i = 0; i < 50; ++i) {
    FormulaPtr f = random_formula(rng, 5);
    Assignment v, w;
    for (const auto& name : variables(f)) {
      int x = (int)(rng() % 4);
      v[name] = x;
      w[name] = inv[x];  // sigma(x) in h-coordinates
    }
    CHECK(inv[eval(f, g2, v)] == eval(f, h, w));
  }
}

TEST_CASE("HL1..HL24 validate on every bounded girale of size <= 3") {
  for (const auto& a : testing::corpus(Profile::BoundedGirale, 3))
    for (const auto& s : schemata())
      if (s.id != "MINGLE") CHECK_MESSAGE(validates(a, s.pattern), s.id);
}
