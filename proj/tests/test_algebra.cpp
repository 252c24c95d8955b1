#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gira/algebra.hpp"
#include "gira/algebra_io.hpp"
#include "gira/constructions.hpp"
#include "gira/iso.hpp"
#include "gira/profile.hpp"
#include "support/corpus.hpp"

using namespace gira;

namespace {

FiniteAlgebra trivial_algebra() {
  FiniteAlgebra a;
  a.name = "triv";
  a.n = 1;
  a.elems = {"e"};
  a.meet = std::vector<int>{0};
  a.join = std::vector<int>{0};
  a.mult = std::vector<int>{0};
  a.imp = std::vector<int>{0};
  a.neg = std::vector<int>{0};
  a.bang = std::vector<int>{0};
  a.one = a.zero = a.top = a.bot = 0;
  return a;
}

// brute-force residual: greatest c with x*c <= y, scanning candidates
int residual_oracle(const FiniteAlgebra& a, const Order& ord, int x, int y) {
  int best = -1;
  for (int c = 0; c < a.n; ++c) {
    if (!ord.leq(a.ml(x, c), y)) continue;
    bool greatest = true;
    for (int d = 0; d < a.n; ++d)
      if (ord.leq(a.ml(x, d), y) && !ord.leq(d, c)) { greatest = false; break; }
    if (greatest) { best = c; break; }
  }
  return best;
}

}  // namespace

TEST_CASE("order_from_meet on the singleton") {
  FiniteAlgebra a = trivial_algebra();
  Order ord = order_from_meet(a);
  CHECK(ord.leq(0, 0));
}

TEST_CASE("order_from_meet reproduces the diamond order of G2") {
  FiniteAlgebra g2 = gen_gn(2);
  Order ord = order_from_meet(g2);
  int bot = g2.index_of("bot"), one = g2.index_of("one");
  int zero = g2.index_of("zero"), top = g2.index_of("top");
  CHECK(ord.leq(bot, one));
  CHECK(ord.leq(bot, zero));
  CHECK(ord.leq(one, top));
  CHECK(ord.leq(zero, top));
  CHECK_FALSE(ord.leq(one, zero));
  CHECK_FALSE(ord.leq(zero, one));
}

TEST_CASE("order_from_meet rejects non-idempotent tables") {
  FiniteAlgebra a;
  a.name = "bad";
  a.n = 2;
  a.elems = {"x", "y"};
  a.meet = std::vector<int>{1, 0, 0, 1};  // x /\ x = y
  CHECK_THROWS_WITH_AS(order_from_meet(a), doctest::Contains("NOT-A-SEMILATTICE"),
                       AlgebraError);
}

TEST_CASE("residual_from_mult matches the brute-force oracle on G2") {
  FiniteAlgebra g2 = gen_gn(2);
  Order ord = order_from_meet(g2);
  FiniteAlgebra no_imp = g2;
  no_imp.imp.reset();
  std::vector<int> res = residual_from_mult(no_imp);
  for (int x = 0; x < g2.n; ++x)
    for (int y = 0; y < g2.n; ++y)
      CHECK(res[x * g2.n + y] == residual_oracle(g2, ord, x, y));
  // frozen values computed with the oracle
  int one = g2.index_of("one"), zero = g2.index_of("zero");
  CHECK(res[zero * g2.n + zero] == one);
  for (int b = 0; b < g2.n; ++b) CHECK(res[one * g2.n + b] == b);
  // and the shipped imp table of G2 is exactly the residual
  CHECK(res == *g2.imp);
}

TEST_CASE("residual_from_mult rejects candidate sets with two maximal elements") {
  FiniteAlgebra a;
  a.name = "m2";
  a.n = 4;
  a.elems = {"o", "x", "y", "i"};  // diamond: o < x,y < i
  a.meet = std::vector<int>{0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  a.mult = std::vector<int>{0, 0, 0, 0, 0, 1, 3, 1, 0, 3, 2, 1, 0, 1, 1, 3};
  CHECK_THROWS_WITH_AS(residual_from_mult(a), doctest::Contains("NO-RESIDUAL"),
                       AlgebraError);
}

TEST_CASE("residual_from_mult cross-validates a present imp table") {
  FiniteAlgebra g2 = gen_gn(2);
  (*g2.imp)[0] = 0;  // corrupt bot -> bot
  CHECK_THROWS_WITH_AS(residual_from_mult(g2), doctest::Contains("IMP-MISMATCH"),
                       AlgebraError);
}

TEST_CASE("neg_from_zero on G2 and on the Boolean 2-element algebra") {
  FiniteAlgebra g2 = gen_gn(2);
  std::vector<int> ng = neg_from_zero(g2);
  CHECK(ng[g2.index_of("bot")] == g2.index_of("top"));
  CHECK(ng[g2.index_of("one")] == g2.index_of("zero"));
  CHECK(ng[g2.index_of("zero")] == g2.index_of("one"));
  CHECK(ng[g2.index_of("top")] == g2.index_of("bot"));
  CHECK(ng == *g2.neg);

  FiniteAlgebra g1 = gen_gn(1);
  std::vector<int> ng1 = neg_from_zero(g1);
  CHECK(ng1 == std::vector<int>{1, 0});  // classical complement
}

TEST_CASE("check_profile: gen_gn(2) amended is a bounded girale") {
  CHECK(check_profile(gen_gn(2), Profile::BoundedGirale).pass);
}

TEST_CASE("check_profile: verbatim gen_gn(3) fails CRL with the frozen witness") {
  FiniteAlgebra g3 = gen_gn(3, false);
  CheckReport r = check_profile(g3, Profile::CRL);
  CHECK_FALSE(r.pass);
  bool found = false;
  for (const auto& v : r.violations)
    if (v.condition == "MULT-ASSOC") {
      found = true;
      CHECK(v.witness == std::vector<int>{g3.index_of("a3"), g3.index_of("a3"),
                                          g3.index_of("zero")});
      CHECK(v.values == std::vector<int>{g3.index_of("bot"), g3.index_of("top")});
    }
  CHECK(found);
}

TEST_CASE("check_profile: the trivial algebra passes every profile") {
  FiniteAlgebra a = trivial_algebra();
  for (Profile p : all_profiles()) CHECK(check_profile(a, p).pass);
}

TEST_CASE("check_profile: missing tables are errors, not failures") {
  FiniteAlgebra g2 = gen_gn(2);
  g2.bang.reset();
  CHECK_THROWS_WITH_AS(check_profile(g2, Profile::Girale),
                       doctest::Contains("MISSING-TABLE"), AlgebraError);
  g2.zero.reset();
  CHECK_THROWS_WITH_AS(check_profile(g2, Profile::Girard),
                       doctest::Contains("MISSING-CONSTANT"), AlgebraError);
}

TEST_CASE("profiles are cumulative: girale pass implies girard and crl pass") {
  for (const auto& a : testing::corpus(Profile::Girale, 3)) {
    CHECK(check_profile(a, Profile::Girard).pass);
    CHECK(check_profile(a, Profile::CRL).pass);
  }
}

TEST_CASE("is_isomorphic: identity, permuted copy, constant mismatch") {
  FiniteAlgebra g2 = gen_gn(2);
  auto self = is_isomorphic(g2, g2);
  REQUIRE(self.has_value());
  for (int i = 0; i < g2.n; ++i) CHECK((*self)[i] == i);

  std::vector<int> perm = {3, 2, 1, 0};
  FiniteAlgebra g2p = g2.permuted(perm);
  CHECK(is_isomorphic(g2, g2p).has_value());

  // 2-element algebra with one = bot: no isomorphism with G1
  FiniteAlgebra flip = gen_gn(1);
  std::swap(*flip.one, *flip.zero);
  CHECK_FALSE(is_isomorphic(gen_gn(1), flip).has_value());
}

TEST_CASE("is_isomorphic requires matching signatures") {
  FiniteAlgebra g2 = gen_gn(2);
  FiniteAlgebra nobang = g2;
  nobang.bang.reset();
  CHECK_THROWS_WITH_AS(is_isomorphic(g2, nobang),
                       doctest::Contains("SIGNATURE-MISMATCH"), AlgebraError);
}

TEST_CASE("canonical_form is invariant under renaming") {
  std::mt19937 rng(20240811);
  for (const auto& a : testing::corpus(Profile::Girale, 3)) {
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    FiniteAlgebra b = a.permuted(perm);
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(is_isomorphic(a, b).has_value());
    CHECK(print_algebra(canonical_form(a)) == print_algebra(canonical_form(b)));
  }
}

TEST_CASE("canonical keys separate non-isomorphic corpus members") {
  const auto& cs = testing::corpus(Profile::Girale, 4);
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i].n == cs[j].n) {
        CHECK(canonical_key(cs[i]) != canonical_key(cs[j]));
        CHECK_FALSE(is_isomorphic(cs[i], cs[j]).has_value());
      }
}

TEST_CASE("CRL invariants: adjunction and join distribution over the corpus") {
  for (const auto& a : testing::corpus(Profile::CRL, 3)) {
    Order ord = order_from_meet(a);
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y) {
        for (int z = 0; z < a.n; ++z) {
          CHECK(ord.leq(a.ml(x, y), z) == ord.leq(x, a.im(y, z)));
          CHECK(a.ml(x, a.jn(y, z)) == a.jn(a.ml(x, y), a.ml(x, z)));
        }
      }
  }
}

TEST_CASE("Girard invariants: the negation laws hold pointwise") {
  for (const auto& a : testing::corpus(Profile::Girard, 3)) {
    Order ord = order_from_meet(a);
    auto ng = [&](int x) { return a.im(x, *a.zero); };
    for (int x = 0; x < a.n; ++x) {
      CHECK(ng(ng(x)) == x);
      for (int y = 0; y < a.n; ++y) {
        CHECK(ng(a.jn(x, y)) == a.mt(ng(x), ng(y)));
        CHECK(ng(a.mt(x, y)) == a.jn(ng(x), ng(y)));
        if (ord.leq(x, y)) CHECK(ord.leq(ng(y), ng(x)));
        CHECK(ng(a.ml(x, ng(y))) == a.im(x, y));
      }
    }
  }
}

TEST_CASE("algebra text format round-trips the G_n family") {
  for (int n = 1; n <= 3; ++n) {
    FiniteAlgebra g = gen_gn(n);
    FiniteAlgebra back = parse_algebra(print_algebra(g));
    CHECK(back.name == g.name);
    CHECK(back.meet == g.meet);
    CHECK(back.join == g.join);
    CHECK(back.mult == g.mult);
    CHECK(back.imp == g.imp);
    CHECK(back.neg == g.neg);
    CHECK(back.bang == g.bang);
    CHECK(back.one == g.one);
    CHECK(back.zero == g.zero);
  }
}

TEST_CASE("algebra parser rejects unknown keys and bad labels") {
  CHECK_THROWS_WITH_AS(parse_algebra("algebra x\nsize 1\nelements e\nfrobnicate\n"),
                       doctest::Contains("unknown key"), AlgebraError);
  CHECK_THROWS_WITH_AS(
      parse_algebra("algebra x\nsize 1\nelements e\nconst one = zzz\n"),
      doctest::Contains("unknown element"), AlgebraError);
  CHECK_THROWS_WITH_AS(parse_algebra("algebra x\nsize 2\nelements a a\n"),
                       doctest::Contains("not distinct"), AlgebraError);
}

TEST_CASE("direct products preserve the girale laws") {
  FiniteAlgebra p = direct_product(gen_gn(1), gen_gn(2));
  CHECK(check_profile(p, Profile::BoundedGirale).pass);
  CHECK(p.n == 8);
}
