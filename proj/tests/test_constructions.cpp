#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gira/congruence.hpp"
#include "gira/constructions.hpp"
#include "gira/iso.hpp"
#include "support/corpus.hpp"

using namespace gira;

namespace {

Subset mask_of(const FiniteAlgebra& a, std::initializer_list<const char*> labels) {
  Subset s = 0;
  for (const char* l : labels) s |= 1u << a.index_of(l);
  return s;
}

Subset bang_image(const FiniteAlgebra& a) {
  Subset s = 0;
  for (int x = 0; x < a.n; ++x) s |= 1u << a.bg(x);
  return s;
}

}  // namespace

TEST_CASE("gen_gn(1) is the two-element Boolean girale with 0 = bot, 1 = top") {
  FiniteAlgebra g1 = gen_gn(1);
  CHECK(g1.n == 2);
  CHECK(*g1.one == *g1.top);
  CHECK(*g1.zero == *g1.bot);
  CHECK(check_profile(g1, Profile::BoundedGirale).pass);
  CHECK(is_simple(g1));
  CHECK(boolean_girale_check(g1));
  HeytResult h = heyt(g1);
  CHECK(h.algebra.n == 2);
  CHECK(check_profile(h.algebra, Profile::Heyting).pass);
}

TEST_CASE("gen_gn(2) amended passes bounded-girale; n >= 3 is broken either way") {
  CHECK(check_profile(gen_gn(2), Profile::BoundedGirale).pass);
  CHECK_FALSE(check_profile(gen_gn(3), Profile::CRL).pass);
  CHECK_FALSE(check_profile(gen_gn(3, false), Profile::CRL).pass);
}

TEST_CASE("verbatim negation breaks involutivity at one") {
  FiniteAlgebra g3 = gen_gn(3, false);
  CheckReport r = check_profile(g3, Profile::Girard);
  bool found = false;
  for (const auto& v : r.violations)
    if (v.condition == "NEG-INVOLUTIVE") {
      found = true;
      CHECK(v.witness == std::vector<int>{g3.index_of("one")});
    }
  CHECK(found);
  // amended negation is involutive even for n = 3
  FiniteAlgebra g3a = gen_gn(3);
  for (int x = 0; x < g3a.n; ++x) CHECK(g3a.ng(g3a.ng(x)) == x);
}

TEST_CASE("repair_search: all cells frozen reproduces exactly gen_gn(2)") {
  auto res = repair_search(2, RepairSpec{});
  REQUIRE(res.size() == 1);
  CHECK(is_isomorphic(res[0], canonical_form(gen_gn(2))).has_value());
}

TEST_CASE("repair_search: unfreezing neg on G2 only yields involutions") {
  RepairSpec spec;
  spec.unfrozen_neg = true;
  auto res = repair_search(2, spec);
  CHECK(!res.empty());
  for (const auto& a : res) {
    for (int x = 0; x < a.n; ++x) CHECK(a.ng(a.ng(x)) == x);
    CHECK(check_profile(a, Profile::BoundedGirale).pass);
  }
}

TEST_CASE("repair_search golden: unfreezing the free-atom row of G3") {
  FiniteAlgebra g3 = gen_gn(3);
  RepairSpec spec;
  for (int x = 0; x < g3.n; ++x)
    spec.unfrozen_mult.push_back({g3.index_of("a3"), x});
  auto res = repair_search(3, spec);
  // frozen golden from the exhaustive run: two repairs exist, one keeping
  // a*a = bot (with a*0 = a*top = a) and one setting a*a = 0
  REQUIRE(res.size() == 2);
  for (const auto& a : res) {
    CHECK(check_profile(a, Profile::BoundedGirale).pass);
    int atom = -1;
    for (int x = 0; x < a.n; ++x)
      if (a.ng(x) == x) atom = x;
    REQUIRE(atom >= 0);
    bool keeps_bot = a.ml(atom, atom) == *a.bot;
    bool squares_to_zero = a.ml(atom, atom) == *a.zero;
    CHECK((keeps_bot || squares_to_zero));
  }
  CHECK(res[0].ml(0, 0) == 0);  // canonical forms are deterministic
  auto res2 = repair_search(3, spec);
  REQUIRE(res2.size() == 2);
  for (size_t i = 0; i < res.size(); ++i)
    CHECK(is_isomorphic(res[i], res2[i]).has_value());
}

TEST_CASE("repair_search golden: unfreezing the atom block of G3") {
  FiniteAlgebra g3 = gen_gn(3);
  RepairSpec spec;  // all products of {one, zero, a3} freed: 6 cells
  for (const char* x : {"one", "zero", "a3"})
    for (const char* y : {"one", "zero", "a3"})
      spec.unfrozen_mult.push_back({g3.index_of(x), g3.index_of(y)});
  auto res = repair_search(3, spec);
  for (const auto& a : res) CHECK(check_profile(a, Profile::BoundedGirale).pass);
  // frozen golden: freeing the whole atom block finds the same two repairs
  CHECK(res.size() == 2);
}

TEST_CASE("repair_search rejects unbounded cell sets") {
  RepairSpec spec;
  for (int x = 0; x < 6; ++x)
    for (int y = x; y < 6; ++y) spec.unfrozen_mult.push_back({x, y});
  CHECK_THROWS_WITH_AS(repair_search(4, spec), doctest::Contains("SIZE-LIMIT"),
                       AlgebraError);
}

TEST_CASE("heyt(G2) is the two-element Boolean algebra on {bot, one}") {
  HeytResult h = heyt(gen_gn(2));
  CHECK(h.algebra.n == 2);
  CHECK(h.image == std::vector<int>{0, 1});  // bot, one
  CHECK(check_profile(h.algebra, Profile::Heyting).pass);
  // classical implication table
  CHECK(*h.algebra.imp == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("heyt of every corpus girale is a Heyting algebra") {
  for (const auto& a : testing::corpus(Profile::Girale, 4)) {
    HeytResult h = heyt(a);
    CHECK(check_profile(h.algebra, Profile::Heyting).pass);
    CHECK(h.algebra.n == __builtin_popcount(bang_image(a)));
  }
}

TEST_CASE("heyt of the trivial girale is trivial") {
  FiniteAlgebra t;
  t.name = "t";
  t.n = 1;
  t.elems = {"e"};
  t.meet = std::vector<int>{0};
  t.join = std::vector<int>{0};
  t.mult = std::vector<int>{0};
  t.imp = std::vector<int>{0};
  t.neg = std::vector<int>{0};
  t.bang = std::vector<int>{0};
  t.one = 0;
  t.zero = 0;
  HeytResult h = heyt(t);
  CHECK(h.algebra.n == 1);
  CHECK(check_profile(h.algebra, Profile::Heyting).pass);
}

TEST_CASE("heyt_con_iso passes on G2 and the girale corpus") {
  CHECK(heyt_con_iso(gen_gn(2)).pass);
  for (const auto& a : testing::corpus(Profile::Girale, 4))
    CHECK(heyt_con_iso(a).pass);
}

TEST_CASE("boolean_girale_check: G1 and G2 yes; some corpus girale no") {
  CHECK(boolean_girale_check(gen_gn(1)));
  CHECK(boolean_girale_check(gen_gn(2)));
  // the corpus contains a girale whose bang image is a non-Boolean chain
  int non_boolean = 0, chain3 = 0;
  for (const auto& a : testing::corpus(Profile::Girale, 4)) {
    if (!boolean_girale_check(a)) {
      ++non_boolean;
      HeytResult h = heyt(a);
      bool is_chain = true;
      Order ord = order_from_meet(h.algebra);
      for (int x = 0; x < h.algebra.n; ++x)
        for (int y = 0; y < h.algebra.n; ++y)
          if (!ord.leq(x, y) && !ord.leq(y, x)) is_chain = false;
      if (h.algebra.n == 3 && is_chain) ++chain3;
    }
  }
  CHECK(non_boolean > 0);
  CHECK(chain3 > 0);  // the three-element Heyting chain appears as some Heyt(A)
}

TEST_CASE("valid modality subsets: G1 and G2") {
  FiniteAlgebra g1 = gen_gn(1);
  CHECK(valid_modality_subset(g1, mask_of(g1, {"bot", "top"})));
  FiniteAlgebra ind = induce_modality(g1, mask_of(g1, {"bot", "top"}));
  CHECK(*ind.bang == std::vector<int>{0, 1});  // identity

  FiniteAlgebra g2 = gen_gn(2);
  std::string why;
  CHECK_FALSE(valid_modality_subset(g2, mask_of(g2, {"one", "top"}), &why));
  CHECK(why == "H-NOT-BELOW-ONE");
  CHECK_FALSE(valid_modality_subset(g2, mask_of(g2, {"bot"}), &why));
  CHECK(why == "ONE-NOT-IN-H");
  CHECK_FALSE(valid_modality_subset(g2, mask_of(g2, {"one"}), &why));
  CHECK(why == "NO-SUP");
}

TEST_CASE("induce_modality reproduces the G2 bang from its Heyting core") {
  FiniteAlgebra g2 = gen_gn(2);
  FiniteAlgebra reduct = g2;
  reduct.bang.reset();
  FiniteAlgebra ind = induce_modality(reduct, mask_of(g2, {"bot", "one"}));
  CHECK(*ind.bang == *g2.bang);
}

TEST_CASE("induce_modality error paths") {
  FiniteAlgebra g2 = gen_gn(2);
  CHECK_THROWS_WITH_AS(induce_modality(g2, mask_of(g2, {"one"})),
                       doctest::Contains("NO-SUP"), AlgebraError);
  CHECK_THROWS_WITH_AS(induce_modality(g2, mask_of(g2, {"bot", "one", "top"})),
                       doctest::Contains("INVALID-H"), AlgebraError);
}

TEST_CASE("the bang image is a fixpoint of modality induction") {
  for (const auto& a : testing::corpus(Profile::Girale, 4)) {
    FiniteAlgebra reduct = a;
    reduct.bang.reset();
    FiniteAlgebra ind = induce_modality(reduct, bang_image(a));
    CHECK(*ind.bang == *a.bang);
    // and the subset itself remains a valid modality subset of the result
    auto subsets = rc_heyting_subsets(ind);
    CHECK(std::find(subsets.begin(), subsets.end(), bang_image(a)) != subsets.end());
  }
}

TEST_CASE("rc_heyting_subsets of G2 finds exactly the Heyting core") {
  FiniteAlgebra g2 = gen_gn(2);
  auto subsets = rc_heyting_subsets(g2);
  REQUIRE(subsets.size() == 1);
  CHECK(subsets[0] == mask_of(g2, {"bot", "one"}));
}

TEST_CASE("every induced modality passes the girale profile") {
  for (const auto& a : testing::corpus(Profile::Girard, 4))
    for (Subset h : rc_heyting_subsets(a))
      CHECK(check_profile(induce_modality(a, h), Profile::Girale).pass);
}
