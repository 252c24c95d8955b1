#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gira/constructions.hpp"
#include "support/corpus.hpp"

using namespace gira;

namespace {

FiniteAlgebra trivial_vl7() {
  FiniteAlgebra a;
  a.name = "triv";
  a.n = 1;
  a.elems = {"e"};
  a.meet = std::vector<int>{0};
  a.imp = std::vector<int>{0};
  a.one = 0;
  return a;
}

FiniteAlgebra g1_meet_imp_reduct() {
  FiniteAlgebra a = gen_gn(1);
  a.join.reset();
  a.mult.reset();
  a.neg.reset();
  a.bang.reset();
  a.zero.reset();
  a.top.reset();
  a.bot.reset();
  return a;
}

FiniteAlgebra girard_reduct(FiniteAlgebra a) {
  a.bang.reset();
  a.top.reset();
  a.bot.reset();
  return a;
}

}  // namespace

TEST_CASE("frame completion of the trivial algebra has two families") {
  FrameCompletion fc = frame_completion(trivial_vl7());
  CHECK(fc.algebra.n == 2);  // the empty family and {[e)}
  CHECK(fc.embedding_report.pass);
  CHECK(check_profile(fc.algebra, Profile::CRL).pass);
}

TEST_CASE("frame completion of the G1 reduct embeds injectively") {
  FrameCompletion fc = frame_completion(g1_meet_imp_reduct());
  CHECK(check_profile(fc.algebra, Profile::CRL).pass);
  CHECK(fc.embedding_report.pass);
  CHECK(fc.filters.size() == 2);   // [top) and [bot)
  CHECK(fc.algebra.n == 3);        // hereditary families over a 2-chain
}

TEST_CASE("frame completion laws over the v-l7 corpus of size <= 3") {
  for (const auto& a : testing::corpus(Profile::VL7, 3)) {
    FrameCompletion fc = frame_completion(a);
    CHECK(check_profile(fc.algebra, Profile::CRL).pass);
    CHECK(fc.embedding_report.pass);
    const FiniteAlgebra& d = fc.algebra;
    // monoid + adjunction facts, checked directly on the family algebra
    Order ord = order_from_meet(d);
    for (int x = 0; x < d.n; ++x) {
      CHECK(d.ml(*d.one, x) == x);
      for (int y = 0; y < d.n; ++y) {
        CHECK(d.ml(x, y) == d.ml(y, x));
        for (int z = 0; z < d.n; ++z) {
          CHECK(d.ml(d.ml(x, y), z) == d.ml(x, d.ml(y, z)));
          CHECK(ord.leq(d.ml(x, y), z) == ord.leq(x, d.im(y, z)));
        }
      }
    }
    // h(a -> b) = h(a) -> h(b) pointwise
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        CHECK(fc.embedding[a.im(x, y)] == d.im(fc.embedding[x], fc.embedding[y]));
  }
}

TEST_CASE("frame completion rejects oversized input") {
  FiniteAlgebra big = direct_product(gen_gn(2), gen_gn(2));
  CHECK_THROWS_WITH_AS(frame_completion(big), doctest::Contains("SIZE-LIMIT"),
                       AlgebraError);
}

TEST_CASE("phase completion of G2: principal ideals and the embedding laws") {
  FiniteAlgebra g2 = girard_reduct(gen_gn(2));
  PhaseCompletion pc = phase_completion(g2);
  CHECK(pc.embedding_report.pass);
  CHECK(check_profile(pc.algebra, Profile::BoundedGirard).pass);
  // C(G2) is G2 again: four closed sets, the principal ideals
  CHECK(pc.algebra.n == 4);
  // ~(a] = (~a] comes out as the neg table matching the embedding
  const FiniteAlgebra& c = pc.algebra;
  for (int x = 0; x < g2.n; ++x)
    CHECK(c.ng(pc.embedding[x]) == pc.embedding[g2.im(x, *g2.zero)]);
}

TEST_CASE("phase completion laws over the girard corpus of size <= 4") {
  for (const auto& a : testing::corpus(Profile::Girard, 4)) {
    PhaseCompletion pc = phase_completion(a);
    CHECK(pc.embedding_report.pass);
    CHECK(check_profile(pc.algebra, Profile::BoundedGirard).pass);
  }
}

TEST_CASE("phase completion of the trivial girard algebra") {
  FiniteAlgebra t;
  t.name = "triv";
  t.n = 1;
  t.elems = {"e"};
  t.meet = std::vector<int>{0};
  t.join = std::vector<int>{0};
  t.mult = std::vector<int>{0};
  t.imp = std::vector<int>{0};
  t.one = 0;
  t.zero = 0;
  PhaseCompletion pc = phase_completion(t);
  CHECK(pc.embedding_report.pass);
}

TEST_CASE("phase completion rejects oversized input") {
  FiniteAlgebra big =
      direct_product(direct_product(gen_gn(2), gen_gn(2)), gen_gn(1));
  CHECK_THROWS_WITH_AS(phase_completion(big), doctest::Contains("SIZE-LIMIT"),
                       AlgebraError);
}

TEST_CASE("conservativity: G2 reduct, trivial algebra, corpus of size <= 3") {
  CHECK(conservativity_check(girard_reduct(gen_gn(2))).pass);
  FiniteAlgebra t;
  t.name = "triv";
  t.n = 1;
  t.elems = {"e"};
  t.meet = std::vector<int>{0};
  t.join = std::vector<int>{0};
  t.mult = std::vector<int>{0};
  t.imp = std::vector<int>{0};
  t.one = 0;
  t.zero = 0;
  CHECK(conservativity_check(t).pass);
  for (const auto& a : testing::corpus(Profile::Girard, 3))
    CHECK(conservativity_check(a).pass);
}

TEST_CASE("the closed-set algebra's idempotents below one induce a modality") {
  for (const auto& a : testing::corpus(Profile::Girard, 3)) {
    PhaseCompletion pc = phase_completion(a);
    const FiniteAlgebra& c = pc.algebra;
    Order ord = order_from_meet(c);
    Subset h = 0;
    for (int x = 0; x < c.n; ++x)
      if (ord.leq(x, *c.one) && c.ml(x, x) == x) h |= 1u << x;
    CHECK(valid_modality_subset(c, h));
    FiniteAlgebra g = induce_modality(c, h);
    CHECK(check_profile(g, Profile::Girale).pass);
  }
}
