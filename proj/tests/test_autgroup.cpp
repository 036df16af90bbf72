#include <gtest/gtest.h>

#include "clusteraut/autgroup.hpp"
#include "oracles.hpp"

using namespace clusteraut;

namespace {
EndoMap W(const Params& p, std::string_view w) { return evaluate_word(p, parse_word(w)); }
}  // namespace

TEST(Structure, Describe) {
  EXPECT_EQ(structure_of(Params(1, 1))->describe(), "D_10");
  EXPECT_EQ(structure_of(Params(2, 1))->describe(), "D_6 x mu_{2,1}");
  EXPECT_EQ(structure_of(Params(3, 1))->describe(), "D_8 |x mu_{3,1}");
  EXPECT_EQ(structure_of(Params(2, 2))->describe(), "(D_inf x mu_{2,2}) x| Z/2");
  EXPECT_EQ(structure_of(Params(3, 3))->describe(), "(D_inf |x mu_{3,3}) x| Z/2");
  EXPECT_EQ(structure_of(Params(1, 2))->group_order(), 12);
  EXPECT_EQ(structure_of(Params(3, 2))->group_order(), std::nullopt);
}

TEST(Structure, ActionTablesMatchConjugation) {
  for (auto [a, b] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
    const Params p(a, b);
    const ActionTables t = derive_action_tables(p);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        const EndoMap m = make_generator(p, Generator::scaling(i, j));
        const int img = t.sigma2[i * b + j];
        const EndoMap want = make_generator(p, Generator::scaling(img / b, img % b));
        const EndoMap s = make_generator(p, Generator::sigma2());
        EXPECT_TRUE(equal(compose(s, compose(m, s)), want));
      }
    }
  }
}

TEST(Structure, ScalingsCommuteForB2) {
  const Params p(2, 1);
  const EndoMap m = W(p, "m(1,0)");
  for (const char* s : {"s2", "s3"}) {
    const EndoMap g = W(p, s);
    EXPECT_TRUE(equal(compose(m, g), compose(g, m)));
  }
  EXPECT_TRUE(structure_of(p)->scalings_central());
  EXPECT_FALSE(structure_of(Params(3, 1))->scalings_central());
}

TEST(Structure, SwapConjugation) {
  for (int a : {2, 3}) {
    const Params p(a, a);
    EXPECT_TRUE(equal(W(p, "h s2 h"), W(p, "s3")));
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < a; ++j) {
        const std::string w = "h m(" + std::to_string(i) + "," + std::to_string(j) + ") h";
        EXPECT_TRUE(equal(W(p, w), make_generator(p, Generator::scaling(j, i))));
      }
    }
  }
}

TEST(Enumerate, FiniteOrders) {
  EXPECT_EQ(enumerate_finite(structure_of(Params(1, 1))).size(), 10u);
  EXPECT_EQ(enumerate_finite(structure_of(Params(2, 1))).size(), 12u);
  EXPECT_EQ(enumerate_finite(structure_of(Params(3, 1))).size(), 24u);
  EXPECT_EQ(enumerate_finite(structure_of(Params(1, 3))).size(), 24u);
  try {
    enumerate_finite(structure_of(Params(2, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFiniteType);
  }
}

TEST(Enumerate, SwapOfA2IsInsideDihedral) {
  const Params p(1, 1);
  const EndoMap rev = EndoMap::from_images(p, {LaurentPoly::variable(3), LaurentPoly::variable(2),
                                              LaurentPoly::variable(1), LaurentPoly::variable(0)});
  EXPECT_TRUE(equal(rev, W(p, "s2 s3 s2 s3 s2")));
}

TEST(GroupLaw, Homomorphism) {
  oracle::Rng rng(41);
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 2}}) {
    const Params p(a, b);
    const StructurePtr g = structure_of(p);
    for (int k = 0; k < 25; ++k) {
      const Word w = oracle::random_word(p, rng, 5);
      EXPECT_TRUE(equal(to_endo(from_word(g, w)), evaluate_word(p, w))) << to_string(w);
    }
  }
}

TEST(GroupLaw, Axioms) {
  oracle::Rng rng(43);
  for (auto [a, b] : {std::pair{3, 1}, {2, 2}, {3, 3}, {3, 2}}) {
    const StructurePtr g = structure_of(Params(a, b));
    for (int k = 0; k < 40; ++k) {
      const GroupElement x = from_word(g, oracle::random_word(g->params, rng, 6));
      const GroupElement y = from_word(g, oracle::random_word(g->params, rng, 6));
      const GroupElement z = from_word(g, oracle::random_word(g->params, rng, 6));
      EXPECT_EQ(gmul(gmul(x, y), z), gmul(x, gmul(y, z)));
      EXPECT_EQ(gmul(x, ginv(x)), group_identity(g));
      EXPECT_EQ(gmul(group_identity(g), x), x);
      EXPECT_EQ(from_word(g, to_word(x)), x);
    }
  }
}

TEST(GroupLaw, SwapRejectedWhenUnequal) {
  try {
    from_generator(structure_of(Params(3, 2)), Generator::swap());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SwapRequiresEqualParams);
  }
}
