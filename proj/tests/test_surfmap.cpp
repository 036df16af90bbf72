#include <gtest/gtest.h>

#include "clusteraut/cluster.hpp"
#include "clusteraut/surfmap.hpp"
#include "oracles.hpp"

using namespace clusteraut;

namespace {

LaurentPoly P(std::string_view s) { return parse_poly(s); }

EndoMap W(const Params& p, std::string_view w) { return evaluate_word(p, parse_word(w)); }

}  // namespace

TEST(NormalForm, Examples) {
  const Params p(2, 2);
  EXPECT_EQ(normal_form(p, P("y1*y3")).value(), P("y2^2 + 1"));
  EXPECT_EQ(normal_form(p, P("y2*y4")).value(), P("y3^2 + 1"));
  EXPECT_TRUE(is_normal(normal_form(p, P("y1^3*y2^2*y3^4*y4")).value()));
  EXPECT_THROW(normal_form(p, P("y1^-1")), Error);
}

TEST(NormalForm, AgreesWithSingleStepRewriting) {
  oracle::Rng rng(101);
  for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {4, 1}, {1, 1}}) {
    const Params p(a, b);
    for (int k = 0; k < 80; ++k) {
      const LaurentPoly x = oracle::random_poly(rng, 6, 3);
      EXPECT_EQ(normal_form(p, x).value(), oracle::rewrite_nf(p, x, rng));
    }
  }
}

TEST(NormalForm, IdealIsKilled) {
  oracle::Rng rng(202);
  const Params p(3, 2);
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly x = oracle::random_poly(rng, 5, 3);
    EXPECT_EQ(normal_form(p, x + oracle::random_ideal_element(p, rng)), normal_form(p, x));
  }
}

TEST(Generators, AreEndomorphisms) {
  oracle::Rng rng(9);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Params p(a, b);
      for (auto g : {Generator::sigma2(), Generator::sigma3(), Generator::scaling(1, 0), Generator::scaling(0, b - 1)}) {
        const EndoMap f = make_generator(p, g);
        EXPECT_TRUE(is_endomorphism(f)) << to_string(g);
        EXPECT_TRUE(oracle::maps_surface_to_itself(f, 5, rng)) << to_string(g);
      }
    }
  }
}

TEST(Generators, SwapNeedsEqualParams) {
  try {
    make_generator(Params(2, 3), Generator::swap());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SwapRequiresEqualParams);
  }
  EXPECT_TRUE(is_endomorphism(make_generator(Params(3, 3), Generator::swap())));
}

TEST(Generators, LiteralSigma3FailsWhenAIsNotB) {
  EXPECT_FALSE(is_endomorphism(make_generator(Params(3, 1), Generator::sigma3(), SumBound::Literal)));
  EXPECT_TRUE(is_endomorphism(make_generator(Params(2, 2), Generator::sigma3(), SumBound::Literal)));
}

TEST(Generators, Involutions) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Params p(a, b);
      EXPECT_TRUE(equal(W(p, "s2 s2"), EndoMap::identity(p)));
      EXPECT_TRUE(equal(W(p, "s3 s3"), EndoMap::identity(p)));
    }
  }
}

TEST(Compose, ShiftByTwo) {
  // s2 after s3 sends y_n to y_{n+2}
  const Params p(2, 1);
  const EndoMap f = W(p, "s2 s3");
  for (int i = 0; i < 4; ++i) EXPECT_EQ(f.images()[i], cluster_element(p, i + 3)) << i;
  EXPECT_EQ(to_seed_laurent(cluster_element(p, 5)), cluster_var(p, 5).value);
}

TEST(Compose, AgreesWithPointEvaluation) {
  oracle::Rng rng(77);
  for (auto [a, b] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
    const Params p(a, b);
    for (int k = 0; k < 8; ++k) {
      const Word w1 = oracle::random_word(p, rng, 3), w2 = oracle::random_word(p, rng, 3);
      const EndoMap f = evaluate_word(p, w1), g = evaluate_word(p, w2);
      Word both = w1;
      both.insert(both.end(), w2.begin(), w2.end());
      const EndoMap fg = compose(f, g);
      EXPECT_TRUE(equal(fg, evaluate_word(p, both)));
      // (f o g)(x) = f(g(x)) read as pullbacks: evaluate g's images on f's image point
      const oracle::Field fld = oracle::make_field(p.m(), rng);
      const auto pt = oracle::random_point(p, fld, rng);
      const auto gf = oracle::evaluate(g, fld, pt);
      if (!gf) continue;
      const auto lhs = oracle::evaluate(fg, fld, pt);
      const auto rhs = oracle::evaluate(f, fld, *gf);
      if (rhs) EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(SigmaP, ReflectsSequence) {
  const Params p(2, 2);
  EXPECT_TRUE(equal(make_sigma_p(p, 3), W(p, "s3")));
  EXPECT_TRUE(equal(make_sigma_p(p, 2), W(p, "s2")));
  EXPECT_TRUE(equal(evaluate_word(p, parse_word("sp(3)")), W(p, "s3")));
  const EndoMap s4 = make_sigma_p(p, 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(s4.images()[i], cluster_element(p, 8 - (i + 1)));
}

TEST(Order, FiniteTypes) {
  EXPECT_EQ(order_of(W(Params(1, 1), "s2 s3"), 20), 5);
  EXPECT_EQ(order_of(W(Params(2, 1), "s2 s3"), 20), 3);
  EXPECT_EQ(order_of(W(Params(3, 1), "s2 s3"), 20), 4);
  EXPECT_EQ(order_of(W(Params(2, 2), "s2 s3"), 4), std::nullopt);
}

TEST(Degrees, ValuationMethodMatchesExplicitComposition) {
  for (auto [a, b, n_max] : {std::tuple{2, 2, 5}, {4, 1, 4}, {3, 2, 3}, {2, 3, 3}, {1, 1, 5}}) {
    const Params p(a, b);
    const auto deg = rotation_image_degrees(p, n_max);
    EndoMap f = EndoMap::identity(p);
    const EndoMap r = W(p, "s2 s3");
    for (int n = 1; n <= n_max; ++n) {
      f = compose(f, r);
      EXPECT_EQ(image_degrees(f), deg[n - 1]) << a << "," << b << " n=" << n;
    }
  }
  const Params p(3, 2);
  for (std::int64_t n = -4; n <= 8; ++n) {
    EXPECT_EQ(cluster_degree(p, n), weighted_degree(cluster_element(p, n).value(), p)) << n;
  }
}

TEST(Words, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_word("s2 s3")), "s2 s3");
  EXPECT_EQ(to_string(parse_word("m(1,0) h")), "m(1,0) h");
  EXPECT_EQ(to_string(parse_word("r^2")), "s2 s3 s2 s3");
  EXPECT_EQ(to_string(parse_word("r^-1 id")), "s3 s2");
  EXPECT_THROW(parse_word("s4"), ParseError);
  EXPECT_THROW(parse_word("s2s3"), ParseError);
  for (const char* w : {"s2 m(1,2) s3 h", "", "s3"}) EXPECT_EQ(to_string(parse_word(to_string(parse_word(w)))), to_string(parse_word(w)));
}

TEST(Words, DihedralWordIsReduced) {
  EXPECT_EQ(to_string(dihedral_word(2, true)), "s2 s3 s2 s3 s2");
  EXPECT_EQ(to_string(dihedral_word(-2, true)), "s3 s2 s3");
  EXPECT_EQ(to_string(dihedral_word(-1, false)), "s3 s2");
}

TEST(Json, RoundTrip) {
  for (auto [a, b, w] : {std::tuple{2, 2, "s2 m(1,1) s3 h"}, {3, 2, "s3 s2 s3"}, {1, 1, "s2"}}) {
    const Params p(a, b);
    const EndoMap f = W(p, w);
    const std::string js = endo_to_json(f);
    const EndoMap g = endo_from_json(js);
    EXPECT_TRUE(equal(f, g));
    EXPECT_EQ(endo_to_json(g), js);
  }
  EXPECT_THROW(endo_from_json("{\"a\":1"), ParseError);
  EXPECT_THROW(endo_from_json("{\"a\":1,\"b\":1,\"images\":[]}"), Error);
}

TEST(Factorize, RoundTrip) {
  oracle::Rng rng(31);
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}, {4, 1}}) {
    const Params p(a, b);
    const Factorizer fz(p);
    for (int k = 0; k < 15; ++k) {
      const EndoMap f = evaluate_word(p, oracle::random_word(p, rng, 6));
      EXPECT_TRUE(equal(evaluate_word(p, fz.factorize(f, 16)), f));
    }
  }
}

TEST(Factorize, FailsOnNonAutomorphism) {
  const Params p(2, 2);
  const EndoMap f = EndoMap::from_images(p, {P("y1"), P("y2"), P("y3"), P("y4 + y1*y2*y3")});
  try {
    factorize(f, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FactorizationFailed);
  }
}
