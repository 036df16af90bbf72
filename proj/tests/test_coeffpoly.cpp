#include <gtest/gtest.h>

#include "clusteraut/coeffpoly.hpp"
#include "clusteraut/errors.hpp"
#include "clusteraut/poly_kernels.hpp"
#include "oracles.hpp"

using namespace clusteraut;

namespace {

LaurentPoly P(std::string_view s) { return parse_poly(s); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Params, RejectsNonPositive) {
  EXPECT_THROW(Params(0, 1), Error);
  EXPECT_EQ(Params(4, 6).m(), 12);
  EXPECT_EQ(Params(3, 2).weight(), (std::array<std::int64_t, 4>{3, 1, 1, 2}));
}

TEST(LaurentPoly, ParsePrintRoundTrip) {
  for (const char* src : {"y1^-1*y2 + 1", "3*y1^2*y3 - y4 + 7", "0", "-y2^-3"}) {
    const LaurentPoly p = P(src);
    EXPECT_EQ(parse_poly(to_string(p)), p) << src;
  }
  EXPECT_EQ(P("y1^-1*y2 + 1").size(), 2u);
}

TEST(LaurentPoly, SurrogateCoefficients) {
  const CoeffRingId r4 = CoeffRingId::surrogate(4);
  const LaurentPoly p = parse_poly("t^2*y2", r4);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].tpow, 2u);
  // t^4 = 1
  EXPECT_EQ(pow(parse_poly("t*y1", r4), 4), parse_poly("y1^4", r4));
}

TEST(LaurentPoly, ParseErrors) {
  try {
    P("y5");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(P("y1 +"), ParseError);
}

TEST(LaurentPoly, Errors) {
  EXPECT_EQ(code_of([] { pow(P("y1 + 1"), -1); }), Errc::NegativePower);
  EXPECT_EQ(code_of([] { exact_div(P("y1 + 1"), P("y1 - 1")); }), Errc::NotDivisible);
  EXPECT_EQ(code_of([] { exact_div(P("y1"), P("0")); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] {
              (void)(parse_poly("t*y1", CoeffRingId::surrogate(3)) + parse_poly("t*y1", CoeffRingId::surrogate(2)));
            }),
            Errc::RingMismatch);
  EXPECT_EQ(code_of([] { mul(P("y1 + y2 + y3"), P("y1 + y2 + y4"), Budget{3}); }), Errc::BudgetExceeded);
}

TEST(LaurentPoly, DivisionUndoesProduct) {
  oracle::Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly a = oracle::random_poly(rng, 6, 3), b = oracle::random_poly(rng, 4, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(LaurentPoly, RingAxioms) {
  oracle::Rng rng(11);
  for (int k = 0; k < 60; ++k) {
    const LaurentPoly a = oracle::random_poly(rng, 5, 3), b = oracle::random_poly(rng, 5, 3),
                      c = oracle::random_poly(rng, 5, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(LaurentPoly, SubstituteIsRingMap) {
  oracle::Rng rng(3);
  const std::array<LaurentPoly, 4> img{P("y2 + 1"), P("y1*y3"), P("2"), P("y4 - y1")};
  for (int k = 0; k < 30; ++k) {
    const LaurentPoly a = oracle::random_poly(rng, 4, 2), b = oracle::random_poly(rng, 4, 2);
    EXPECT_EQ(substitute(a * b, img), substitute(a, img) * substitute(b, img));
  }
}

TEST(LaurentPoly, WeightedDegree) {
  const Params p(3, 2);
  EXPECT_EQ(weighted_degree(P("y1*y4 + y2^7"), p), 7);
  EXPECT_EQ(weighted_degree(P("y1^2*y4"), p), 8);
}

TEST(Kernels, SerialAndParallelAgree) {
  oracle::Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const LaurentPoly a = oracle::random_poly(rng, 300, 6), b = oracle::random_poly(rng, 200, 6);
    EXPECT_EQ(kernels::mul_serial(a.terms(), b.terms(), 1, 1u << 30),
              kernels::mul_parallel(a.terms(), b.terms(), 1, 1u << 30));
  }
  const CoeffRingId r6 = CoeffRingId::surrogate(6);
  const LaurentPoly a = parse_poly("t*y1 + t^5*y2 + 3*y3^2 - t^2", r6);
  const LaurentPoly b = pow(a, 5);
  EXPECT_EQ(kernels::mul_serial(a.terms(), b.terms(), 6, 1u << 30),
            kernels::mul_parallel(a.terms(), b.terms(), 6, 1u << 30));
}
