#include <gtest/gtest.h>

#include "clusteraut/cluster.hpp"
#include "oracles.hpp"

using namespace clusteraut;

namespace {
LaurentPoly P(std::string_view s) { return parse_poly(s); }
}  // namespace

TEST(ClusterVar, SmallIndicesForA2) {
  const Params p(1, 1);
  EXPECT_EQ(cluster_var(p, 1).value, P("y1"));
  EXPECT_EQ(cluster_var(p, 3).value, P("y1^-1*y2 + y1^-1"));
  EXPECT_EQ(cluster_var(p, 4).value, P("y2^-1 + y1^-1 + y1^-1*y2^-1"));
  EXPECT_EQ(cluster_var(p, 6).value, P("y1"));
  EXPECT_EQ(cluster_var(p, 0).value, P("y2^-1*y1 + y2^-1"));
}

TEST(ClusterVar, MatchesRationalValues) {
  for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {4, 1}, {1, 3}}) {
    const Params p(a, b);
    const auto seq = oracle::rational_sequence(p, -4, 7, mpq_class(2, 3), mpq_class(5, 7));
    for (std::int64_t n = -4; n <= 7; ++n) {
      const LaurentPoly v = cluster_var(p, n).value;
      const std::array<mpq_class, 2> at{mpq_class(2, 3), mpq_class(5, 7)};
      mpq_class sum = 0;
      for (const auto& t : v.terms()) {
        mpq_class term(t.coeff);
        for (int i = 0; i < 2; ++i) {
          for (int k = 0; k < t.mono.e[i]; ++k) term *= at[i];
          for (int k = 0; k < -t.mono.e[i]; ++k) term /= at[i];
        }
        sum += term;
      }
      EXPECT_EQ(sum, seq.at(n)) << a << "," << b << " n=" << n;
    }
  }
}

TEST(ClusterVar, ExchangeRelationHolds) {
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    for (std::int64_t n = -3; n <= 5; ++n) EXPECT_TRUE(check_relation(Params(a, b), n)) << a << b << n;
  }
}

TEST(ClusterVar, BudgetStopsGrowth) {
  try {
    cluster_var(Params(3, 3), 12, Budget{500});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Period, FiniteTypes) {
  EXPECT_EQ(detect_period(Params(1, 1), 50), 5);
  EXPECT_EQ(detect_period(Params(2, 1), 50), 6);
  EXPECT_EQ(detect_period(Params(1, 2), 50), 6);
  EXPECT_EQ(detect_period(Params(3, 1), 50), 8);
  EXPECT_EQ(detect_period(Params(1, 3), 50), 8);
  EXPECT_EQ(detect_period(Params(2, 2), 50), std::nullopt);
  EXPECT_THROW(detect_period(Params(1, 1), 1), Error);
}

TEST(Period, AgreesWithRationalOracle) {
  // exact rationals grow exponentially in height once ab >= 5
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const int n_max = a * b <= 4 ? 30 : 10;
      EXPECT_EQ(detect_period(Params(a, b), n_max), oracle::rational_period(Params(a, b), n_max)) << a << "," << b;
    }
  }
}

TEST(Identity, CorrectedBoundHoldsLiteralFailsOffDiagonal) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      EXPECT_TRUE(verify_identity_y0_y5(Params(a, b), SumBound::Corrected));
      EXPECT_EQ(verify_identity_y0_y5(Params(a, b), SumBound::Literal), a == b) << a << "," << b;
    }
  }
}

TEST(Positivity, Observed) {
  EXPECT_TRUE(has_positive_coefficients(cluster_var(Params(2, 2), 7).value));
  EXPECT_FALSE(has_positive_coefficients(P("y1 - 1")));
}
