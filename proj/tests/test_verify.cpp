#include <gtest/gtest.h>

#include "clusteraut/verify.hpp"

using namespace clusteraut;

TEST(Verify, IdentitiesPass) {
  for (auto [a, b] : {std::pair{2, 1}, {2, 2}, {3, 2}}) EXPECT_TRUE(verify_suite(Suite::Identities, Params(a, b)).all_pass());
}

TEST(Verify, TheoremForG2) {
  const Report r = verify_suite(Suite::Theorem, Params(3, 1));
  EXPECT_TRUE(r.all_pass());
  const std::string text = report_to_text(r);
  EXPECT_NE(text.find("24 distinct maps"), std::string::npos);
  EXPECT_NE(text.find("|s2 s3| = 4"), std::string::npos);
}

TEST(Verify, TheoremForInfinite) { EXPECT_TRUE(verify_suite(Suite::Theorem, Params(2, 2)).all_pass()); }

TEST(Verify, GeometryForA2) {
  const Report r = verify_suite(Suite::Geometry, Params(1, 1));
  EXPECT_TRUE(r.all_pass());
  EXPECT_NE(report_to_text(r).find("degree 5 (-1,-1,-1,-1,-1)"), std::string::npos);
}

TEST(Verify, ErrataHasThreeConfirmedItems) {
  const Report r = verify_suite(Suite::Errata, Params(1, 1));
  EXPECT_EQ(r.items.size(), 3u);
  EXPECT_TRUE(r.all_pass());
  EXPECT_NE(report_to_text(r).find("discrepancies confirmed: 3"), std::string::npos);
}

TEST(Verify, Deterministic) {
  EXPECT_EQ(report_to_json(verify_suite(Suite::Geometry, Params(3, 2))),
            report_to_json(verify_suite(Suite::Geometry, Params(3, 2))));
  EXPECT_EQ(parse_suite("errata"), Suite::Errata);
  EXPECT_EQ(parse_suite("nope"), std::nullopt);
}
