#include <gtest/gtest.h>

#include <cmath>

#include "negcurv/errors.hpp"
#include "negcurv/lipschitz.hpp"

using namespace negcurv;

TEST(BiLipschitz, IdenticalAndScaledMetrics) {
  const MetricSpaceHandle D = spaces::disc4(5.0);
  const auto same = bilipschitz_ratio(D.distance, D.distance, D.sampler, 500, 1);
  EXPECT_EQ(same.lo, 1.0);
  EXPECT_EQ(same.hi, 1.0);
  EXPECT_EQ(same.certified_L(), 1.0);
  const MetricSpaceHandle D2 = spaces::scaled(D, 2.0);
  const auto twice = bilipschitz_ratio(D.distance, D2.distance, D.sampler, 500, 1);
  EXPECT_DOUBLE_EQ(twice.lo, 2.0);
  EXPECT_DOUBLE_EQ(twice.hi, 2.0);
  EXPECT_EQ(twice.used_pairs, 500u);
}

TEST(BiLipschitz, L1VersusL2Product) {
  const ProductSpace l1{spaces::disc4(5.0), spaces::disc4(5.0), Combiner::l1};
  const ProductSpace l2{spaces::disc4(5.0), spaces::disc4(5.0), Combiner::l2};
  const MetricSpaceHandle a = l2.handle(), b = l1.handle();
  const auto r = bilipschitz_ratio(a.distance, b.distance, a.sampler, 5000, 2);
  EXPECT_GE(r.lo, 1.0);
  EXPECT_LE(r.hi, std::sqrt(2.0) + 1e-12);
  EXPECT_GT(r.hi, std::sqrt(2.0) - 0.01);
  EXPECT_LE(r.certified_L(), std::sqrt(2.0) + 1e-12);
}

TEST(BiLipschitz, SkipsCoincidentPairs) {
  const Sampler constant = [](CounterRng&) { return Point{1.0}; };
  const MetricSpaceHandle L = spaces::line(5.0);
  const auto r = bilipschitz_ratio(L.distance, L.distance, constant, 10, 0);
  EXPECT_EQ(r.used_pairs, 0u);
  EXPECT_TRUE(std::isnan(r.lo));
}

TEST(Schwarz, Constants) {
  const auto k = SchwarzConstants::make(-2.0, -4.0);
  EXPECT_DOUBLE_EQ(k.L(), std::sqrt(2.0));
  EXPECT_EQ(SchwarzConstants::make(-4.0, -4.0).L(), 1.0);
  EXPECT_THROW(SchwarzConstants::make(0.0, -4.0), DomainError);
  EXPECT_THROW(SchwarzConstants::make(-1.0, 2.0), DomainError);
  EXPECT_THROW(SchwarzConstants::make(1.0, 1.0), DomainError);
  const auto w = SchwarzConstants::with_lipschitz(-4.0, 0.5);
  EXPECT_EQ(w.L(), 0.5);
  EXPECT_DOUBLE_EQ(w.c(), -16.0);
  EXPECT_THROW(SchwarzConstants::with_lipschitz(-4.0, 0.0), DomainError);
}

TEST(Schwarz, IdentityOfDiscAttainsBound) {
  const MetricSpaceHandle D = spaces::disc4(8.0);
  const auto rep = schwarz_bound_check([](const Point& p) { return p; }, D, D,
                                       SchwarzConstants::make(-4.0, -4.0), 1000, 3);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.max_slack, 0.0);
  EXPECT_EQ(rep.min_slack, 0.0);
}

TEST(Schwarz, ProjectionsOfDiscProduct) {
  const ProductSpace P = disc_product(10.0);
  const MetricSpaceHandle PH = P.handle();
  const auto k = SchwarzConstants::make(-4.0, -4.0);
  for (const PointMap& pi : {first_projection(P), second_projection(P)}) {
    const auto rep = schwarz_bound_check(pi, PH, P.first, k, 5000, 4);
    EXPECT_TRUE(rep.violations.empty());
    EXPECT_LE(rep.max_slack, 1e-9);
    EXPECT_LT(rep.min_slack, 0.0);
  }
}

TEST(Schwarz, ScaledTargetNeedsLargerConstant) {
  const ProductSpace P = disc_product(6.0);
  const MetricSpaceHandle PH = P.handle();
  const MetricSpaceHandle target = spaces::scaled(P.first, std::sqrt(2.0));
  const auto tight = schwarz_bound_check(first_projection(P), PH, target,
                                         SchwarzConstants::with_lipschitz(-4.0, std::sqrt(2.0)), 2000, 5);
  EXPECT_TRUE(tight.violations.empty());
  EXPECT_LE(tight.max_slack, 1e-6);
  const auto loose = schwarz_bound_check(first_projection(P), PH, target,
                                         SchwarzConstants::make(-4.0, -4.0), 2000, 5);
  EXPECT_FALSE(loose.violations.empty());
}

TEST(Schwarz, IdentityIntoScaledDiscAttainsBound) {
  const MetricSpaceHandle D = spaces::disc4(10.0);
  const MetricSpaceHandle target = spaces::scaled(D, std::sqrt(2.0));
  const auto rep = schwarz_bound_check([](const Point& p) { return p; }, D, target,
                                       SchwarzConstants::make(-2.0, -4.0), 10000, 6);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_LE(std::abs(rep.max_slack), 1e-6);
  EXPECT_LE(std::abs(rep.min_slack), 1e-6);
}

TEST(KeyLemma, SlacksMatchClosedForms) {
  // With d the l2 product distance and L^2 = 2: (da + db) / (4 d) peaks at
  // sqrt(2)/4 when da = db, and d / (sqrt(2) (da + db)) peaks at 1/sqrt(2)
  // when one factor distance vanishes (pair 1).
  const auto rep = key_lemma_check(disc_product(10.0), SchwarzConstants::make(-2.0, -4.0), 10000, 3);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_DOUBLE_EQ(rep.L, std::sqrt(2.0));
  const double s1 = std::sqrt(2.0) / 4 - 1;
  EXPECT_LE(rep.max_slack_1, s1 + 1e-12);
  EXPECT_GT(rep.max_slack_1, s1 - 0.01);
  EXPECT_NEAR(rep.max_slack_2, 1 / std::sqrt(2.0) - 1, 1e-12);
}

TEST(KeyLemma, WrongConstantIsCaught) {
  const auto rep = key_lemma_check(disc_product(10.0), SchwarzConstants::with_lipschitz(-4.0, 0.5), 100, 3);
  EXPECT_FALSE(rep.violations.empty());
  for (const auto& v : rep.violations) {
    EXPECT_GT(v.lhs, v.rhs);
    EXPECT_GT(v.slack, 0.0);
    EXPECT_TRUE(v.inequality == 1 || v.inequality == 2);
  }
}

TEST(KeyLemma, CoincidentPairHasZeroSides) {
  const auto rep = key_lemma_check(disc_product(5.0), SchwarzConstants::make(-2.0, -4.0), 1, 0);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.max_slack_1, 0.0);
  EXPECT_EQ(rep.max_slack_2, 0.0);
}
