#include <gtest/gtest.h>

#include <cmath>

#include "qbound/errors.hpp"
#include "qbound/fitting.hpp"

using namespace qbound;

TEST(Fit, ExactExponential) {
  std::vector<std::pair<std::size_t, double>> pts;
  for (std::size_t m = 1; m <= 6; ++m) pts.emplace_back(m, std::exp(1.0 + 2.0 * m));
  const FitResult f = fit_log_linear(pts);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.growth_base, std::exp(2.0), 1e-10);
  EXPECT_NEAR(f.residual_sum_squares, 0.0, 1e-20);
}

TEST(Fit, ConstantCounts) {
  const FitResult f = fit_log_linear({{3, 7.0}, {4, 7.0}, {5, 7.0}});
  EXPECT_NEAR(f.slope, 0.0, 1e-15);
  EXPECT_NEAR(f.growth_base, 1.0, 1e-15);
}

TEST(Fit, ScalingChangesOnlyIntercept) {
  const std::vector<std::pair<std::size_t, double>> pts = {{2, 3.0}, {3, 11.0}, {4, 20.0}, {5, 71.0}};
  std::vector<std::pair<std::size_t, double>> scaled = pts;
  for (auto& [m, c] : scaled) c *= 8.0;
  const FitResult a = fit_log_linear(pts);
  const FitResult b = fit_log_linear(scaled);
  EXPECT_NEAR(a.slope, b.slope, 1e-12);
  EXPECT_NEAR(b.intercept - a.intercept, std::log(8.0), 1e-12);
  EXPECT_NEAR(a.residual_sum_squares, b.residual_sum_squares, 1e-12);
}

TEST(Fit, ZeroCountsSkipped) {
  const FitResult f = fit_log_linear({{1, 0.0}, {2, 4.0}, {3, 0.0}, {4, 16.0}, {6, 64.0}});
  EXPECT_EQ(f.weights_used, (std::vector<std::size_t>{2, 4, 6}));
  EXPECT_NEAR(f.growth_base, 2.0, 1e-12);
  EXPECT_EQ(f.m_min, 2u);
  EXPECT_EQ(f.m_max, 6u);
}

TEST(Fit, NeedsThreePoints) {
  EXPECT_THROW(fit_log_linear({{1, 1.0}, {2, 0.0}, {3, 5.0}}), ValidationError);
}

TEST(Fit, CensusFieldSelection) {
  ClusterCensus census;
  for (std::size_t m = 1; m <= 5; ++m) census.rows.push_back({m, 1, m * m, 0, 1u << m});
  const FitResult f = fit_zeta(census, CountField::kPaths, 1, 5);
  EXPECT_NEAR(f.growth_base, 2.0, 1e-12);
  EXPECT_THROW(fit_zeta(census, CountField::kIrreducibleNonstabilizer, 1, 5), ValidationError);
  EXPECT_EQ(parse_count_field("irreducible"), CountField::kIrreducible);
  EXPECT_THROW(parse_count_field("bogus"), ValidationError);
}
