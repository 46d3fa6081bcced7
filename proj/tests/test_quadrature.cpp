#include <gtest/gtest.h>

#include "common.hpp"
#include "soliton_lab/errors.hpp"
#include "soliton_lab/quadrature.hpp"

using namespace soliton_lab;
using namespace soliton_lab::quadrature;

TEST(GaussKronrod, PolynomialIsExact) {
  const auto r = gauss_kronrod([](double x) { return CNum(x * x * x - 2 * x, x); }, -1, 2);
  EXPECT_NEAR(std::abs(r.value - CNum(15.0 / 4 - 3, 1.5)), 0, 1e-14);
  EXPECT_EQ(r.evaluations, 15);
}

TEST(GaussKronrod, AdaptsToPeakedIntegrand) {
  const auto r = gauss_kronrod([](double x) { return CNum(1.0 / (1e-4 + x * x)); }, -1, 1);
  EXPECT_NEAR(r.value.real(), 2.0 / 1e-2 * std::atan(1.0 / 1e-2), 1e-9);
  EXPECT_GT(r.evaluations, 15);
}

TEST(Contour, LoopAroundPoleGivesResidue) {
  const std::vector<CNum> square = {CNum(1, -1), CNum(1, 1), CNum(-1, 1), CNum(-1, -1), CNum(1, -1)};
  const auto r = path_integral([](CNum w) { return 1.0 / w; }, square);
  EXPECT_NEAR(std::abs(r.value - CNum(0, 2 * std::numbers::pi)), 0, 1e-12);
}

TEST(Contour, SegmentIntegralOfEntireFunction) {
  const CNum a(0.2, -0.5), b(-1.1, 0.9);
  const auto r = segment_integral([](CNum w) { return std::exp(w); }, a, b);
  EXPECT_NEAR(std::abs(r.value - (std::exp(b) - std::exp(a))), 0, 1e-13);
}

TEST(PathPlanning, StraightWhenClear) {
  const std::vector<CNum> poles = {CNum(0, 1)};
  const auto p = plan_path(2.0, -2.0, poles);
  ASSERT_EQ(p.size(), 2u);
}

TEST(PathPlanning, DetourKeepsMargin) {
  const std::vector<CNum> poles = {0.0, 1.0, -1.0, CNum(0, 1), CNum(0, -1)};
  const PathOptions opts;
  const auto p = plan_path(2.0, -2.0, poles, opts);
  EXPECT_GT(p.size(), 2u);
  EXPECT_EQ(p.front(), CNum(2.0));
  EXPECT_EQ(p.back(), CNum(-2.0));
  for (std::size_t i = 1; i < p.size(); ++i)
    for (CNum q : poles) EXPECT_GE(segment_distance(q, p[i - 1], p[i]), opts.pole_margin);
}

TEST(PathPlanning, EndpointPoleIsDomainError) {
  const std::vector<CNum> poles = {1.0};
  EXPECT_THROW(plan_path(2.0, 1.0, poles), DomainError);
}

TEST(PathPlanning, BudgetExhaustedIsPathError) {
  const std::vector<CNum> poles = {0.0};
  PathOptions opts;
  opts.max_depth = 0;
  EXPECT_THROW(plan_path(-1.0, 1.0, poles, opts), PathError);
}

TEST(PathPlanning, SegmentDistance) {
  EXPECT_DOUBLE_EQ(segment_distance(CNum(0, 1), -1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(segment_distance(CNum(3, 0), -1.0, 1.0), 2.0);
}
