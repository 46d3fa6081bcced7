#include <gtest/gtest.h>

#include "common.hpp"
#include "soliton_lab/errors.hpp"
#include "soliton_lab/pde.hpp"

using namespace soliton_lab;
using namespace soliton_lab::pde;

namespace {
ScalarField2 expr_field(auto f) { return ScalarField2::from_expression(f); }
}  // namespace

TEST(Residuals, AffineFieldVanishesForAllEquations) {
  const auto f = affine_field(3, 2, -1);
  for (double a : {-1.0, 0.0, 2.5})
    for (double b : {-2.0, 0.3}) {
      EXPECT_EQ(born_infeld_residual(f, a, b), CNum(0));
      EXPECT_EQ(maximal_residual(f, a, b), CNum(0));
      EXPECT_EQ(minimal_residual(f, a, b), CNum(0));
    }
}

TEST(Residuals, BornInfeldExamples) {
  EXPECT_LE(std::abs(born_infeld_residual(expr_field([](auto a, auto b) { return log(cosh(b) / cos(a)); }), 0.3, 0.5)), 1e-6);
  EXPECT_LE(std::abs(born_infeld_residual(expr_field([](auto a, auto b) { return kI * a * tanh(b); }), 0.7, 0.2)), 1e-6);
}

TEST(Residuals, MaximalExamples) {
  EXPECT_EQ(maximal_residual(expr_field([](auto, auto) { return CNum(2.0); }), 0.1, 0.2), CNum(0));
  EXPECT_LE(std::abs(maximal_residual(expr_field([](auto a, auto b) { return asinh(sqrt(a * a + b * b)); }), 1, 1)), 1e-6);
  EXPECT_LE(std::abs(maximal_residual(expr_field([](auto a, auto b) { return 0.5 * atan(b / a); }), 1, 0.5)), 1e-6);
}

TEST(Residuals, MinimalExamples) {
  EXPECT_LE(std::abs(minimal_residual(expr_field([](auto a, auto b) { return atan(b / a); }), 1, 1)), 1e-6);
  EXPECT_LE(std::abs(minimal_residual(expr_field([](auto a, auto b) { return log(cos(b) / cos(a)); }), 0.2, 0.3)), 1e-6);
}

TEST(Residuals, NonSolutionIsDetected) {
  const auto f = expr_field([](auto a, auto b) { return a * a + b * b * b; });
  EXPECT_GT(std::abs(born_infeld_residual(f, 0.5, 0.5)), 0.1);
  EXPECT_GT(std::abs(maximal_residual(f, 0.5, 0.5)), 0.1);
}

TEST(Residuals, SpacelikeGradientFlag) {
  EXPECT_TRUE(spacelike_gradient(affine_field(0.3, 0.4, 0), 0, 0));
  EXPECT_FALSE(spacelike_gradient(affine_field(0.8, 0.8, 0), 0, 0));
}

TEST(Wick, RotationsMatchClosedForms) {
  struct Case {
    ScalarField2 f, expected;
    double a, b;
  };
  const double k = 2.0;
  const Case cases[] = {
      {expr_field([k](auto a, auto b) { return (1.0 / k) * atan(b / a); }),
       expr_field([k](auto a, auto b) { return (-kI / k) * atanh(b / a); }), 1.3, 0.4},
      {expr_field([k](auto a, auto b) { return a * tanh(k * b); }),
       expr_field([k](auto a, auto b) { return kI * a * tanh(k * b); }), 0.6, -0.3},
      {expr_field([](auto a, auto b) { return log(cosh(b) / cosh(a)); }),
       expr_field([](auto a, auto b) { return log(cosh(b) / cos(a)); }), 0.5, 1.1},
  };
  for (const auto& c : cases) {
    const auto r = wick_rotate_x(c.f);
    EXPECT_LE(std::abs(r(c.a, c.b) - c.expected(c.a, c.b)), 1e-12);
    EXPECT_LE(std::abs(born_infeld_residual(r, c.a, c.b)), 1e-9);
  }
}

TEST(Wick, TimeRotationMapsMinimalScherkToBornInfeld) {
  const auto f = expr_field([](auto a, auto b) { return log(cos(b) / cos(a)); });
  const auto r = wick_rotate_t(f);
  const auto expected = expr_field([](auto a, auto b) { return log(cosh(b) / cos(a)); });
  for (double a : {-0.7, 0.2, 1.0})
    for (double b : {-1.0, 0.5}) {
      EXPECT_LE(std::abs(r(a, b) - expected(a, b)), 1e-12);
      EXPECT_LE(std::abs(born_infeld_residual(r, a, b)), 1e-9);
    }
  const auto aff = wick_rotate_t(affine_field(1, 2, 3));
  EXPECT_EQ(born_infeld_residual(aff, 0.3, 0.3), CNum(0));
  EXPECT_EQ(minimal_residual(aff, 0.3, 0.3), CNum(0));
}

TEST(Wick, DoubleTimeRotationReflects) {
  const auto f = expr_field([](auto a, auto b) { return exp(a) * sin(b) + b * b * b; });
  const auto r = wick_rotate_t(wick_rotate_t(f));
  for (double b : {-0.8, 0.1, 1.3}) EXPECT_LE(std::abs(r(0.4, b) - f(0.4, -b)), 1e-12);
}

TEST(Wick, OpaqueFieldUnsupported) {
  const auto f = ScalarField2::from_values([](double a, double b) { return CNum(a + b); });
  EXPECT_THROW(wick_rotate_x(f), UnsupportedEvaluator);
  EXPECT_THROW(wick_rotate_t(f), UnsupportedEvaluator);
}

TEST(Catalog, EverySolutionOnItsGrid) {
  for (const auto& e : catalog()) {
    const auto exact = residual_on_grid(e.name, e.field, e.equation, e.grid);
    EXPECT_LE(exact.max_abs, 1e-6) << e.name;
    EXPECT_EQ(exact.points.size() + exact.excluded_count, 41u * 41u) << e.name;
    const auto fd = residual_on_grid(e.name, e.field.with_backend(CentralDiff{1e-4}), e.equation, e.grid);
    EXPECT_LE(fd.max_abs, 1e-5) << e.name;
  }
}

TEST(Catalog, HelicoidParameterK) {
  for (double k : {0.5, 2.0, 3.0})
    for (const char* name : {"helicoid_first_kind", "helicoid_second_kind", "wick_helicoid_first_kind",
                             "wick_helicoid_second_kind"}) {
      const auto e = find_solution(name, k);
      EXPECT_LE(residual_on_grid(e.name, e.field, e.equation, e.grid).max_abs, 1e-6) << name << " k=" << k;
    }
}

TEST(Catalog, WickClosureOnPartnerDomains) {
  for (const auto& e : catalog()) {
    if (e.equation != Equation::Maximal) continue;
    ASSERT_TRUE(e.wick_partner) << e.name;
    const auto partner = find_solution(*e.wick_partner);
    const auto rotated = wick_rotate_x(e.field).with_clearance(
        [p = partner.field](double a, double b) { return p.clearance(a, b); });
    const auto rep = residual_on_grid(e.name, rotated, Equation::BornInfeld, partner.grid);
    EXPECT_LE(rep.max_abs, 1e-6) << e.name;
    // Same function as the catalog's Wick entry.
    for (std::size_t k = 0; k < rep.points.size(); k += 37) {
      const auto [a, b] = rep.points[k];
      EXPECT_LE(std::abs(rotated(a, b) - partner.field(a, b)), 1e-10) << e.name;
    }
  }
}

TEST(Catalog, WickScherkConditionallyReal) {
  const auto e = find_solution("wick_scherk");
  for (const auto& [a, b] : e.grid.points())
    if (std::cos(a) > 0) EXPECT_LE(std::abs(e.field(a, b).imag()), 1e-12);
  EXPECT_GT(std::abs(e.field(2.0, 0.0).imag()), 1.0);
}

TEST(Catalog, ReportInvariants) {
  const auto e = find_solution("lorentzian_catenoid");
  const GridSpec g = GridSpec::parse("-1:1:-1:1:21:21");
  const auto rep = residual_on_grid(e.name, e.field, e.equation, g);
  EXPECT_EQ(rep.excluded_count, 1);  // the cone point
  EXPECT_EQ(rep.points.size() + rep.excluded_count, 441u);
  double m = 0;
  for (auto r : rep.residuals) m = std::max(m, std::abs(r));
  EXPECT_EQ(m, rep.max_abs);
  EXPECT_EQ(rep.backend, "exact_jet");
  const auto opaque = ScalarField2::from_values([](double a, double b) { return CNum(a + b); });
  EXPECT_EQ(residual_on_grid("x", opaque, Equation::Maximal, g).backend, "central_diff(h=0.0001)+fallback");
}

TEST(Catalog, UnknownNameThrows) { EXPECT_THROW(find_solution("nope"), UnknownSolution); }

TEST(Catalog, EquationNames) {
  for (auto eq : {Equation::BornInfeld, Equation::Maximal, Equation::Minimal})
    EXPECT_EQ(equation_from_string(to_string(eq)), eq);
}
