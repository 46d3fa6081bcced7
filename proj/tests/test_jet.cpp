#include <gtest/gtest.h>

#include "common.hpp"
#include "soliton_lab/errors.hpp"
#include "soliton_lab/field.hpp"
#include "soliton_lab/lvec3.hpp"

using namespace soliton_lab;
using testing_support::Rng;

TEST(LorentzInner, SignatureExamples) {
  EXPECT_EQ(lorentz_inner(RVec3{1, 0, 0}, RVec3{1, 0, 0}), 1.0);
  EXPECT_EQ(lorentz_inner(RVec3{0, 0, 1}, RVec3{0, 0, 1}), -1.0);
  EXPECT_EQ(lorentz_inner(RVec3{1, 0, 1}, RVec3{1, 0, 1}), 0.0);
}

TEST(LorentzInner, BilinearAndSymmetric) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    RVec3 a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    RVec3 b{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    RVec3 c{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double s = rng.uniform(-3, 3);
    EXPECT_NEAR(lorentz_inner(a, b), lorentz_inner(b, a), 1e-14);
    EXPECT_NEAR(lorentz_inner(s * a + b, c), s * lorentz_inner(a, c) + lorentz_inner(b, c), 1e-12);
  }
}

TEST(LorentzInner, UnitHyperbolaInTimelikePlane) {
  for (double s = -3; s <= 3; s += 0.25) {
    const RVec3 v{std::cosh(s), 0, std::sinh(s)};
    EXPECT_NEAR(lorentz_inner(v, v), 1.0, 1e-12);
  }
}

TEST(CNumOps, ConjugationIsInvolution) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const CNum z(rng.uniform(-5, 5), rng.uniform(-5, 5));
    EXPECT_EQ(std::conj(std::conj(z)), z);
  }
}

TEST(CNumOps, DivisionByZeroIsAnError) {
  EXPECT_THROW(checked_div(1.0, 0.0), DomainError);
  EXPECT_THROW(Jet2::variable_x(0.0) / Jet2(0.0), DomainError);
}

TEST(Jet2Arithmetic, BilinearField) {
  const auto f = ScalarField2::from_expression([](auto a, auto b) { return a * b; });
  const Jet2 j = jet(f, 2, 3);
  EXPECT_EQ(j.v, CNum(6));
  EXPECT_EQ(j.vx, CNum(3));
  EXPECT_EQ(j.vt, CNum(2));
  EXPECT_EQ(j.vxt, CNum(1));
  EXPECT_EQ(j.vxx, CNum(0));
  EXPECT_EQ(j.vtt, CNum(0));
}

TEST(Jet2Arithmetic, ConstantFieldHasZeroPartials) {
  const auto f = ScalarField2::from_expression([](auto, auto) { return CNum(4.5, -1); });
  for (const Backend& be : {Backend{ExactJet{}}, Backend{CentralDiff{}}}) {
    const Jet2 j = jet(f, 0.3, -0.7, be);
    EXPECT_EQ(j.v, CNum(4.5, -1));
    EXPECT_NEAR(std::abs(j.vx) + std::abs(j.vt) + std::abs(j.vxx) + std::abs(j.vxt) + std::abs(j.vtt), 0, 1e-9);
  }
}

TEST(Jet2Arithmetic, QuadraticPolynomialIsExact) {
  const auto f = ScalarField2::from_expression(
      [](auto a, auto b) { return 3.0 * a * a - 2.0 * a * b + 0.5 * b * b + a - 7.0; });
  const Jet2 j = jet(f, 1.5, -2.0);
  EXPECT_EQ(j.v, CNum(3 * 2.25 + 6 + 2 + 1.5 - 7));
  EXPECT_EQ(j.vx, CNum(6 * 1.5 + 4 + 1));
  EXPECT_EQ(j.vt, CNum(-3 - 2));
  EXPECT_EQ(j.vxx, CNum(6));
  EXPECT_EQ(j.vxt, CNum(-2));
  EXPECT_EQ(j.vtt, CNum(1));
}

// Each primitive against its closed-form derivatives in one variable.
TEST(Jet2Primitives, MatchClosedFormDerivatives) {
  struct Case {
    const char* name;
    Jet2 (*f)(const Jet2&);
    CNum (*d1)(CNum);
    CNum (*d2)(CNum);
    CNum x;
  };
  const Case cases[] = {
      {"exp", [](const Jet2& u) { return exp(u); }, [](CNum x) { return std::exp(x); },
       [](CNum x) { return std::exp(x); }, 0.3},
      {"log", [](const Jet2& u) { return log(u); }, [](CNum x) { return 1.0 / x; },
       [](CNum x) { return -1.0 / (x * x); }, 1.7},
      {"sin", [](const Jet2& u) { return sin(u); }, [](CNum x) { return std::cos(x); },
       [](CNum x) { return -std::sin(x); }, 0.4},
      {"cos", [](const Jet2& u) { return cos(u); }, [](CNum x) { return -std::sin(x); },
       [](CNum x) { return -std::cos(x); }, 0.4},
      {"tan", [](const Jet2& u) { return tan(u); },
       [](CNum x) { return 1.0 / (std::cos(x) * std::cos(x)); },
       [](CNum x) { return 2.0 * std::tan(x) / (std::cos(x) * std::cos(x)); }, 0.6},
      {"sinh", [](const Jet2& u) { return sinh(u); }, [](CNum x) { return std::cosh(x); },
       [](CNum x) { return std::sinh(x); }, -0.8},
      {"cosh", [](const Jet2& u) { return cosh(u); }, [](CNum x) { return std::sinh(x); },
       [](CNum x) { return std::cosh(x); }, -0.8},
      {"tanh", [](const Jet2& u) { return tanh(u); },
       [](CNum x) { return 1.0 - std::tanh(x) * std::tanh(x); },
       [](CNum x) { return -2.0 * std::tanh(x) * (1.0 - std::tanh(x) * std::tanh(x)); }, 0.9},
      {"atan", [](const Jet2& u) { return atan(u); }, [](CNum x) { return 1.0 / (1.0 + x * x); },
       [](CNum x) { return -2.0 * x / ((1.0 + x * x) * (1.0 + x * x)); }, 1.3},
      {"atanh", [](const Jet2& u) { return atanh(u); }, [](CNum x) { return 1.0 / (1.0 - x * x); },
       [](CNum x) { return 2.0 * x / ((1.0 - x * x) * (1.0 - x * x)); }, 0.35},
      {"asinh", [](const Jet2& u) { return asinh(u); },
       [](CNum x) { return 1.0 / std::sqrt(1.0 + x * x); },
       [](CNum x) { return -x / std::pow(1.0 + x * x, 1.5); }, 0.75},
      {"sqrt", [](const Jet2& u) { return sqrt(u); }, [](CNum x) { return 0.5 / std::sqrt(x); },
       [](CNum x) { return -0.25 / (x * std::sqrt(x)); }, 2.2},
      {"pow", [](const Jet2& u) { return pow(u, 2.5); }, [](CNum x) { return 2.5 * std::pow(x, 1.5); },
       [](CNum x) { return 3.75 * std::pow(x, 0.5); }, 1.4},
      {"complex_log", [](const Jet2& u) { return log(u); }, [](CNum x) { return 1.0 / x; },
       [](CNum x) { return -1.0 / (x * x); }, CNum(-0.5, 1.2)},
  };
  for (const auto& c : cases) {
    const Jet2 j = c.f(Jet2::variable_x(c.x));
    EXPECT_NEAR(std::abs(j.vx - c.d1(c.x)), 0, 1e-13) << c.name;
    EXPECT_NEAR(std::abs(j.vxx - c.d2(c.x)), 0, 1e-12) << c.name;
    EXPECT_EQ(j.vt, CNum(0)) << c.name;
  }
}

TEST(Jet2Primitives, PowAtZeroWithNaturalExponent) {
  const Jet2 j = pow(Jet2::variable_x(0.0), 2.0);
  EXPECT_EQ(j.v, CNum(0));
  EXPECT_EQ(j.vx, CNum(0));
  EXPECT_EQ(j.vxx, CNum(2));
}

TEST(Jet2Primitives, MixedPartialIsSymmetric) {
  const auto f = ScalarField2::from_expression([](auto a, auto b) { return exp(a * sin(b)) / (1.0 + a * a * b); });
  const Jet2 e = jet(f, 0.4, 0.9);
  const Jet2 g = jet(ScalarField2::from_expression([](auto a, auto b) { return exp(b * sin(a)) / (1.0 + b * b * a); }), 0.9, 0.4);
  EXPECT_NEAR(std::abs(e.vxt - g.vxt), 0, 1e-13);
  EXPECT_NEAR(std::abs(e.vxx - g.vtt), 0, 1e-13);
}
