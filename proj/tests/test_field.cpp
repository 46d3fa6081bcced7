#include <gtest/gtest.h>

#include "common.hpp"
#include "soliton_lab/errors.hpp"
#include "soliton_lab/field.hpp"
#include "soliton_lab/grid.hpp"
#include "soliton_lab/pde.hpp"

using namespace soliton_lab;
using testing_support::Rng;

TEST(Backends, CatenoidFirstDerivativeAgrees) {
  const auto f = ScalarField2::from_expression([](auto a, auto b) { return asinh(sqrt(a * a + b * b)); });
  const Jet2 exact = jet(f, 1, 1, ExactJet{});
  const Jet2 fd = jet(f, 1, 1, CentralDiff{1e-4});
  EXPECT_LE(std::abs(exact.vx - fd.vx), 1e-6);
}

TEST(Backends, AgreeOnCatalogFieldsAtRandomPoints) {
  Rng rng(11);
  for (const auto& e : pde::catalog()) {
    int checked = 0;
    for (int attempt = 0; checked < 100 && attempt < 10000; ++attempt) {
      const double a = rng.uniform(e.grid.a_min, e.grid.a_max);
      const double b = rng.uniform(e.grid.b_min, e.grid.b_max);
      if (e.field.excluded(a, b, 0.05)) continue;
      const Jet2 x = jet(e.field, a, b, ExactJet{});
      const Jet2 c = jet(e.field, a, b, CentralDiff{1e-4});
      for (auto m : {&Jet2::v, &Jet2::vx, &Jet2::vt, &Jet2::vxx, &Jet2::vxt, &Jet2::vtt})
        EXPECT_LE(std::abs(x.*m - c.*m), 1e-6) << e.name << " at " << a << "," << b;
      ++checked;
    }
    EXPECT_EQ(checked, 100) << e.name;
  }
}

TEST(Backends, CentralDifferenceIsSecondOrder) {
  const auto f = ScalarField2::from_expression([](auto a, auto b) { return exp(a + b); });
  const double exact = std::exp(0.7);
  auto err = [&](double h) { return std::abs(jet(f, 0.3, 0.4, CentralDiff{h}).vxx - exact); };
  const double order = std::log2(err(2e-2) / err(1e-2));
  EXPECT_GE(order, 1.9);
  const double order2 = std::log2(err(4e-2) / err(2e-2));
  EXPECT_GE(order2, 1.9);
}

TEST(Backends, OpaqueFieldFallsBack) {
  const auto f = ScalarField2::from_values([](double a, double b) { return CNum(a * a * b); });
  EXPECT_FALSE(f.has_exact_jet());
  EXPECT_TRUE(f.falls_back());
  EXPECT_EQ(backend_name(f.effective_backend()), "central_diff(h=0.0001)");
  const Jet2 j = jet(f, 1.0, 2.0);
  EXPECT_NEAR(j.vxx.real(), 4.0, 1e-6);
  EXPECT_NEAR(j.vxt.real(), 2.0, 1e-6);
}

TEST(Backends, NonPositiveStepRejected) {
  const auto f = ScalarField2::from_expression([](auto a, auto) { return a; });
  EXPECT_THROW(f.with_backend(CentralDiff{0.0}), DomainError);
  EXPECT_THROW(f.with_backend(CentralDiff{-1e-3}), DomainError);
}

TEST(Domain, StencilTouchingExclusionThrows) {
  const auto f = ScalarField2::from_expression([](auto a, auto b) { return log(a) + b; },
                                               [](double a, double) { return a; });
  EXPECT_THROW(jet(f, -0.5, 0.0), DomainError);
  EXPECT_THROW(jet(f, 5e-5, 0.0, CentralDiff{1e-4}), DomainError);
  EXPECT_NO_THROW(jet(f, 1.0, 0.0, CentralDiff{1e-4}));
}

TEST(Grid, ParseRoundTripAndValidation) {
  const GridSpec g = GridSpec::parse("-1:1:-2:2:21:11");
  EXPECT_EQ(g.na, 21);
  EXPECT_EQ(g.nb, 11);
  EXPECT_DOUBLE_EQ(g.a(20), 1.0);
  EXPECT_DOUBLE_EQ(g.b(5), 0.0);
  EXPECT_EQ(GridSpec::parse(g.to_string()).to_string(), g.to_string());
  EXPECT_EQ(g.points().size(), 231u);
  EXPECT_EQ(g.points()[1], std::make_pair(-1.0, -1.6));
  EXPECT_THROW(GridSpec::parse("0:1:0:1:1:5"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:1:0:1:5"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:x:0:1:5:5"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:inf:0:1:5:5"), std::invalid_argument);
}

TEST(Grid, ParallelForRethrowsLowestIndex) {
  std::vector<int> hits(100, 0);
  parallel_for(100, [&](std::size_t i) { hits[i] = 1; });
  EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 100);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
}
