#include <gtest/gtest.h>

#include "common.hpp"
#include "soliton_lab/errors.hpp"
#include "soliton_lab/family.hpp"
#include "soliton_lab/geometry.hpp"
#include "soliton_lab/weierstrass.hpp"

using namespace soliton_lab;
using namespace soliton_lab::weierstrass;
using testing_support::kPi;
using testing_support::Rng;

namespace {

double dist(const RVec3& a, const RVec3& b) { return max_abs(a - b); }

CNum pole_avoiding(Rng& rng, const WEData& d) {
  for (;;) {
    const CNum z(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5));
    bool ok = true;
    for (CNum p : d.pole_set) ok = ok && std::abs(z - p) > 0.05;
    if (ok) return z;
  }
}

}  // namespace

TEST(Integrate, ScherkAtTwo) {
  const auto d = catalog_we_data("scherk_first_kind");
  EXPECT_NEAR(we_integrate(d, 2.0).x, std::log(3.0), 1e-12);
  EXPECT_NEAR(we_integrate(d, CNum(0.4, 0.3)).x, std::log(std::abs(CNum(1.4, 0.3) / CNum(-0.6, 0.3))), 1e-10);
}

TEST(Integrate, HelicoidSecondKindAtTwo) {
  const auto d = catalog_we_data("helicoid_second_kind");
  EXPECT_NEAR(we_integrate(d, 2.0).y, -std::log(2.0), 1e-12);
}

TEST(Integrate, ZeroDataGivesOrigin) {
  WEData d;
  d.name = "zero";
  d.M = HoloFn::zero();
  for (CNum z : {CNum(0.5, 2), CNum(-3, 0.1)}) EXPECT_EQ(dist(we_integrate(d, z), RVec3{}), 0.0);
}

TEST(Integrate, MatchesClosedFormAtRandomPoints) {
  for (const auto& name : we_data_names()) {
    const auto d = catalog_we_data(name);
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
      const CNum z = pole_avoiding(rng, d);
      EXPECT_LE(dist(we_integrate(d, z), we_closed_form(d, z)), 1e-8) << name << " at " << z;
      EXPECT_LE(dist(we_closed_form(d, z), catalog_surface(name)(z)), 1e-12) << name;
    }
  }
}

TEST(Integrate, PathIndependence) {
  const auto d = catalog_we_data("scherk_first_kind");
  const CNum z(-1.5, 0.5);
  const std::vector<CNum> upper = {2.0, CNum(2, 2), CNum(-1.5, 2), z};
  const std::vector<CNum> lower = {2.0, CNum(2, -0.5), CNum(0.5, -0.5), CNum(-1.5, -0.5), z};
  // The loop between the two paths encloses +1 and +i; the periods there are
  // purely imaginary, so the real parts agree.
  EXPECT_LE(dist(we_integrate_along(d, upper), we_integrate_along(d, lower)), 1e-8);
  EXPECT_LE(dist(we_integrate_along(d, upper), we_integrate(d, z)), 1e-8);
}

TEST(Integrate, PoleIsDomainError) {
  const auto d = catalog_we_data("scherk_first_kind");
  EXPECT_THROW(we_integrate(d, 1.0), DomainError);
  EXPECT_THROW(we_integrate(catalog_we_data("helicoid_second_kind"), 0.0), DomainError);
}

TEST(Integrate, ExhaustedBudgetIsPathError) {
  IntegrationOptions opts;
  opts.path.max_depth = 0;
  EXPECT_THROW(we_integrate(catalog_we_data("helicoid_second_kind"), -1.0, opts), PathError);
}

TEST(Integrate, PathMustStartAtBase) {
  const auto d = catalog_we_data("scherk_first_kind");
  const std::vector<CNum> path = {3.0, 2.5};
  EXPECT_THROW(we_integrate_along(d, path), DomainError);
}

TEST(Rotation, ZeroAndPi) {
  const auto d = catalog_we_data("scherk_first_kind");
  const CNum w(0.3, 0.2);
  EXPECT_EQ(we_data_rotation(d, 0).M(w), d.M(w));
  EXPECT_NEAR(std::abs(we_data_rotation(d, kPi).M(w) + d.M(w)), 0, 1e-15);
}

TEST(Rotation, MatchesAssociateFamily) {
  const auto d = catalog_we_data("scherk_first_kind");
  const double theta = kPi / 3;
  const auto assoc = family::associate_family(family::conjugate_pair_from_we(d), theta);
  const auto rotated = we_data_rotation(d, theta);
  const CNum z0(0.5, 0.5);
  const RVec3 offset = we_integrate(rotated, z0) - assoc(z0);
  for (CNum z : {CNum(1.5, 0.7), CNum(-0.4, 2), CNum(0.2, -0.6)})
    EXPECT_LE(dist(we_integrate(rotated, z) - assoc(z), offset), 1e-6);
}

TEST(Surfaces, ClosedFormExamples) {
  const auto cat = catalog_surface("lorentzian_catenoid")(CNum(1, 1));
  EXPECT_NEAR(cat.z, -0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(catalog_surface("scherk_first_kind")(2.0).z, std::log(3.0 / 5.0), 1e-15);
  const auto hel = catalog_surface("lorentzian_helicoid")(CNum(0, 1));
  EXPECT_NEAR(hel.x, 1.0, 1e-15);
  EXPECT_NEAR(hel.y, 0.0, 1e-15);
  EXPECT_NEAR(hel.z, kPi / 2, 1e-15);
  EXPECT_THROW(catalog_surface("klein_bottle"), UnknownSurface);
  EXPECT_THROW(catalog_we_data("klein_bottle"), UnknownSurface);
}

TEST(Surfaces, HelicoidHeightIsHalfLogRatio) {
  // -(i/2) ln(tau / conj tau) is arg(tau^2) / 2: equal to arg tau for Re tau > 0,
  // off by pi in the left half plane.
  for (CNum t : {CNum(1, 2), CNum(-1, 0.5), CNum(0.3, -2), CNum(-2, -0.1)}) {
    const double f = (-0.5 * kI * std::log(t / std::conj(t))).real();
    const double z = catalog_surface("lorentzian_helicoid")(t).z;
    EXPECT_NEAR(z - f, t.real() > 0 ? 0.0 : std::copysign(kPi, t.imag()), 1e-14) << t;
  }
  EXPECT_THROW(catalog_surface("lorentzian_helicoid")(-2.0), DomainError);
}

TEST(Surfaces, IsothermalOnGrids) {
  for (const auto& name : surface_names()) {
    const auto s = catalog_surface(name);
    const GridSpec g = GridSpec::parse("-2:2:-2:2:21:21");
    int used = 0;
    for (const auto& [u, v] : g.points()) {
      const CNum z(u, v);
      if (s.excluded(z, 1e-2)) continue;
      EXPECT_LE(geometry::isothermal_check(s, z).max(), 1e-6) << name << " at " << z;
      ++used;
    }
    EXPECT_GT(used, 400) << name;
  }
}

TEST(Surfaces, NumericSurfaceJetsAreIsothermal) {
  const auto s = we_surface(catalog_we_data("scherk_first_kind"));
  EXPECT_LE(geometry::isothermal_check(s, CNum(0.4, 0.3)).max(), 1e-10);
  EXPECT_TRUE(s.excluded(CNum(1.0, 0.005), 1e-2));
}

TEST(Nonparametric, Examples) {
  EXPECT_LE(nonparametric_check(catalog_surface("scherk_first_kind"), Relation::ScherkFirstKind, 2.0), 1e-10);
  EXPECT_LE(nonparametric_check(catalog_surface("helicoid_second_kind"), Relation::HelicoidSecondKind,
                                CNum(1, 0.5)), 1e-10);
  EXPECT_LE(nonparametric_check(catalog_surface("lorentzian_catenoid"), Relation::LorentzianCatenoid, 2.0), 1e-10);
}

TEST(Nonparametric, RandomPoints) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const CNum z = rng.annulus(0.2, 3.0);
    if (std::abs(z * z * z * z - 1.0) < 0.05) continue;
    EXPECT_LE(nonparametric_check(catalog_surface("scherk_first_kind"), Relation::ScherkFirstKind, z), 1e-10);
    EXPECT_LE(nonparametric_check(catalog_surface("helicoid_second_kind"), Relation::HelicoidSecondKind, z), 1e-10);
    EXPECT_LE(nonparametric_check(catalog_surface("lorentzian_catenoid"), Relation::LorentzianCatenoid, z), 1e-10);
    if (std::abs(z.imag()) > 1e-2)
      EXPECT_LE(nonparametric_check(catalog_surface("lorentzian_helicoid"), Relation::LorentzianHelicoid, z), 1e-10);
    EXPECT_TRUE(scherk_domain_condition(catalog_surface("scherk_first_kind")(z)));
  }
}

TEST(Nonparametric, HelicoidTwoOutsideGraphIsDomainError) {
  const auto s = SurfaceMap::from_expression([](auto z) {
    using T = decltype(z);
    return LVec3<T>{T(5.0) + 0.0 * z, T(0.0), T(0.0)};
  });
  EXPECT_THROW(nonparametric_check(s, Relation::HelicoidSecondKind, 1.0), DomainError);
  EXPECT_EQ(relation_from_string("scherk_first_kind"), Relation::ScherkFirstKind);
  EXPECT_THROW(relation_from_string("other"), UnknownSurface);
}
