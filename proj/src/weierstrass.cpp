#include "soliton_lab/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace soliton_lab::weierstrass {

namespace {

template <class S>
LVec3<S> integrand_impl(Variant variant, const S& m, const S& w) {
  const S w2 = w * w;
  if (variant == Variant::Standard) return {m * (1.0 + w2), kI * m * (1.0 - w2), -2.0 * m * w};
  return {m * (1.0 + w2), 2.0 * kI * m * w, m * (w2 - 1.0)};
}

double pole_clearance(const std::vector<CNum>& poles, CNum z) {
  double d = std::numeric_limits<double>::infinity();
  for (const CNum& p : poles) d = std::min(d, std::abs(z - p));
  return d;
}

}  // namespace

CVec3 integrand(const WEData& data, CNum w) { return integrand_impl(data.variant, data.M(w), w); }

LVec3<Jet2> integrand(const WEData& data, const Jet2& w) {
  return integrand_impl(data.variant, data.M(w), w);
}

RVec3 we_closed_form(const WEData& data, CNum zeta) {
  if (!data.antiderivatives) throw UnsupportedEvaluator("data has no closed-form primitives");
  const auto& p = *data.antiderivatives;
  return {p[0](zeta).real(), p[1](zeta).real(), p[2](zeta).real()};
}

RVec3 we_integrate_along(const WEData& data, std::span<const CNum> path,
                         const IntegrationOptions& opts) {
  if (path.empty() || path.front() != data.base)
    throw DomainError("integration path must start at the base point");
  for (const CNum& p : data.pole_set)
    if (p == path.back()) throw DomainError("zeta is a pole of the Weierstrass data");
  RVec3 out = data.antiderivatives ? we_closed_form(data, data.base) : RVec3{};
  const std::array<std::function<CNum(CNum)>, 3> parts = {
      [&](CNum w) { return integrand(data, w).x; },
      [&](CNum w) { return integrand(data, w).y; },
      [&](CNum w) { return integrand(data, w).z; }};
  out.x += quadrature::path_integral(parts[0], path, opts.quad).value.real();
  out.y += quadrature::path_integral(parts[1], path, opts.quad).value.real();
  out.z += quadrature::path_integral(parts[2], path, opts.quad).value.real();
  return out;
}

RVec3 we_integrate(const WEData& data, CNum zeta, const IntegrationOptions& opts) {
  const auto path = quadrature::plan_path(data.base, zeta, data.pole_set, opts.path);
  return we_integrate_along(data, path, opts);
}

WEData we_data_rotation(const WEData& data, double theta) {
  const CNum factor = std::polar(1.0, -theta);
  WEData out = data;
  out.M = data.M.scaled(factor);
  if (data.antiderivatives) {
    for (auto& p : *out.antiderivatives) p = p.scaled(factor);
  }
  return out;
}

SurfaceMap we_surface(const WEData& data, const IntegrationOptions& opts) {
  auto value = [data, opts](CNum zeta) { return we_integrate(data, zeta, opts); };
  auto jet = [data, opts](CNum zeta) {
    // X = Re P with P' = Phi: X_u = Re Phi, X_v = Re(i Phi), X_uu = -X_vv = Re Phi'.
    const RVec3 x = we_integrate(data, zeta, opts);
    const LVec3<Jet2> phi = integrand(data, parameter_jet(zeta));
    auto lift = [](double v, const Jet2& d) {
      return Jet2{v, d.v.real(), (kI * d.v).real(), d.vx.real(), d.vt.real(), -d.vx.real()};
    };
    return LVec3<Jet2>{lift(x.x, phi.x), lift(x.y, phi.y), lift(x.z, phi.z)};
  };
  auto poles = data.pole_set;
  return SurfaceMap::from_parts(value, jet,
                                [poles](CNum z) { return pole_clearance(poles, z); },
                                "Weierstrass-Enneper integral of " + data.name);
}

WEData catalog_we_data(const std::string& name) {
  WEData d;
  d.name = name;
  if (name == "scherk_first_kind") {
    d.variant = Variant::Standard;
    d.M = HoloFn::from_expression([](auto w) { return 2.0 / (1.0 - w * w * w * w); });
    d.base = 2.0;
    d.pole_set = {1.0, -1.0, kI, -kI};
    d.antiderivatives = std::array<HoloFn, 3>{
        HoloFn::from_expression([](auto w) { return log((1.0 + w) / (1.0 - w)); }),
        HoloFn::from_expression([](auto w) { return log((1.0 + kI * w) / (1.0 - kI * w)); }),
        HoloFn::from_expression([](auto w) { return -log((1.0 + w * w) / (1.0 - w * w)); })};
    return d;
  }
  if (name == "helicoid_second_kind") {
    d.variant = Variant::Alternate;
    d.M = HoloFn::from_expression([](auto w) { return kI / (2.0 * w * w); });
    d.base = 1.0;
    d.pole_set = {0.0};
    d.antiderivatives = std::array<HoloFn, 3>{
        HoloFn::from_expression([](auto w) { return (0.5 * kI) * (w - 1.0 / w); }),
        HoloFn::from_expression([](auto w) { return -log(w); }),
        HoloFn::from_expression([](auto w) { return (0.5 * kI) * (w + 1.0 / w); })};
    return d;
  }
  throw UnknownSurface("no Weierstrass data named '" + name + "'");
}

std::vector<std::string> we_data_names() { return {"scherk_first_kind", "helicoid_second_kind"}; }

SurfaceMap catalog_surface(const std::string& name) {
  if (name == "lorentzian_helicoid") {
    return SurfaceMap::from_expression(
        [](auto tau) {
          using T = decltype(tau);
          return LVec3<T>{0.5 * im(tau - 1.0 / tau), -0.5 * re(tau + 1.0 / tau), arg(tau)};
        },
        [](CNum tau) {
          const double ray = tau.real() < 0.0 ? std::abs(tau.imag())
                                              : std::numeric_limits<double>::infinity();
          return std::min(std::abs(tau), ray);
        },
        "f = arg tau on the principal branch; the ray tau < 0 is excluded");
  }
  if (name == "lorentzian_catenoid") {
    return SurfaceMap::from_expression(
        [](auto tau) {
          using T = decltype(tau);
          return LVec3<T>{-0.5 * re(tau - 1.0 / tau), -0.5 * im(tau + 1.0 / tau),
                          -0.5 * re(log(tau * conj(tau)))};
        },
        [](CNum tau) { return std::abs(tau); }, "single-valued on tau != 0");
  }
  if (name == "scherk_first_kind") {
    return SurfaceMap::from_expression(
        [](auto z) {
          using T = decltype(z);
          return LVec3<T>{re(log((z + 1.0) / (z - 1.0))), re(log((z - kI) / (z + kI))),
                          re(log((z * z - 1.0) / (z * z + 1.0)))};
        },
        [](CNum z) { return pole_clearance({1.0, -1.0, kI, -kI}, z); },
        "moduli only; single-valued off {+-1, +-i}");
  }
  if (name == "helicoid_second_kind") {
    return SurfaceMap::from_expression(
        [](auto z) {
          using T = decltype(z);
          return LVec3<T>{-0.5 * im(z - 1.0 / z), -re(log(z)), -0.5 * im(z + 1.0 / z)};
        },
        [](CNum z) { return std::abs(z); }, "single-valued on zeta != 0");
  }
  throw UnknownSurface("unknown surface '" + name + "'");
}

std::vector<std::string> surface_names() {
  return {"lorentzian_helicoid", "lorentzian_catenoid", "scherk_first_kind",
          "helicoid_second_kind"};
}

Relation relation_from_string(const std::string& name) {
  if (name == "scherk_first_kind") return Relation::ScherkFirstKind;
  if (name == "helicoid_second_kind") return Relation::HelicoidSecondKind;
  if (name == "lorentzian_catenoid") return Relation::LorentzianCatenoid;
  if (name == "lorentzian_helicoid") return Relation::LorentzianHelicoid;
  throw UnknownSurface("no nonparametric relation named '" + name + "'");
}

double nonparametric_check(const SurfaceMap& surface, Relation relation, CNum zeta) {
  const RVec3 p = surface(zeta);
  switch (relation) {
    case Relation::ScherkFirstKind:
      return std::abs(p.z - (std::log(std::cosh(p.y)) - std::log(std::cosh(p.x))));
    case Relation::HelicoidSecondKind: {
      const double c = std::cosh(p.y);
      if (p.x * p.x > c * c) throw DomainError("x^2 > cosh^2 y: outside the helicoid's graph");
      return std::abs(p.z + p.x * std::tanh(p.y));
    }
    case Relation::LorentzianCatenoid:
      return std::abs(std::abs(p.z) - std::asinh(std::hypot(p.x, p.y)));
    case Relation::LorentzianHelicoid: {
      if (p.x == 0.0) throw DomainError("x = 0: atan(y/x) is undefined");
      const double sheet = zeta.imag() > 0.0 ? 0.5 : -0.5;
      return std::abs(p.z - (sheet * std::numbers::pi + std::atan(p.y / p.x)));
    }
  }
  return 0.0;
}

bool scherk_domain_condition(const RVec3& p) {
  const double cx = std::cosh(p.x), cy = std::cosh(p.y);
  return 1.0 / (cx * cx) + 1.0 / (cy * cy) > 1.0;
}

}  // namespace soliton_lab::weierstrass
