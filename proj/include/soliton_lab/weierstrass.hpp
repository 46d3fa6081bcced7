#pragma once

// Weierstrass-Enneper representation of maximal surfaces in L^3 and the
// catalog of parametrised surfaces.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soliton_lab/holo.hpp"
#include "soliton_lab/quadrature.hpp"
#include "soliton_lab/surface.hpp"

namespace soliton_lab::weierstrass {

/// Standard:  x = Re int M (1 + w^2), y = Re int i M (1 - w^2), z = Re int -2 M w.
/// Alternate: x = Re int M (1 + w^2), y = Re int 2 i M w,       z = Re int M (w^2 - 1).
enum class Variant { Standard, Alternate };

struct WEData {
  std::string name;
  HoloFn M;
  Variant variant = Variant::Standard;
  CNum base{1.0, 0.0};
  /// Complex primitives of the three integrands; their real parts are the
  /// closed-form coordinates and fix the integration constants at `base`.
  std::optional<std::array<HoloFn, 3>> antiderivatives;
  std::vector<CNum> pole_set;
};

/// The integrand vector Phi(w), componentwise.
CVec3 integrand(const WEData& data, CNum w);
LVec3<Jet2> integrand(const WEData& data, const Jet2& w);

struct IntegrationOptions {
  quadrature::PathOptions path;
  quadrature::Options quad;
};

/// X(zeta) = Re P(base) + Re int_base^zeta Phi along a pole-avoiding path,
/// where P are the closed-form primitives (zero when absent).
RVec3 we_integrate(const WEData& data, CNum zeta, const IntegrationOptions& opts = {});
/// Same, along an explicit polyline starting at data.base.
RVec3 we_integrate_along(const WEData& data, std::span<const CNum> path,
                         const IntegrationOptions& opts = {});
/// Re P(zeta); requires antiderivatives.
RVec3 we_closed_form(const WEData& data, CNum zeta);

/// M -> e^{-i theta} M (primitives rotate with it).
WEData we_data_rotation(const WEData& data, double theta);

/// Surface given by numerical integration; jets come from Phi and Phi'.
SurfaceMap we_surface(const WEData& data, const IntegrationOptions& opts = {});

/// "scherk_first_kind" (Standard, M = 2 / (1 - w^4), base 2) or
/// "helicoid_second_kind" (Alternate, M = i / (2 w^2), base 1).
WEData catalog_we_data(const std::string& name);
std::vector<std::string> we_data_names();

/// lorentzian_helicoid, lorentzian_catenoid (tau chart), scherk_first_kind,
/// helicoid_second_kind (zeta chart).
SurfaceMap catalog_surface(const std::string& name);
std::vector<std::string> surface_names();

enum class Relation { ScherkFirstKind, HelicoidSecondKind, LorentzianCatenoid, LorentzianHelicoid };
Relation relation_from_string(const std::string& name);

/// |z - R(x, y)| for the named graph relation at the surface point X(zeta):
///  - ScherkFirstKind: z = ln cosh y - ln cosh x
///  - HelicoidSecondKind: z = -x tanh y, requires x^2 <= cosh^2 y
///  - LorentzianCatenoid: |z| = asinh sqrt(x^2 + y^2); |tau| > 1 is the lower sheet
///  - LorentzianHelicoid: z = sgn(Im tau) pi/2 + atan(y / x), requires x != 0
double nonparametric_check(const SurfaceMap& surface, Relation relation, CNum zeta);

/// sech^2 x + sech^2 y > 1, the region where Scherk's graph is spacelike.
bool scherk_domain_condition(const RVec3& p);

}  // namespace soliton_lab::weierstrass
