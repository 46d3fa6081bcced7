#pragma once

// Lorentzian geometry of graphs X(y, z) = (phi(y, z), y, z) over the timelike
// plane {x = 0} of L^3 = (R^3, dx^2 + dy^2 - dz^2).

#include <optional>
#include <string>

#include "soliton_lab/field.hpp"
#include "soliton_lab/grid.hpp"
#include "soliton_lab/surface.hpp"

namespace soliton_lab::geometry {

/// |1 + phi_y^2 - phi_z^2| at or below this value classifies a point as
/// lightlike.
inline constexpr double kDegenerateTol = 1e-9;

enum class CausalClass { Spacelike, Timelike, Lightlike };
std::string to_string(CausalClass c);

struct FundForms {
  double E = 0, F = 0, G = 0;   // first form
  double e = 0, f2 = 0, g = 0;  // second form
  double disc = 0;              // E G - F^2 = -phi_y^2 + phi_z^2 - 1
  /// E G - F^2 evaluated from the coefficients rather than the closed form.
  double disc_from_coefficients() const { return E * G - F * F; }
};

struct GraphPointReport {
  double y = 0, z = 0;
  std::optional<FundForms> forms;
  CausalClass causal = CausalClass::Lightlike;
  std::optional<RVec3> normal;
  std::optional<double> H;
};

/// Real parts of the graph function's jet at (y, z).
struct GraphJet {
  double p, py, pz, pyy, pyz, pzz;
  /// 1 + phi_y^2 - phi_z^2, whose sign decides the causal character.
  double indicator() const { return 1.0 + py * py - pz * pz; }
};
GraphJet graph_jet(const ScalarField2& field, double y, double z);

/// Second form divides by sqrt|1 + phi_y^2 - phi_z^2|, so DegenerateError is
/// raised on lightlike points.
FundForms fundamental_forms(const ScalarField2& field, double y, double z,
                            double tol = kDegenerateTol);

/// Timelike if 1 + phi_y^2 - phi_z^2 > tol, Spacelike if < -tol, else Lightlike.
///
/// Where the graph function itself is not differentiable (the tangent plane
/// contains the x axis, e.g. t = +-x on the Wick-rotated catenoid) the class
/// is taken from the normalised indicator (1 + phi_y^2 - phi_z^2) /
/// (1 + phi_y^2 + phi_z^2) on a ring of radius 1e-7 around the point.
CausalClass causal_classify(const ScalarField2& field, double y, double z,
                            double tol = kDegenerateTol);

/// N = (1, -phi_y, phi_z) / sqrt|1 + phi_y^2 - phi_z^2|.
RVec3 unit_normal(const ScalarField2& field, double y, double z, double tol = kDegenerateTol);

/// H = (eps/2) (eG - 2fF + gE) / (EG - F^2), eps = +1 timelike, -1 spacelike.
double mean_curvature(const ScalarField2& field, double y, double z, double tol = kDegenerateTol);

/// (1 + phi_y^2) phi_zz - 2 phi_y phi_z phi_yz + (phi_z^2 - 1) phi_yy
double born_infeld_numerator(const ScalarField2& field, double y, double z);

GraphPointReport classify_point(const ScalarField2& field, double y, double z,
                                double tol = kDegenerateTol);

struct IsothermalDefects {
  double conformal = 0;  // |<X_u, X_u> - <X_v, X_v>|
  double cross = 0;      // |<X_u, X_v>|
  double harmonic = 0;   // max-norm of X_uu + X_vv
  double max() const;
};

/// Uses the map's exact jets when present, central differences with step h
/// otherwise.
IsothermalDefects isothermal_check(const SurfaceMap& surface, CNum zeta, double h = 1e-4);

}  // namespace soliton_lab::geometry
