#pragma once

// Conjugate maximal surfaces, the associate family, and the complex
// Born-Infeld solitons built from it.

#include <optional>
#include <string>
#include <vector>

#include "soliton_lab/holo.hpp"
#include "soliton_lab/pde.hpp"
#include "soliton_lab/quadrature.hpp"
#include "soliton_lab/surface.hpp"
#include "soliton_lab/weierstrass.hpp"

namespace soliton_lab::family {

struct ConjugatePair {
  SurfaceMap X1, X2;
  /// Holomorphic map with Re F = X1, Im F = X2, when known.
  std::optional<std::function<CVec3(CNum)>> F;
};

/// Lorentzian helicoid (X1) and Lorentzian catenoid (X2) in the zeta chart:
/// X1 + i X2 = (1/2 (zeta + 1/zeta), -i/2 (zeta - 1/zeta), -i ln zeta).
/// The principal log puts the cut on the negative real axis.
ConjugatePair helicoid_catenoid_pair();

/// X1 = Re P, X2 = Im P for the Weierstrass data's primitive P.
ConjugatePair conjugate_pair_from_we(const weierstrass::WEData& data,
                                     const weierstrass::IntegrationOptions& opts = {});

ConjugatePair pair_from_string(const std::string& name);

/// cos(theta) X1 + sin(theta) X2.
SurfaceMap associate_family(const ConjugatePair& pair, double theta);

/// max over components of |d(X1 + i X2)/d conj(zeta)| from jets.
double conjugacy_check(const ConjugatePair& pair, CNum zeta);

struct SolitonFamilyPoint {
  double theta = 0;
  CNum zeta{};
  CNum xs{}, ts{}, phis{};
};

/// x^s = i (x1 cos + x2 sin), t^s = t1 cos + t2 sin, phi^s = phi1 cos + phi2 sin.
SolitonFamilyPoint soliton_family(const ConjugatePair& pair, double theta, CNum zeta);

struct WhithamPair {
  HoloFn G;  // argument is conj(zeta)
  HoloFn H;  // argument is zeta
  double theta = 0;
  std::vector<CNum> G_poles, H_poles;
};

/// G(w) = i e^{i theta} / (2 w), H(w) = i e^{-i theta} / (2 w).
WhithamPair helicoid_catenoid_whitham(double theta);
WhithamPair trivial_whitham();

/// |conj(G(conj zeta)) + H(zeta)|.
double whitham_constraint_defect(const WhithamPair& wp, CNum zeta);

struct WhithamDefects {
  double d1 = 0, d2 = 0, d3 = 0;
  double max() const;
};

/// Checks
///   x^s - t^s = G(conj z) - int z^2 H'(z) dz
///   x^s + t^s = H(z) - int conj(z)^2 G'(conj z) d conj(z)
///   phi^s     = int z H'(z) dz - int conj(z) G'(conj z) d conj(z)
/// with integrals taken from base.zeta (conjugated for G) and the three
/// additive constants fixed by `base`.
WhithamDefects whitham_verify(const WhithamPair& wp, const SolitonFamilyPoint& point,
                              const SolitonFamilyPoint& base,
                              const weierstrass::IntegrationOptions& opts = {});

/// Born-Infeld residual of phi^s as a function of (x^s, t^s), by the chain
/// rule through the (u, v) parametrisation. Throws JacobianSingular when
/// |det d(x^s, t^s)/d(u, v)| <= 1e-10.
pde::ResidualReport complex_bi_residual_on_family(const ConjugatePair& pair, double theta,
                                                  const std::vector<CNum>& zetas,
                                                  const std::string& name = "soliton_family");

/// Radii linspace(r0, r1, nr) times angles linspace(-pi + gap, pi - gap, na).
std::vector<CNum> polar_grid(double r0, double r1, int nr, int na, double gap = 0.1);

}  // namespace soliton_lab::family
