#include "soliton_lab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace soliton_lab::geometry {

std::string to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
  }
  return "unknown";
}

GraphJet graph_jet(const ScalarField2& field, double y, double z) {
  const Jet2 j = jet(field, y, z);
  return {j.v.real(), j.vx.real(), j.vt.real(), j.vxx.real(), j.vxt.real(), j.vtt.real()};
}

namespace {

// The indicator is compared at the scale of 1 + |grad|^2: near a lightlike
// line the gradient blows up and the absolute indicator is pure cancellation.
bool degenerate(const GraphJet& g, double tol) {
  return std::abs(g.indicator()) <= tol * (1.0 + g.py * g.py + g.pz * g.pz);
}

CausalClass classify(const GraphJet& g, double tol) {
  if (degenerate(g, tol)) return CausalClass::Lightlike;
  return g.indicator() > 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

constexpr double kProbeRadius = 1e-7;

CausalClass classify_vertical(const ScalarField2& field, double y, double z, double tol) {
  std::vector<double> samples;
  for (int k = 0; k < 8; ++k) {
    const double angle = k * std::numbers::pi / 4.0;
    const double py = y + kProbeRadius * std::cos(angle);
    const double pz = z + kProbeRadius * std::sin(angle);
    if (field.clearance(py, pz) <= 0.0) continue;
    try {
      const Jet2 j = jet(field, py, pz);
      if (std::abs(j.v.imag()) > 1e-12 * (1.0 + std::abs(j.v.real()))) continue;
      const double gy = j.vx.real(), gz = j.vt.real();
      samples.push_back((1.0 + gy * gy - gz * gz) / (1.0 + gy * gy + gz * gz));
    } catch (const DomainError&) {
    }
  }
  if (samples.empty()) throw DomainError("graph is undefined around the point");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  if (std::min(std::abs(*lo), std::abs(*hi)) <= tol) return CausalClass::Lightlike;
  if (*lo > 0.0) return CausalClass::Timelike;
  if (*hi < 0.0) return CausalClass::Spacelike;
  return CausalClass::Lightlike;  // sign change inside the probe ring
}

/// Jet at a non-degenerate point, or the appropriate error.
GraphJet regular_jet(const ScalarField2& field, double y, double z, double tol) {
  try {
    GraphJet g = graph_jet(field, y, z);
    if (degenerate(g, tol)) throw DegenerateError("tangent plane is lightlike");
    return g;
  } catch (const DegenerateError&) {
    throw;
  } catch (const DomainError&) {
    if (classify_vertical(field, y, z, tol) == CausalClass::Lightlike)
      throw DegenerateError("tangent plane is lightlike");
    throw;
  }
}

}  // namespace

FundForms fundamental_forms(const ScalarField2& field, double y, double z, double tol) {
  const GraphJet g = regular_jet(field, y, z, tol);
  const double q = g.indicator();
  const double root = std::sqrt(std::abs(q));
  FundForms f;
  f.E = g.py * g.py + 1.0;
  f.G = g.pz * g.pz - 1.0;
  f.F = g.py * g.pz;
  f.disc = -g.py * g.py + g.pz * g.pz - 1.0;
  f.e = g.pyy / root;
  f.f2 = g.pyz / root;
  f.g = g.pzz / root;
  return f;
}

CausalClass causal_classify(const ScalarField2& field, double y, double z, double tol) {
  try {
    return classify(graph_jet(field, y, z), tol);
  } catch (const DomainError&) {
    return classify_vertical(field, y, z, tol);
  }
}

RVec3 unit_normal(const ScalarField2& field, double y, double z, double tol) {
  const GraphJet g = regular_jet(field, y, z, tol);
  const double root = std::sqrt(std::abs(g.indicator()));
  return {1.0 / root, -g.py / root, g.pz / root};
}

double mean_curvature(const ScalarField2& field, double y, double z, double tol) {
  const FundForms f = fundamental_forms(field, y, z, tol);
  const double eps = f.disc < 0.0 ? 1.0 : -1.0;  // EG - F^2 < 0 <=> timelike
  return 0.5 * eps * (f.e * f.G - 2.0 * f.f2 * f.F + f.g * f.E) / f.disc_from_coefficients();
}

double born_infeld_numerator(const ScalarField2& field, double y, double z) {
  const GraphJet g = graph_jet(field, y, z);
  return (1.0 + g.py * g.py) * g.pzz - 2.0 * g.py * g.pz * g.pyz + (g.pz * g.pz - 1.0) * g.pyy;
}

GraphPointReport classify_point(const ScalarField2& field, double y, double z, double tol) {
  GraphPointReport r;
  r.y = y;
  r.z = z;
  r.causal = causal_classify(field, y, z, tol);
  if (r.causal == CausalClass::Lightlike) return r;
  try {
    r.forms = fundamental_forms(field, y, z, tol);
    r.normal = unit_normal(field, y, z, tol);
    r.H = mean_curvature(field, y, z, tol);
  } catch (const DomainError&) {
    // Non-degenerate but the graph chart is singular here (vertical tangent).
    r.forms.reset();
    r.normal.reset();
    r.H.reset();
  }
  return r;
}

double IsothermalDefects::max() const { return std::max({conformal, cross, harmonic}); }

IsothermalDefects isothermal_check(const SurfaceMap& surface, CNum zeta, double h) {
  RVec3 xu, xv, lap;
  if (surface.has_jet()) {
    const auto j = surface.jet(zeta);
    auto part = [](const Jet2& c, CNum Jet2::*m) { return (c.*m).real(); };
    auto vec = [&](CNum Jet2::*m) { return RVec3{part(j.x, m), part(j.y, m), part(j.z, m)}; };
    xu = vec(&Jet2::vx);
    xv = vec(&Jet2::vt);
    lap = vec(&Jet2::vxx) + vec(&Jet2::vtt);
  } else {
    const RVec3 c = surface(zeta);
    const RVec3 e = surface(zeta + h), w = surface(zeta - h);
    const RVec3 n = surface(zeta + kI * h), s = surface(zeta - kI * h);
    xu = (0.5 / h) * (e - w);
    xv = (0.5 / h) * (n - s);
    lap = (1.0 / (h * h)) * (e + w + n + s - 4.0 * c);
  }
  IsothermalDefects d;
  d.conformal = std::abs(lorentz_inner(xu, xu) - lorentz_inner(xv, xv));
  d.cross = std::abs(lorentz_inner(xu, xv));
  d.harmonic = max_abs(lap);
  return d;
}

}  // namespace soliton_lab::geometry
