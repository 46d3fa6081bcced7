#include "soliton_lab/surface.hpp"

namespace soliton_lab {

SurfaceMap SurfaceMap::from_parts(ValueFn value, JetFn jet, Clearance1 clearance,
                                  std::string branch_note) {
  SurfaceMap s;
  s.value_ = std::move(value);
  s.jet_ = std::move(jet);
  s.clearance_ = std::move(clearance);
  s.branch_note_ = std::move(branch_note);
  return s;
}

RVec3 SurfaceMap::operator()(CNum zeta) const {
  if (clearance(zeta) <= 0.0) throw DomainError("parameter point is excluded");
  const RVec3 p = value_(zeta);
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
    throw DomainError("surface value is not finite");
  return p;
}

LVec3<Jet2> SurfaceMap::jet(CNum zeta) const {
  if (!jet_) throw UnsupportedEvaluator("surface map has no jet evaluator");
  if (clearance(zeta) <= 0.0) throw DomainError("parameter point is excluded");
  auto j = jet_(zeta);
  if (!j.x.finite() || !j.y.finite() || !j.z.finite())
    throw DomainError("surface jet is not finite");
  return j;
}

SurfaceMap isothermal_change(const SurfaceMap& surface) {
  auto value = surface.value_fn();
  auto jet = surface.jet_fn();
  auto clearance = surface.clearance_fn();
  SurfaceMap::JetFn rotated_jet;
  if (jet) {
    // d/du X(i zeta) = i X'(i zeta) etc.: rotate the (u, v) frame by 90 degrees.
    rotated_jet = [jet](CNum zeta) {
      const auto j = jet(kI * zeta);
      auto turn = [](const Jet2& c) {
        // u' = -v, v' = u under zeta -> i zeta.
        return Jet2{c.v, c.vt, -c.vx, c.vtt, -c.vxt, c.vxx};
      };
      return LVec3<Jet2>{turn(j.x), turn(j.y), turn(j.z)};
    };
  }
  Clearance1 rotated_clearance;
  if (clearance) rotated_clearance = [clearance](CNum zeta) { return clearance(kI * zeta); };
  return SurfaceMap::from_parts([value](CNum zeta) { return value(kI * zeta); },
                                std::move(rotated_jet), std::move(rotated_clearance),
                                surface.branch_note() + " (after tau = i zeta)");
}

}  // namespace soliton_lab
