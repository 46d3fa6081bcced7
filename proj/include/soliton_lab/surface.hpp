#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "soliton_lab/lvec3.hpp"

namespace soliton_lab {

/// Clearance of a parameter point from the excluded set (poles, branch rays).
using Clearance1 = std::function<double(CNum)>;

/// Jet of the parameter zeta = u + i v with respect to (u, v).
inline Jet2 parameter_jet(CNum zeta) { return {zeta, 1.0, kI, 0.0, 0.0, 0.0}; }

/// A parametrised surface zeta = u + i v -> L^3.
///
/// Expression-built maps also carry exact jets in (u, v); maps assembled from
/// other evaluators (numerical quadrature, for instance) may provide jets
/// through from_parts or none at all.
class SurfaceMap {
 public:
  using ValueFn = std::function<RVec3(CNum)>;
  using JetFn = std::function<LVec3<Jet2>(CNum)>;

  SurfaceMap() = default;

  /// `expr` maps a scalar (CNum or Jet2) to an LVec3 of that scalar whose
  /// components are real-valued.
  template <class Expr>
  static SurfaceMap from_expression(Expr expr, Clearance1 clearance = {},
                                    std::string branch_note = {}) {
    return from_parts(
        [expr](CNum z) { return real_part(expr(z)); },
        [expr](CNum z) { return expr(parameter_jet(z)); }, std::move(clearance),
        std::move(branch_note));
  }

  static SurfaceMap from_parts(ValueFn value, JetFn jet, Clearance1 clearance,
                               std::string branch_note);

  /// DomainError when zeta is excluded or the value is not finite.
  RVec3 operator()(CNum zeta) const;
  bool has_jet() const { return static_cast<bool>(jet_); }
  LVec3<Jet2> jet(CNum zeta) const;

  double clearance(CNum zeta) const {
    return clearance_ ? clearance_(zeta) : std::numeric_limits<double>::infinity();
  }
  bool excluded(CNum zeta, double margin) const { return clearance(zeta) <= margin; }
  const std::string& branch_note() const { return branch_note_; }
  const Clearance1& clearance_fn() const { return clearance_; }
  const ValueFn& value_fn() const { return value_; }
  const JetFn& jet_fn() const { return jet_; }

 private:
  ValueFn value_;
  JetFn jet_;
  Clearance1 clearance_;
  std::string branch_note_;
};

/// Componentwise real part of a jet-valued vector.
inline LVec3<Jet2> real_part(const LVec3<Jet2>& v) { return {re(v.x), re(v.y), re(v.z)}; }

/// X(zeta) -> X(i zeta), the isothermal change tau = i zeta.
SurfaceMap isothermal_change(const SurfaceMap& surface);

}  // namespace soliton_lab
