#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <variant>

#include "soliton_lab/jet.hpp"

namespace soliton_lab {

/// Forward-mode propagation of Jet2 arithmetic through the evaluator.
struct ExactJet {};

/// Second-order central differences with step h.
struct CentralDiff {
  double h = 1e-4;
};

using Backend = std::variant<ExactJet, CentralDiff>;

std::string backend_name(const Backend& backend);

/// Signed clearance of a point from the singular set of a field. A point is
/// usable when its clearance exceeds the requested margin; a null clearance
/// function means "no exclusions".
using Clearance2 = std::function<double(double, double)>;

inline constexpr double kDefaultMargin = 1e-2;

/// A complex-valued function of two real variables together with a derivative
/// backend and its domain exclusions.
///
/// Fields built from a generic expression (a callable templated on its scalar
/// type) get exact jets and can be evaluated at complex arguments, which is
/// what Wick rotations need. Opaque fields only provide real-argument values
/// and always differentiate by central differences.
class ScalarField2 {
 public:
  using JetFn = std::function<Jet2(const Jet2&, const Jet2&)>;
  using ComplexFn = std::function<CNum(CNum, CNum)>;
  using RealFn = std::function<CNum(double, double)>;

  ScalarField2() = default;

  template <class Expr>
  static ScalarField2 from_expression(Expr expr, Clearance2 clearance = {}) {
    ScalarField2 f;
    f.jet_fn_ = [expr](const Jet2& a, const Jet2& b) { return Jet2(expr(a, b)); };
    f.complex_fn_ = [expr](CNum a, CNum b) { return CNum(expr(a, b)); };
    f.clearance_ = std::move(clearance);
    return f;
  }

  static ScalarField2 from_values(RealFn fn, Clearance2 clearance = {});

  ScalarField2 with_backend(Backend backend) const;
  ScalarField2 with_clearance(Clearance2 clearance) const;

  /// Value at a real point; DomainError when the value is not finite.
  CNum operator()(double a, double b) const;
  /// Value at complex arguments; UnsupportedEvaluator for opaque fields.
  CNum at_complex(CNum a, CNum b) const;

  bool has_exact_jet() const { return static_cast<bool>(jet_fn_); }
  const Backend& backend() const { return backend_; }
  /// Backend actually used by jet(): ExactJet requests on opaque fields fall
  /// back to central differences.
  Backend effective_backend() const;
  bool falls_back() const;

  double clearance(double a, double b) const;
  bool excluded(double a, double b, double margin = kDefaultMargin) const {
    return clearance(a, b) <= margin;
  }

  const JetFn& jet_fn() const { return jet_fn_; }
  const ComplexFn& complex_fn() const { return complex_fn_; }

  /// Builds a field from a jet evaluator and a matching complex evaluator.
  static ScalarField2 from_parts(JetFn jet_fn, ComplexFn complex_fn, Clearance2 clearance);

 private:
  JetFn jet_fn_;
  ComplexFn complex_fn_;
  RealFn real_fn_;
  Clearance2 clearance_;
  Backend backend_ = ExactJet{};
};

/// Value and partials to order two at (a, b) with the field's backend.
Jet2 jet(const ScalarField2& field, double a, double b);
Jet2 jet(const ScalarField2& field, double a, double b, const Backend& backend);

}  // namespace soliton_lab
