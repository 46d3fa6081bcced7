#include "soliton_lab/field.hpp"

#include <array>
#include <cstdio>

namespace soliton_lab {

std::string backend_name(const Backend& backend) {
  if (std::holds_alternative<ExactJet>(backend)) return "exact_jet";
  char buf[64];
  std::snprintf(buf, sizeof buf, "central_diff(h=%.17g)", std::get<CentralDiff>(backend).h);
  return buf;
}

ScalarField2 ScalarField2::from_values(RealFn fn, Clearance2 clearance) {
  ScalarField2 f;
  f.real_fn_ = std::move(fn);
  f.clearance_ = std::move(clearance);
  return f;
}

ScalarField2 ScalarField2::from_parts(JetFn jet_fn, ComplexFn complex_fn, Clearance2 clearance) {
  ScalarField2 f;
  f.jet_fn_ = std::move(jet_fn);
  f.complex_fn_ = std::move(complex_fn);
  f.clearance_ = std::move(clearance);
  return f;
}

ScalarField2 ScalarField2::with_backend(Backend backend) const {
  if (auto* cd = std::get_if<CentralDiff>(&backend); cd && !(cd->h > 0.0))
    throw DomainError("central difference step must be positive");
  ScalarField2 f = *this;
  f.backend_ = backend;
  return f;
}

ScalarField2 ScalarField2::with_clearance(Clearance2 clearance) const {
  ScalarField2 f = *this;
  f.clearance_ = std::move(clearance);
  return f;
}

CNum ScalarField2::operator()(double a, double b) const {
  const CNum value = complex_fn_ ? complex_fn_(a, b) : real_fn_(a, b);
  if (!is_finite(value)) throw DomainError("field value is not finite");
  return value;
}

CNum ScalarField2::at_complex(CNum a, CNum b) const {
  if (!complex_fn_) throw UnsupportedEvaluator("field has no complex-argument evaluator");
  return complex_fn_(a, b);
}

Backend ScalarField2::effective_backend() const {
  if (std::holds_alternative<ExactJet>(backend_) && !jet_fn_) return CentralDiff{};
  return backend_;
}

bool ScalarField2::falls_back() const {
  return std::holds_alternative<ExactJet>(backend_) && !jet_fn_;
}

double ScalarField2::clearance(double a, double b) const {
  return clearance_ ? clearance_(a, b) : std::numeric_limits<double>::infinity();
}

namespace {

Jet2 central_jet(const ScalarField2& field, double a, double b, double h) {
  // 3x3 stencil, index (i, j) <-> (a + (i-1)h, b + (j-1)h).
  std::array<std::array<CNum, 3>, 3> s{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double pa = a + (i - 1) * h, pb = b + (j - 1) * h;
      if (field.clearance(pa, pb) <= 0.0)
        throw DomainError("central-difference stencil touches an excluded point");
      s[i][j] = field(pa, pb);
    }
  }
  const double h2 = h * h;
  Jet2 out;
  out.v = s[1][1];
  out.vx = (s[2][1] - s[0][1]) / (2.0 * h);
  out.vt = (s[1][2] - s[1][0]) / (2.0 * h);
  out.vxx = (s[2][1] - 2.0 * s[1][1] + s[0][1]) / h2;
  out.vtt = (s[1][2] - 2.0 * s[1][1] + s[1][0]) / h2;
  out.vxt = (s[2][2] - s[2][0] - s[0][2] + s[0][0]) / (4.0 * h2);
  return out;
}

}  // namespace

Jet2 jet(const ScalarField2& field, double a, double b, const Backend& backend) {
  if (std::holds_alternative<ExactJet>(backend) && field.has_exact_jet()) {
    if (field.clearance(a, b) <= 0.0) throw DomainError("point is on an excluded set");
    const Jet2 j = field.jet_fn()(Jet2::variable_x(a), Jet2::variable_t(b));
    if (!j.finite()) throw DomainError("jet is not finite");
    return j;
  }
  const double h = std::holds_alternative<CentralDiff>(backend) ? std::get<CentralDiff>(backend).h
                                                                : CentralDiff{}.h;
  return central_jet(field, a, b, h);
}

Jet2 jet(const ScalarField2& field, double a, double b) {
  return jet(field, a, b, field.backend());
}

}  // namespace soliton_lab
