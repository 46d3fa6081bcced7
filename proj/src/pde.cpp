#include "soliton_lab/pde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace soliton_lab::pde {

std::string to_string(Equation eq) {
  switch (eq) {
    case Equation::BornInfeld: return "born_infeld";
    case Equation::Maximal: return "maximal";
    case Equation::Minimal: return "minimal";
  }
  return "unknown";
}

Equation equation_from_string(const std::string& name) {
  if (name == "born_infeld") return Equation::BornInfeld;
  if (name == "maximal") return Equation::Maximal;
  if (name == "minimal") return Equation::Minimal;
  throw std::invalid_argument("unknown equation '" + name + "'");
}

CNum born_infeld_residual(const Jet2& j) {
  return (1.0 + j.vx * j.vx) * j.vtt - 2.0 * j.vx * j.vt * j.vxt + (j.vt * j.vt - 1.0) * j.vxx;
}

CNum maximal_residual(const Jet2& j) {
  return (1.0 - j.vx * j.vx) * j.vtt + 2.0 * j.vx * j.vt * j.vxt + (1.0 - j.vt * j.vt) * j.vxx;
}

CNum minimal_residual(const Jet2& j) {
  return (1.0 + j.vx * j.vx) * j.vtt - 2.0 * j.vx * j.vt * j.vxt + (1.0 + j.vt * j.vt) * j.vxx;
}

CNum residual(Equation eq, const Jet2& j) {
  switch (eq) {
    case Equation::BornInfeld: return born_infeld_residual(j);
    case Equation::Maximal: return maximal_residual(j);
    case Equation::Minimal: return minimal_residual(j);
  }
  return {};
}

CNum born_infeld_residual(const ScalarField2& field, double a, double b) {
  return born_infeld_residual(jet(field, a, b));
}

CNum maximal_residual(const ScalarField2& field, double a, double b) {
  return maximal_residual(jet(field, a, b));
}

CNum minimal_residual(const ScalarField2& field, double a, double b) {
  return minimal_residual(jet(field, a, b));
}

bool spacelike_gradient(const ScalarField2& field, double a, double b) {
  const Jet2 j = jet(field, a, b);
  const double gx = j.vx.real(), gt = j.vt.real();
  return gx * gx + gt * gt < 1.0;
}

ScalarField2 wick_rotate_x(const ScalarField2& field) {
  if (!field.has_exact_jet())
    throw UnsupportedEvaluator("Wick rotation needs an expression-built field");
  auto jf = field.jet_fn();
  auto cf = field.complex_fn();
  return ScalarField2::from_parts(
             [jf](const Jet2& a, const Jet2& b) { return jf(kI * a, b); },
             [cf](CNum a, CNum b) { return cf(kI * a, b); }, {})
      .with_backend(field.backend());
}

ScalarField2 wick_rotate_t(const ScalarField2& field) {
  if (!field.has_exact_jet())
    throw UnsupportedEvaluator("Wick rotation needs an expression-built field");
  auto jf = field.jet_fn();
  auto cf = field.complex_fn();
  return ScalarField2::from_parts(
             [jf](const Jet2& a, const Jet2& b) { return jf(a, kI * b); },
             [cf](CNum a, CNum b) { return cf(a, kI * b); }, {})
      .with_backend(field.backend());
}

ResidualReport residual_on_grid(const std::string& name, const ScalarField2& field, Equation eq,
                                const GridSpec& grid, double margin) {
  grid.validate();
  ResidualReport report;
  report.name = name;
  report.equation = eq;
  report.grid = grid;
  report.margin = margin;
  report.backend = backend_name(field.effective_backend());
  if (field.falls_back()) report.backend += "+fallback";

  const auto nodes = grid.points();
  std::vector<char> usable(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    usable[i] = !field.excluded(nodes[i].first, nodes[i].second, margin);

  std::vector<CNum> values(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    if (usable[i]) values[i] = residual(eq, jet(field, nodes[i].first, nodes[i].second));
  });

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!usable[i]) {
      ++report.excluded_count;
      continue;
    }
    report.points.push_back(nodes[i]);
    report.residuals.push_back(values[i]);
    const double mag = std::abs(values[i]);
    if (report.residuals.size() == 1 || mag > report.max_abs) {
      report.max_abs = mag;
      report.worst_point = nodes[i];
    }
  }
  return report;
}

}  // namespace soliton_lab::pde
