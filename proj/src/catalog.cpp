// Exact solutions of the Born-Infeld, maximal and minimal graph equations.

#include <algorithm>
#include <cmath>

#include "soliton_lab/pde.hpp"

namespace soliton_lab::pde {

namespace {

GridSpec grid(double a0, double a1, double b0, double b1) { return {a0, a1, b0, b1, 41, 41}; }

}  // namespace

ScalarField2 affine_field(double ca, double cb, double c0) {
  return ScalarField2::from_expression([=](auto a, auto b) { return ca * a + cb * b + c0; });
}

std::vector<SolutionEntry> catalog(double k) {
  if (k == 0.0 || !std::isfinite(k)) throw DomainError("helicoid parameter k must be nonzero");
  std::vector<SolutionEntry> out;

  // Maximal graphs (x, t, f(x, t)).
  out.push_back({"helicoid_first_kind",
                 ScalarField2::from_expression([k](auto a, auto b) { return (1.0 / k) * atan(b / a); },
                                               [](double a, double) { return std::abs(a); }),
                 Equation::Maximal, "x > 0 half plane; atan(t/x) is singular on x = 0", Realness::Real,
                 grid(0.5, 2.0, -1.5, 1.5), "wick_helicoid_first_kind"});
  out.push_back({"lorentzian_catenoid",
                 ScalarField2::from_expression(
                     [](auto a, auto b) { return asinh(sqrt(a * a + b * b)); },
                     [](double a, double b) { return std::hypot(a, b); }),
                 Equation::Maximal, "plane minus the cone point x = t = 0", Realness::Real,
                 grid(-2.0, 2.0, 0.5, 2.5), "wick_catenoid_graph"});
  out.push_back({"scherk_first_kind",
                 ScalarField2::from_expression([](auto a, auto b) { return log(cosh(b) / cosh(a)); }),
                 Equation::Maximal, "entire plane; spacelike where sech^2 x + sech^2 t > 1",
                 Realness::Real, grid(-1.5, 1.5, -1.5, 1.5), "wick_scherk"});
  out.push_back({"helicoid_second_kind",
                 ScalarField2::from_expression([k](auto a, auto b) { return a * tanh(k * b); }),
                 Equation::Maximal, "entire plane", Realness::Real, grid(-1.0, 1.0, -1.0, 1.0),
                 "wick_helicoid_second_kind"});

  // Born-Infeld solitons obtained by x -> i x.
  out.push_back({"wick_helicoid_first_kind",
                 ScalarField2::from_expression(
                     [k](auto a, auto b) { return (-kI / k) * atanh(b / a); },
                     [](double a, double b) { return std::min(std::abs(a), std::abs(a) - std::abs(b)); }),
                 Equation::BornInfeld, "|t/x| < 1 (chosen domain of artanh); purely imaginary",
                 Realness::Complex, grid(1.0, 2.0, -0.5, 0.5), std::nullopt});
  out.push_back({"wick_helicoid_second_kind",
                 ScalarField2::from_expression([k](auto a, auto b) { return kI * a * tanh(k * b); }),
                 Equation::BornInfeld, "entire plane; purely imaginary", Realness::Complex,
                 grid(-1.0, 1.0, -1.0, 1.0), std::nullopt});
  out.push_back({"wick_scherk",
                 ScalarField2::from_expression([](auto a, auto b) { return log(cosh(b) / cos(a)); },
                                               [](double a, double) { return std::abs(std::cos(a)); }),
                 Equation::BornInfeld, "cos x != 0; real where cos x > 0",
                 Realness::ConditionallyReal, grid(-1.2, 1.2, -1.5, 1.5), std::nullopt});
  out.push_back({"wick_catenoid_graph",
                 ScalarField2::from_expression(
                     [](auto a, auto b) { return asinh(sqrt(b * b - a * a)); },
                     [](double a, double b) { return std::abs(b) - std::abs(a); }),
                 Equation::BornInfeld,
                 "|t| > |x|; tangent plane is lightlike on t = +-x (graph over a timelike plane)",
                 Realness::ConditionallyReal, grid(-1.0, 1.0, 1.5, 2.5), std::nullopt});

  // Minimal graphs, used to cross-check the t -> i t rotation.
  out.push_back({"real_helicoid",
                 ScalarField2::from_expression([](auto a, auto b) { return atan(b / a); },
                                               [](double a, double) { return std::abs(a); }),
                 Equation::Minimal, "x > 0 half plane", Realness::Real, grid(0.5, 2.0, -1.5, 1.5),
                 std::nullopt});
  out.push_back({"minimal_scherk",
                 ScalarField2::from_expression(
                     [](auto a, auto b) { return log(cos(b) / cos(a)); },
                     [](double a, double b) {
                       return std::min(std::abs(std::cos(a)), std::abs(std::cos(b)));
                     }),
                 Equation::Minimal, "|x|, |t| < pi/2", Realness::Real, grid(-1.2, 1.2, -1.2, 1.2),
                 std::nullopt});
  return out;
}

SolutionEntry find_solution(const std::string& name, double k) {
  for (auto& entry : catalog(k))
    if (entry.name == name) return entry;
  throw UnknownSolution("unknown solution '" + name + "'");
}

}  // namespace soliton_lab::pde
