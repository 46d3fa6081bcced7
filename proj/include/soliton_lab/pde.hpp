#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soliton_lab/field.hpp"
#include "soliton_lab/grid.hpp"

namespace soliton_lab::pde {

enum class Equation { BornInfeld, Maximal, Minimal };

std::string to_string(Equation eq);
Equation equation_from_string(const std::string& name);

/// (1 + phi_x^2) phi_tt - 2 phi_x phi_t phi_xt + (phi_t^2 - 1) phi_xx
CNum born_infeld_residual(const Jet2& j);
/// (1 - f_x^2) f_tt + 2 f_x f_t f_xt + (1 - f_t^2) f_xx
CNum maximal_residual(const Jet2& j);
/// (1 + f_x^2) f_tt - 2 f_x f_t f_xt + (1 + f_t^2) f_xx
CNum minimal_residual(const Jet2& j);
CNum residual(Equation eq, const Jet2& j);

CNum born_infeld_residual(const ScalarField2& field, double a, double b);
CNum maximal_residual(const ScalarField2& field, double a, double b);
CNum minimal_residual(const ScalarField2& field, double a, double b);

/// True when f_x^2 + f_t^2 < 1 at (a, b), i.e. the graph is spacelike there.
/// Requires a real-valued field.
bool spacelike_gradient(const ScalarField2& field, double a, double b);

/// (a, b) -> field(i a, b). Throws UnsupportedEvaluator for opaque fields.
/// The result has no exclusions; attach a domain with with_clearance().
ScalarField2 wick_rotate_x(const ScalarField2& field);
/// (a, b) -> field(a, i b).
ScalarField2 wick_rotate_t(const ScalarField2& field);

struct ResidualReport {
  std::string name;
  Equation equation = Equation::BornInfeld;
  std::string backend;
  GridSpec grid;
  double margin = kDefaultMargin;
  std::vector<std::pair<double, double>> points;  // evaluated points only
  std::vector<CNum> residuals;
  double max_abs = 0.0;
  std::pair<double, double> worst_point{0.0, 0.0};
  int excluded_count = 0;
};

/// Evaluates the residual of `eq` at every grid node whose clearance exceeds
/// `margin`; the remaining nodes are counted as excluded.
ResidualReport residual_on_grid(const std::string& name, const ScalarField2& field, Equation eq,
                                const GridSpec& grid, double margin = kDefaultMargin);

enum class Realness { Real, Complex, ConditionallyReal };

struct SolutionEntry {
  std::string name;
  ScalarField2 field;
  Equation equation;
  std::string domain_note;
  Realness realness;
  GridSpec grid;  // acceptance grid on the stated domain
  /// Maximal entries: catalog entry that is the Wick rotation x -> i x of
  /// this one (its grid is where the rotated field is finite).
  std::optional<std::string> wick_partner;
};

/// Exact solutions of the three equations. `k` parametrises both helicoid
/// families (k != 0).
std::vector<SolutionEntry> catalog(double k = 1.0);
SolutionEntry find_solution(const std::string& name, double k = 1.0);

/// Closed forms used as independent oracles for the Wick images.
ScalarField2 affine_field(double ca, double cb, double c0);

}  // namespace soliton_lab::pde
