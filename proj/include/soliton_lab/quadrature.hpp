#pragma once

#include <functional>
#include <span>
#include <vector>

#include "soliton_lab/jet.hpp"

namespace soliton_lab::quadrature {

struct Options {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_intervals = 4000;
};

struct Result {
  CNum value{};
  double error = 0.0;
  int evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of a complex-valued
/// function over [lo, hi].
Result gauss_kronrod(const std::function<CNum(double)>& f, double lo, double hi,
                     const Options& opts = {});

/// Contour integral of f along the straight segment from a to b.
Result segment_integral(const std::function<CNum(CNum)>& f, CNum a, CNum b,
                        const Options& opts = {});

/// Contour integral along the polyline path[0] -> path[1] -> ... .
Result path_integral(const std::function<CNum(CNum)>& f, std::span<const CNum> path,
                     const Options& opts = {});

struct PathOptions {
  double pole_margin = 1e-2;
  /// Perpendicular offsets tried, in order, for each blocked segment.
  std::vector<double> detour_offsets{0.25, 0.5, 1.0};
  int max_depth = 4;
};

/// Polyline from `from` to `to` staying at least pole_margin away from every
/// pole except at the endpoints. A straight segment is used when possible;
/// otherwise the segment is replaced by two segments through a point offset
/// perpendicular to it at the blocking pole. Throws PathError when the
/// detour budget is exhausted and DomainError when an endpoint is a pole.
std::vector<CNum> plan_path(CNum from, CNum to, std::span<const CNum> poles,
                            const PathOptions& opts = {});

/// Distance from p to the segment [a, b].
double segment_distance(CNum p, CNum a, CNum b);

}  // namespace soliton_lab::quadrature
