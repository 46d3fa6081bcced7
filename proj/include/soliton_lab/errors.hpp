#pragma once

#include <stdexcept>
#include <string>

namespace soliton_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag ("domain", "degenerate", ...).
  virtual const char* kind() const noexcept { return "error"; }
};

#define SOLITON_LAB_ERROR(Name, tag)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    using Error::Error;                                                \
    const char* kind() const noexcept override { return tag; }         \
  };

/// A point (or stencil neighbour) lies outside the domain of a field or map.
SOLITON_LAB_ERROR(DomainError, "domain")
/// The tangent plane is lightlike; normal and second form are undefined.
SOLITON_LAB_ERROR(DegenerateError, "degenerate")
/// The evaluator cannot be evaluated at complex arguments.
SOLITON_LAB_ERROR(UnsupportedEvaluator, "unsupported_evaluator")
/// No pole-avoiding integration path was found within the detour budget.
SOLITON_LAB_ERROR(PathError, "path")
SOLITON_LAB_ERROR(UnknownSurface, "unknown_surface")
SOLITON_LAB_ERROR(UnknownSolution, "unknown_solution")
/// Identity arguments violate the identity's hypotheses.
SOLITON_LAB_ERROR(ExcludedPoint, "excluded_point")
SOLITON_LAB_ERROR(JacobianSingular, "jacobian_singular")

#undef SOLITON_LAB_ERROR

}  // namespace soliton_lab
