#pragma once

#include <functional>
#include <utility>

#include "soliton_lab/surface.hpp"

namespace soliton_lab {

/// A holomorphic function of one complex variable, evaluable on plain values
/// and on (u, v)-jets of the argument. The jet's vx entry is the complex
/// derivative.
class HoloFn {
 public:
  using ValueFn = std::function<CNum(CNum)>;
  using JetFn = std::function<Jet2(const Jet2&)>;

  HoloFn() = default;

  template <class Expr>
  static HoloFn from_expression(Expr expr) {
    HoloFn f;
    f.value_ = [expr](CNum w) { return CNum(expr(w)); };
    f.jet_ = [expr](const Jet2& w) { return Jet2(expr(w)); };
    return f;
  }

  static HoloFn zero() {
    return from_expression([](auto) { return CNum{}; });
  }

  explicit operator bool() const { return static_cast<bool>(value_); }

  CNum operator()(CNum w) const { return value_(w); }
  Jet2 operator()(const Jet2& w) const { return jet_(w); }
  /// f'(w).
  CNum derivative(CNum w) const { return jet_(parameter_jet(w)).vx; }

  HoloFn scaled(CNum factor) const {
    HoloFn f;
    auto v = value_;
    auto j = jet_;
    f.value_ = [v, factor](CNum w) { return factor * v(w); };
    f.jet_ = [j, factor](const Jet2& w) { return factor * j(w); };
    return f;
  }

 private:
  ValueFn value_;
  JetFn jet_;
};

}  // namespace soliton_lab
