#pragma once

// Second-order truncated Taylor arithmetic in two real variables with complex
// coefficients. A Jet2 carries a value and its partials up to order two with
// respect to the two field variables (called x and t throughout).

#include <cmath>
#include <complex>
#include <numbers>

#include "soliton_lab/errors.hpp"

namespace soliton_lab {

using CNum = std::complex<double>;

inline constexpr CNum kI{0.0, 1.0};

/// Division that refuses a zero denominator instead of producing inf/NaN.
inline CNum checked_div(CNum num, CNum den) {
  if (den == CNum{0.0, 0.0}) throw DomainError("division by zero");
  return num / den;
}

inline bool is_finite(CNum z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct Jet2 {
  CNum v{}, vx{}, vt{}, vxx{}, vxt{}, vtt{};

  constexpr Jet2() = default;
  constexpr Jet2(CNum value) : v(value) {}  // NOLINT: constants promote
  constexpr Jet2(double value) : v(value) {}  // NOLINT
  constexpr Jet2(CNum v_, CNum vx_, CNum vt_, CNum vxx_, CNum vxt_, CNum vtt_)
      : v(v_), vx(vx_), vt(vt_), vxx(vxx_), vxt(vxt_), vtt(vtt_) {}

  /// Seed for the first variable.
  static constexpr Jet2 variable_x(CNum a) { return {a, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  /// Seed for the second variable.
  static constexpr Jet2 variable_t(CNum b) { return {b, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  bool finite() const {
    return is_finite(v) && is_finite(vx) && is_finite(vt) && is_finite(vxx) &&
           is_finite(vxt) && is_finite(vtt);
  }

  Jet2& operator+=(const Jet2& o) {
    v += o.v; vx += o.vx; vt += o.vt; vxx += o.vxx; vxt += o.vxt; vtt += o.vtt;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    v -= o.v; vx -= o.vx; vt -= o.vt; vxx -= o.vxx; vxt -= o.vxt; vtt -= o.vtt;
    return *this;
  }
  Jet2& operator*=(CNum s) {
    v *= s; vx *= s; vt *= s; vxx *= s; vxt *= s; vtt *= s;
    return *this;
  }
};

inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.vx, -a.vt, -a.vxx, -a.vxt, -a.vtt}; }
inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator+(Jet2 a, CNum s) { a.v += s; return a; }
inline Jet2 operator+(CNum s, Jet2 a) { a.v += s; return a; }
inline Jet2 operator-(Jet2 a, CNum s) { a.v -= s; return a; }
inline Jet2 operator-(CNum s, const Jet2& a) { return -a + s; }
inline Jet2 operator+(const Jet2& a, double s) { return a + CNum(s); }
inline Jet2 operator+(double s, const Jet2& a) { return a + CNum(s); }
inline Jet2 operator-(const Jet2& a, double s) { return a - CNum(s); }
inline Jet2 operator-(double s, const Jet2& a) { return CNum(s) - a; }
inline Jet2 operator*(Jet2 a, CNum s) { return a *= s; }
inline Jet2 operator*(CNum s, Jet2 a) { return a *= s; }
inline Jet2 operator*(const Jet2& a, double s) { return a * CNum(s); }
inline Jet2 operator*(double s, const Jet2& a) { return a * CNum(s); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.vx * b.v + a.v * b.vx,
          a.vt * b.v + a.v * b.vt,
          a.vxx * b.v + 2.0 * a.vx * b.vx + a.v * b.vxx,
          a.vxt * b.v + a.vx * b.vt + a.vt * b.vx + a.v * b.vxt,
          a.vtt * b.v + 2.0 * a.vt * b.vt + a.v * b.vtt};
}

/// Composition with a scalar function given its value and first two
/// derivatives at u.v.
inline Jet2 compose(const Jet2& u, CNum f0, CNum f1, CNum f2) {
  return {f0,
          f1 * u.vx,
          f1 * u.vt,
          f2 * u.vx * u.vx + f1 * u.vxx,
          f2 * u.vx * u.vt + f1 * u.vxt,
          f2 * u.vt * u.vt + f1 * u.vtt};
}

inline Jet2 reciprocal(const Jet2& u) {
  const CNum r = checked_div(1.0, u.v);
  return compose(u, r, -r * r, 2.0 * r * r * r);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(const Jet2& a, CNum s) { return a * checked_div(1.0, s); }
inline Jet2 operator/(const Jet2& a, double s) { return a / CNum(s); }
inline Jet2 operator/(CNum s, const Jet2& a) { return s * reciprocal(a); }
inline Jet2 operator/(double s, const Jet2& a) { return CNum(s) * reciprocal(a); }

// Componentwise real/imaginary parts and conjugation commute with
// differentiation in real variables.
inline Jet2 re(const Jet2& a) {
  return {a.v.real(), a.vx.real(), a.vt.real(), a.vxx.real(), a.vxt.real(), a.vtt.real()};
}
inline Jet2 im(const Jet2& a) {
  return {a.v.imag(), a.vx.imag(), a.vt.imag(), a.vxx.imag(), a.vxt.imag(), a.vtt.imag()};
}
inline Jet2 conj(const Jet2& a) {
  return {std::conj(a.v), std::conj(a.vx), std::conj(a.vt),
          std::conj(a.vxx), std::conj(a.vxt), std::conj(a.vtt)};
}
inline CNum re(CNum z) { return z.real(); }
inline CNum im(CNum z) { return z.imag(); }

inline Jet2 exp(const Jet2& u) {
  const CNum e = std::exp(u.v);
  return compose(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
  const CNum r = checked_div(1.0, u.v);
  return compose(u, std::log(u.v), r, -r * r);
}

inline Jet2 sin(const Jet2& u) {
  const CNum s = std::sin(u.v), c = std::cos(u.v);
  return compose(u, s, c, -s);
}

inline Jet2 cos(const Jet2& u) {
  const CNum s = std::sin(u.v), c = std::cos(u.v);
  return compose(u, c, -s, -c);
}

inline Jet2 tan(const Jet2& u) {
  if (std::cos(u.v) == CNum{}) throw DomainError("tan at a pole");
  const CNum t = std::tan(u.v);
  const CNum sec2 = 1.0 + t * t;
  return compose(u, t, sec2, 2.0 * t * sec2);
}

inline Jet2 sinh(const Jet2& u) {
  const CNum s = std::sinh(u.v), c = std::cosh(u.v);
  return compose(u, s, c, s);
}

inline Jet2 cosh(const Jet2& u) {
  const CNum s = std::sinh(u.v), c = std::cosh(u.v);
  return compose(u, c, s, c);
}

inline Jet2 tanh(const Jet2& u) {
  const CNum t = std::tanh(u.v);
  const CNum sech2 = 1.0 - t * t;
  return compose(u, t, sech2, -2.0 * t * sech2);
}

inline Jet2 atan(const Jet2& u) {
  const CNum d = checked_div(1.0, 1.0 + u.v * u.v);
  return compose(u, std::atan(u.v), d, -2.0 * u.v * d * d);
}

inline Jet2 atanh(const Jet2& u) {
  const CNum d = checked_div(1.0, 1.0 - u.v * u.v);
  return compose(u, std::atanh(u.v), d, 2.0 * u.v * d * d);
}

inline Jet2 asinh(const Jet2& u) {
  const CNum s = std::sqrt(1.0 + u.v * u.v);
  const CNum r = checked_div(1.0, s);
  return compose(u, std::asinh(u.v), r, -u.v * r * r * r);
}

inline Jet2 sqrt(const Jet2& u) {
  const CNum s = std::sqrt(u.v);
  const CNum r = checked_div(1.0, s);
  return compose(u, s, 0.5 * r, -0.25 * r * r * r);
}

/// u^p for a constant exponent; at u = 0 only the derivatives that stay finite
/// are allowed.
inline Jet2 pow(const Jet2& u, double p) {
  if (u.v == CNum{}) {
    const bool natural = p >= 0.0 && p == std::floor(p);
    auto falling = [p, natural](int order) -> CNum {
      if (p == static_cast<double>(order)) return std::tgamma(p + 1.0);
      if (p > order || natural) return 0.0;
      throw DomainError("pow: derivative singular at zero");
    };
    return compose(u, falling(0), falling(1), falling(2));
  }
  const CNum f0 = std::pow(u.v, p);
  const CNum r = checked_div(1.0, u.v);
  return compose(u, f0, p * f0 * r, p * (p - 1.0) * f0 * r * r);
}

inline Jet2 square(const Jet2& u) { return u * u; }
inline CNum square(CNum z) { return z * z; }

/// Principal argument; the negative real axis is the discontinuity ray.
inline Jet2 arg(const Jet2& u) { return im(log(u)); }
inline CNum arg(CNum z) { return std::arg(z); }

}  // namespace soliton_lab
