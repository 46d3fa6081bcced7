#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "soliton_lab/jet.hpp"

namespace soliton_lab {

/// A 3-vector of Lorentz-Minkowski space with metric dx^2 + dy^2 - dz^2.
/// The component type may be real, complex, or a Jet2.
template <class T>
struct LVec3 {
  T x{}, y{}, z{};

  LVec3& operator+=(const LVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  LVec3& operator-=(const LVec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

template <class T> LVec3<T> operator+(LVec3<T> a, const LVec3<T>& b) { return a += b; }
template <class T> LVec3<T> operator-(LVec3<T> a, const LVec3<T>& b) { return a -= b; }
template <class T, class S>
auto operator*(const S& s, const LVec3<T>& a) -> LVec3<decltype(s * a.x)> {
  return {s * a.x, s * a.y, s * a.z};
}

using RVec3 = LVec3<double>;
using CVec3 = LVec3<CNum>;

template <class T>
auto lorentz_inner(const LVec3<T>& a, const LVec3<T>& b) {
  return a.x * b.x + a.y * b.y - a.z * b.z;
}

/// Complex-bilinear inner product of complex vectors; promotes real input.
inline CNum lorentz_inner(const CVec3& a, const RVec3& b) {
  return a.x * b.x + a.y * b.y - a.z * b.z;
}

inline RVec3 real_part(const CVec3& v) { return {v.x.real(), v.y.real(), v.z.real()}; }
inline RVec3 imag_part(const CVec3& v) { return {v.x.imag(), v.y.imag(), v.z.imag()}; }
inline CVec3 to_complex(const RVec3& v) { return {v.x, v.y, v.z}; }

inline double max_abs(const RVec3& v) {
  return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}
inline double max_abs(const CVec3& v) {
  return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

}  // namespace soliton_lab
