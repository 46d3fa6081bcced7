#include "soliton_lab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace soliton_lab::quadrature {

namespace {

// Kronrod abscissae (positive half) and weights; odd-indexed abscissae are the
// Gauss points.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double lo, hi;
  CNum value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval rule15(const std::function<CNum(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  const CNum fc = f(centre);
  CNum kronrod = fc * kWgk[7];
  CNum gauss = fc * kWg[3];
  for (int k = 0; k < 7; ++k) {
    const double dx = half * kXgk[k];
    const CNum sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[k] * sum;
    if (k % 2 == 1) gauss += kWg[k / 2] * sum;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

Result gauss_kronrod(const std::function<CNum(double)>& f, double lo, double hi,
                     const Options& opts) {
  std::priority_queue<Interval> heap;
  heap.push(rule15(f, lo, hi));
  CNum total = heap.top().value;
  double error = heap.top().error;
  int evaluations = 15;
  int intervals = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
         intervals < opts.max_intervals) {
    const Interval worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // cannot split further
    heap.pop();
    const Interval left = rule15(f, worst.lo, mid), right = rule15(f, mid, worst.hi);
    heap.push(left);
    heap.push(right);
    evaluations += 30;
    ++intervals;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  if (!is_finite(total)) throw DomainError("integrand is not finite along the path");
  return {total, error, evaluations};
}

Result segment_integral(const std::function<CNum(CNum)>& f, CNum a, CNum b, const Options& opts) {
  const CNum delta = b - a;
  if (delta == CNum{}) return {};
  Result r = gauss_kronrod([&](double s) { return f(a + s * delta); }, 0.0, 1.0, opts);
  r.value *= delta;
  r.error *= std::abs(delta);
  return r;
}

Result path_integral(const std::function<CNum(CNum)>& f, std::span<const CNum> path,
                     const Options& opts) {
  Result total;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Result r = segment_integral(f, path[i - 1], path[i], opts);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
  }
  return total;
}

double segment_distance(CNum p, CNum a, CNum b) {
  const CNum d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double s = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + s * d));
}

namespace {

bool plan_segment(CNum a, CNum b, std::span<const CNum> poles, const PathOptions& opts,
                  int depth, std::vector<CNum>& out) {
  // The blocking pole is the closest one whose approach is interior to the
  // segment; poles at the endpoints themselves are the caller's business.
  const CNum* blocking = nullptr;
  double closest = std::numeric_limits<double>::infinity();
  for (const CNum& p : poles) {
    if (std::abs(p - a) < opts.pole_margin || std::abs(p - b) < opts.pole_margin) continue;
    const double dist = segment_distance(p, a, b);
    if (dist < opts.pole_margin && dist < closest) {
      closest = dist;
      blocking = &p;
    }
  }
  if (!blocking) {
    out.push_back(b);
    return true;
  }
  if (depth >= opts.max_depth) return false;
  const CNum dir = (b - a) / std::abs(b - a);
  const CNum normal = kI * dir;
  for (double offset : opts.detour_offsets) {
    for (double side : {1.0, -1.0}) {
      const CNum via = *blocking + side * offset * normal;
      std::vector<CNum> trial;
      if (plan_segment(a, via, poles, opts, depth + 1, trial) &&
          plan_segment(via, b, poles, opts, depth + 1, trial)) {
        out.insert(out.end(), trial.begin(), trial.end());
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<CNum> plan_path(CNum from, CNum to, std::span<const CNum> poles,
                            const PathOptions& opts) {
  for (const CNum& p : poles)
    if (p == from || p == to) throw DomainError("integration endpoint is a pole");
  std::vector<CNum> path{from};
  if (!plan_segment(from, to, poles, opts, 0, path))
    throw PathError("no pole-avoiding path within the detour budget");
  return path;
}

}  // namespace soliton_lab::quadrature
