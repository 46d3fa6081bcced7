#include "soliton_lab/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace soliton_lab::family {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cut_clearance(CNum z) {
  const double ray = z.real() < 0.0 ? std::abs(z.imag()) : kInf;
  return std::min(std::abs(z), ray);
}

template <class T>
LVec3<T> helicoid_catenoid_F(const T& z) {
  return {0.5 * (z + 1.0 / z), -0.5 * kI * (z - 1.0 / z), -kI * log(z)};
}

LVec3<Jet2> combine(const LVec3<Jet2>& a, const LVec3<Jet2>& b, CNum ca, CNum cb) {
  return {ca * a.x + cb * b.x, ca * a.y + cb * b.y, ca * a.z + cb * b.z};
}

}  // namespace

ConjugatePair helicoid_catenoid_pair() {
  ConjugatePair p;
  p.X1 = SurfaceMap::from_expression(
      [](auto z) {
        const auto F = helicoid_catenoid_F(z);
        return decltype(F){re(F.x), re(F.y), re(F.z)};
      },
      cut_clearance, "helicoid: phi = arg zeta, principal branch");
  p.X2 = SurfaceMap::from_expression(
      [](auto z) {
        const auto F = helicoid_catenoid_F(z);
        return decltype(F){im(F.x), im(F.y), im(F.z)};
      },
      cut_clearance, "catenoid: phi = -ln|zeta|");
  p.F = [](CNum z) { return helicoid_catenoid_F(z); };
  return p;
}

ConjugatePair conjugate_pair_from_we(const weierstrass::WEData& data,
                                     const weierstrass::IntegrationOptions& opts) {
  ConjugatePair p;
  p.X1 = weierstrass::we_surface(data, opts);
  p.X2 = weierstrass::we_surface(weierstrass::we_data_rotation(data, std::numbers::pi / 2), opts);
  if (data.antiderivatives) {
    const auto prims = *data.antiderivatives;
    p.F = [prims](CNum z) { return CVec3{prims[0](z), prims[1](z), prims[2](z)}; };
  }
  return p;
}

ConjugatePair pair_from_string(const std::string& name) {
  if (name == "helicoid-catenoid" || name == "helicoid_catenoid") return helicoid_catenoid_pair();
  for (const auto& we : weierstrass::we_data_names())
    if (name == we) return conjugate_pair_from_we(weierstrass::catalog_we_data(we));
  throw UnknownSurface("unknown conjugate pair '" + name + "'");
}

SurfaceMap associate_family(const ConjugatePair& pair, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const SurfaceMap a = pair.X1, b = pair.X2;
  SurfaceMap::JetFn jet;
  if (a.has_jet() && b.has_jet())
    jet = [a, b, c, s](CNum z) { return combine(a.jet(z), b.jet(z), c, s); };
  return SurfaceMap::from_parts(
      [a, b, c, s](CNum z) {
        if (c == 0.0) return s * b(z);
        if (s == 0.0) return c * a(z);
        return c * a(z) + s * b(z);
      },
      std::move(jet), [a, b](CNum z) { return std::min(a.clearance(z), b.clearance(z)); },
      "associate family");
}

double conjugacy_check(const ConjugatePair& pair, CNum zeta) {
  const auto F = combine(pair.X1.jet(zeta), pair.X2.jet(zeta), 1.0, kI);
  double worst = 0.0;
  for (const Jet2* c : {&F.x, &F.y, &F.z}) worst = std::max(worst, std::abs(0.5 * (c->vx + kI * c->vt)));
  return worst;
}

SolitonFamilyPoint soliton_family(const ConjugatePair& pair, double theta, CNum zeta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const RVec3 a = pair.X1(zeta), b = pair.X2(zeta);
  SolitonFamilyPoint p;
  p.theta = theta;
  p.zeta = zeta;
  p.xs = kI * (c * a.x + s * b.x);
  p.ts = c * a.y + s * b.y;
  p.phis = c * a.z + s * b.z;
  return p;
}

WhithamPair helicoid_catenoid_whitham(double theta) {
  WhithamPair wp;
  wp.theta = theta;
  const CNum g = 0.5 * kI * std::polar(1.0, theta), h = 0.5 * kI * std::polar(1.0, -theta);
  wp.G = HoloFn::from_expression([g](auto w) { return g / w; });
  wp.H = HoloFn::from_expression([h](auto w) { return h / w; });
  wp.G_poles = {0.0};
  wp.H_poles = {0.0};
  return wp;
}

WhithamPair trivial_whitham() {
  WhithamPair wp;
  wp.G = HoloFn::zero();
  wp.H = HoloFn::zero();
  return wp;
}

double whitham_constraint_defect(const WhithamPair& wp, CNum zeta) {
  return std::abs(std::conj(wp.G(std::conj(zeta))) + wp.H(zeta));
}

double WhithamDefects::max() const { return std::max({d1, d2, d3}); }

WhithamDefects whitham_verify(const WhithamPair& wp, const SolitonFamilyPoint& point,
                              const SolitonFamilyPoint& base,
                              const weierstrass::IntegrationOptions& opts) {
  using quadrature::path_integral;
  using quadrature::plan_path;
  const HoloFn G = wp.G, H = wp.H;
  const CNum z = point.zeta, zb = std::conj(point.zeta);
  const auto path_h = plan_path(base.zeta, z, wp.H_poles, opts.path);
  const auto path_g = plan_path(std::conj(base.zeta), zb, wp.G_poles, opts.path);

  const CNum i1 = path_integral([&](CNum w) { return w * w * H.derivative(w); }, path_h, opts.quad).value;
  const CNum i2 = path_integral([&](CNum w) { return w * w * G.derivative(w); }, path_g, opts.quad).value;
  const CNum i3 = path_integral([&](CNum w) { return w * H.derivative(w); }, path_h, opts.quad).value -
                  path_integral([&](CNum w) { return w * G.derivative(w); }, path_g, opts.quad).value;

  const CNum c1 = (base.xs - base.ts) - G(std::conj(base.zeta));
  const CNum c2 = (base.xs + base.ts) - H(base.zeta);
  const CNum c3 = base.phis;

  WhithamDefects d;
  d.d1 = std::abs((point.xs - point.ts) - (G(zb) - i1 + c1));
  d.d2 = std::abs((point.xs + point.ts) - (H(z) - i2 + c2));
  d.d3 = std::abs(point.phis - (i3 + c3));
  return d;
}

pde::ResidualReport complex_bi_residual_on_family(const ConjugatePair& pair, double theta,
                                                  const std::vector<CNum>& zetas,
                                                  const std::string& name) {
  const double c = std::cos(theta), s = std::sin(theta);
  pde::ResidualReport report;
  report.name = name;
  report.equation = pde::Equation::BornInfeld;
  report.backend = "exact_jet+chain_rule";
  report.points.resize(zetas.size());
  report.residuals.resize(zetas.size());

  parallel_for(zetas.size(), [&](std::size_t k) {
    const CNum zeta = zetas[k];
    const auto fam = combine(pair.X1.jet(zeta), pair.X2.jet(zeta), c, s);
    const Jet2 x = kI * fam.x, t = fam.y, f = fam.z;
    // J = d(x, t)/d(u, v)
    const CNum a = x.vx, b = x.vt, cc = t.vx, d = t.vt;
    const CNum det = a * d - b * cc;
    if (std::abs(det) <= 1e-10) throw JacobianSingular("graph projection degenerates");
    // Jinv rows map (d/du, d/dv) to (d/dx, d/dt): [fx ft] = [fu fv] Jinv.
    const std::array<std::array<CNum, 2>, 2> Ji = {{{d / det, -b / det}, {-cc / det, a / det}}};
    const CNum fx = f.vx * Ji[0][0] + f.vt * Ji[1][0];
    const CNum ft = f.vx * Ji[0][1] + f.vt * Ji[1][1];
    // Hessian in (u, v) with the curvature of the chart removed.
    const std::array<std::array<CNum, 2>, 2> R = {
        {{f.vxx - fx * x.vxx - ft * t.vxx, f.vxt - fx * x.vxt - ft * t.vxt},
         {f.vxt - fx * x.vxt - ft * t.vxt, f.vtt - fx * x.vtt - ft * t.vtt}}};
    // Hxt = Ji^T R Ji
    std::array<std::array<CNum, 2>, 2> Hm{};
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n) Hm[p][q] += Ji[m][p] * R[m][n] * Ji[n][q];
    const Jet2 graph{f.v, fx, ft, Hm[0][0], Hm[0][1], Hm[1][1]};
    report.points[k] = {zeta.real(), zeta.imag()};
    report.residuals[k] = pde::born_infeld_residual(graph);
  });

  for (std::size_t k = 0; k < zetas.size(); ++k) {
    const double r = std::abs(report.residuals[k]);
    if (r > report.max_abs || k == 0) {
      report.max_abs = r;
      report.worst_point = report.points[k];
    }
  }
  return report;
}

std::vector<CNum> polar_grid(double r0, double r1, int nr, int na, double gap) {
  std::vector<CNum> out;
  out.reserve(static_cast<std::size_t>(nr) * na);
  const double pi = std::numbers::pi;
  for (int i = 0; i < nr; ++i) {
    const double r = nr == 1 ? r0 : r0 + (r1 - r0) * i / (nr - 1);
    for (int j = 0; j < na; ++j) {
      const double a = na == 1 ? 0.0 : (-pi + gap) + (2 * (pi - gap)) * j / (na - 1);
      out.push_back(std::polar(r, a));
    }
  }
  return out;
}

}  // namespace soliton_lab::family
