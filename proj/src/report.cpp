#include "soliton_lab/report.hpp"

#include <cmath>
#include <cstdio>

namespace soliton_lab::report {

namespace {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json vec_json(const RVec3& v) { return Json::array({v.x, v.y, v.z}); }

}  // namespace

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json complex_json(CNum z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json to_json(const pde::ResidualReport& r, bool include_points) {
  Json j{{"name", r.name},
         {"equation", pde::to_string(r.equation)},
         {"backend", r.backend},
         {"grid", r.grid.to_string()},
         {"margin", r.margin},
         {"evaluated", r.points.size()},
         {"excluded", r.excluded_count},
         {"max_abs", number(r.max_abs)},
         {"worst_point", Json::array({r.worst_point.first, r.worst_point.second})}};
  if (include_points) {
    Json pts = Json::array();
    for (std::size_t k = 0; k < r.points.size(); ++k)
      pts.push_back({{"a", r.points[k].first},
                     {"b", r.points[k].second},
                     {"residual", complex_json(r.residuals[k])}});
    j["points"] = std::move(pts);
  }
  return j;
}

Json to_json(const geometry::GraphPointReport& r) {
  Json j{{"y", r.y}, {"z", r.z}, {"class", geometry::to_string(r.causal)}};
  if (r.forms) {
    const auto& f = *r.forms;
    j["forms"] = {{"E", f.E}, {"F", f.F}, {"G", f.G}, {"e", f.e},
                  {"f", f.f2}, {"g", f.g}, {"disc", f.disc}};
  } else {
    j["forms"] = nullptr;
  }
  j["normal"] = r.normal ? vec_json(*r.normal) : Json(nullptr);
  j["H"] = r.H ? number(*r.H) : Json(nullptr);
  return j;
}

Json to_json(const identities::TruncationResult& r) {
  return {{"K", r.K},
          {"partial_re", number(r.partial.real())},
          {"partial_im", number(r.partial.imag())},
          {"lhs", number(r.lhs.real())},
          {"abs_err", number(r.abs_err)},
          {"est_order", number(r.est_order)},
          {"tail_corrected", r.tail_corrected}};
}

Json to_json(const family::WhithamDefects& d) {
  return {{"d1", number(d.d1)}, {"d2", number(d.d2)}, {"d3", number(d.d3)}};
}

Json to_json(const geometry::IsothermalDefects& d) {
  return {{"conformal", number(d.conformal)},
          {"cross", number(d.cross)},
          {"harmonic", number(d.harmonic)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string classify_csv(const std::vector<ClassifyRow>& rows) {
  std::string out = "y,z,class,H\n";
  for (const auto& r : rows) {
    out += fmt(r.y) + "," + fmt(r.z) + "," + (r.causal.empty() ? "undefined" : r.causal) + ",";
    if (r.H) out += fmt(*r.H);
    out += "\n";
  }
  return out;
}

int SurfaceSamples::vertex_count() const {
  int n = 0;
  for (const auto& p : points) n += p.has_value();
  return n;
}

std::string surface_csv(const SurfaceSamples& s) {
  std::string out = "u,v,x,y,z\n";
  for (int i = 0; i < s.grid.na; ++i)
    for (int j = 0; j < s.grid.nb; ++j) {
      const auto& p = s.points[static_cast<std::size_t>(i) * s.grid.nb + j];
      if (!p) continue;
      out += fmt(s.grid.a(i)) + "," + fmt(s.grid.b(j)) + "," + fmt(p->x) + "," + fmt(p->y) + "," +
             fmt(p->z) + "\n";
    }
  return out;
}

std::string surface_obj(const SurfaceSamples& s) {
  std::string out = "# grid " + s.grid.to_string() + "\n";
  std::vector<int> index(s.points.size(), 0);
  int next = 1;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    if (!s.points[k]) continue;
    index[k] = next++;
    const RVec3& p = *s.points[k];
    out += "v " + fmt(p.x) + " " + fmt(p.y) + " " + fmt(p.z) + "\n";
  }
  const int nb = s.grid.nb;
  auto id = [&](int i, int j) { return index[static_cast<std::size_t>(i) * nb + j]; };
  auto tri = [&](int a, int b, int c) {
    if (a && b && c) out += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
  };
  for (int i = 0; i + 1 < s.grid.na; ++i)
    for (int j = 0; j + 1 < nb; ++j) {
      tri(id(i, j), id(i + 1, j), id(i + 1, j + 1));
      tri(id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  return out;
}

Json to_json(const SurfaceSamples& s) {
  Json pts = Json::array();
  for (int i = 0; i < s.grid.na; ++i)
    for (int j = 0; j < s.grid.nb; ++j) {
      const auto& p = s.points[static_cast<std::size_t>(i) * s.grid.nb + j];
      pts.push_back({{"u", s.grid.a(i)}, {"v", s.grid.b(j)},
                     {"X", p ? vec_json(*p) : Json(nullptr)}});
    }
  return {{"grid", s.grid.to_string()}, {"vertices", s.vertex_count()}, {"points", pts}};
}

}  // namespace soliton_lab::report
