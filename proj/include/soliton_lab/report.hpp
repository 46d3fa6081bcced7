#pragma once

// JSON, CSV and OBJ serialisation of the library's result types.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "soliton_lab/family.hpp"
#include "soliton_lab/geometry.hpp"
#include "soliton_lab/identities.hpp"
#include "soliton_lab/pde.hpp"

namespace soliton_lab::report {

using Json = nlohmann::ordered_json;

Json complex_json(CNum z);
Json to_json(const pde::ResidualReport& r, bool include_points = false);
Json to_json(const geometry::GraphPointReport& r);
Json to_json(const identities::TruncationResult& r);
Json to_json(const family::WhithamDefects& d);
Json to_json(const geometry::IsothermalDefects& d);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// "%.17g"
std::string fmt(double x);

/// A graph sweep row; `causal` is empty where the graph is undefined.
struct ClassifyRow {
  double y = 0, z = 0;
  std::string causal;
  std::optional<double> H;
};
/// Header "y,z,class,H"; an absent H is written as an empty field.
std::string classify_csv(const std::vector<ClassifyRow>& rows);

/// Samples of a surface on a row-major parameter grid; absent entries are
/// excluded vertices.
struct SurfaceSamples {
  GridSpec grid;
  std::vector<std::optional<RVec3>> points;
  int vertex_count() const;
};
/// Header "u,v,x,y,z"; excluded nodes are skipped.
std::string surface_csv(const SurfaceSamples& s);
/// Vertices in row-major order, two triangles per grid cell, skipping any
/// triangle that touches an excluded vertex.
std::string surface_obj(const SurfaceSamples& s);
Json to_json(const SurfaceSamples& s);

}  // namespace soliton_lab::report
