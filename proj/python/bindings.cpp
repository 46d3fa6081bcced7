#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "soliton_lab/cli.hpp"
#include "soliton_lab/errors.hpp"
#include "soliton_lab/family.hpp"
#include "soliton_lab/geometry.hpp"
#include "soliton_lab/identities.hpp"
#include "soliton_lab/pde.hpp"
#include "soliton_lab/report.hpp"
#include "soliton_lab/weierstrass.hpp"

namespace py = pybind11;
using namespace soliton_lab;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string residual(const std::string& name, const std::string& grid, const std::string& backend,
                     double h, double k, double margin, bool points) {
  const auto e = pde::find_solution(name, k);
  ScalarField2 field = e.field;
  if (backend == "central_diff") field = field.with_backend(CentralDiff{h});
  else if (backend != "exact_jet") throw std::invalid_argument("unknown backend '" + backend + "'");
  const GridSpec g = grid.empty() ? e.grid : GridSpec::parse(grid);
  return report::to_json(pde::residual_on_grid(e.name, field, e.equation, g, margin), points).dump();
}

std::string classify(const std::string& solution, double y, double z) {
  return report::to_json(geometry::classify_point(pde::find_solution(solution).field, y, z)).dump();
}

std::string identity_table(const std::string& name, std::vector<long> K, CNum X, CNum A, CNum zeta,
                           bool tail, double margin) {
  const auto spec = identities::identity_spec(name);
  identities::IdentityArgs args{X, A, zeta, tail, margin};
  report::Json rows = report::Json::array();
  for (const auto& r : identities::convergence_order(spec, args, K)) rows.push_back(report::to_json(r));
  return rows.dump();
}

std::array<double, 3> as_array(const RVec3& v) { return {v.x, v.y, v.z}; }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Born-Infeld solitons, maximal surfaces and Ramanujan identities";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(e.kind()) + ": " + e.what()).c_str());
    }
  });

  m.def("solution_names", [] {
    std::vector<std::string> names;
    for (const auto& e : pde::catalog()) names.push_back(e.name);
    return names;
  });
  m.def("surface_names", &weierstrass::surface_names);
  m.def("we_data_names", &weierstrass::we_data_names);
  m.def("identity_names", &identities::identity_names);

  m.def("residual_json", &residual, py::arg("name"), py::arg("grid") = "", py::arg("backend") = "exact_jet",
        py::arg("h") = 1e-4, py::arg("k") = 1.0, py::arg("margin") = kDefaultMargin, py::arg("points") = false);
  m.def("classify_json", &classify, py::arg("solution"), py::arg("y"), py::arg("z"));
  m.def("identity_json", &identity_table, py::arg("name"), py::arg("K"), py::arg("X") = CNum{},
        py::arg("A") = CNum{}, py::arg("zeta") = CNum{2.0, 0.0}, py::arg("tail") = false,
        py::arg("margin") = identities::kZetaMargin);

  m.def("we_integrate", [](const std::string& name, CNum zeta) {
    return as_array(weierstrass::we_integrate(weierstrass::catalog_we_data(name), zeta));
  });
  m.def("we_closed_form", [](const std::string& name, CNum zeta) {
    return as_array(weierstrass::we_closed_form(weierstrass::catalog_we_data(name), zeta));
  });
  m.def("surface_point", [](const std::string& name, CNum zeta) {
    return as_array(weierstrass::catalog_surface(name)(zeta));
  });
  m.def("isothermal_defect", [](const std::string& name, CNum zeta) {
    return geometry::isothermal_check(weierstrass::catalog_surface(name), zeta).max();
  });

  m.def("conjugacy_defect", [](const std::string& pair, CNum zeta) {
    return family::conjugacy_check(family::pair_from_string(pair), zeta);
  }, py::arg("pair"), py::arg("zeta"));
  m.def("associate_isothermal_defect", [](double theta, CNum zeta) {
    return geometry::isothermal_check(family::associate_family(family::helicoid_catenoid_pair(), theta), zeta).max();
  });
  m.def("soliton_point", [](double theta, CNum zeta) {
    const auto p = family::soliton_family(family::helicoid_catenoid_pair(), theta, zeta);
    return py::make_tuple(p.xs, p.ts, p.phis);
  });
  m.def("whitham_constraint_defect", [](double theta, CNum zeta) {
    return family::whitham_constraint_defect(family::helicoid_catenoid_whitham(theta), zeta);
  });
  m.def("whitham_defect", [](double theta, CNum zeta) {
    const auto pair = family::helicoid_catenoid_pair();
    return family::whitham_verify(family::helicoid_catenoid_whitham(theta), family::soliton_family(pair, theta, zeta),
                                  family::soliton_family(pair, theta, 1.0)).max();
  });

  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command-line tool in-process: (exit code, stdout, stderr).");
}
