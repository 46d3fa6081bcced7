#include "soliton_lab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "soliton_lab/errors.hpp"
#include "soliton_lab/family.hpp"
#include "soliton_lab/geometry.hpp"
#include "soliton_lab/identities.hpp"
#include "soliton_lab/pde.hpp"
#include "soliton_lab/report.hpp"
#include "soliton_lab/weierstrass.hpp"

namespace soliton_lab::cli {

namespace {

using report::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(x)) throw std::invalid_argument(text);
    return x;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

GridSpec parse_grid(const std::string& text) {
  try {
    return GridSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--grid: ") + e.what());
  }
}

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Output {
  std::string path;
  std::ostream* fallback;
  void write(const std::string& text) const {
    if (path.empty()) {
      *fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << text;
  }
};

std::string format_of(const std::string& explicit_format, const std::string& path,
                      const std::string& fallback) {
  if (!explicit_format.empty()) return explicit_format;
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = path.substr(dot + 1);
    if (ext == "json" || ext == "csv" || ext == "obj") return ext;
  }
  return fallback;
}

std::string realness_name(pde::Realness r) {
  switch (r) {
    case pde::Realness::Real: return "real";
    case pde::Realness::Complex: return "complex";
    case pde::Realness::ConditionallyReal: return "conditionally_real";
  }
  return "";
}

// ---- commands ---------------------------------------------------------------

int cmd_catalog(double k, const Output& out) {
  Json sols = Json::array();
  for (const auto& e : pde::catalog(k)) {
    sols.push_back({{"name", e.name},
                    {"equation", pde::to_string(e.equation)},
                    {"realness", realness_name(e.realness)},
                    {"domain", e.domain_note},
                    {"grid", e.grid.to_string()},
                    {"wick_partner", e.wick_partner ? Json(*e.wick_partner) : Json(nullptr)}});
  }
  Json surfaces = Json::array();
  for (const auto& name : weierstrass::surface_names())
    surfaces.push_back({{"name", name}, {"note", weierstrass::catalog_surface(name).branch_note()}});
  Json j{{"solutions", sols},
         {"surfaces", surfaces},
         {"weierstrass_data", weierstrass::we_data_names()},
         {"pairs", Json::array({"helicoid-catenoid", "scherk_first_kind", "helicoid_second_kind"})},
         {"identities", identities::identity_names()}};
  out.write(report::dump(j));
  return kPass;
}

struct ResidualOpts {
  std::string solution, grid, backend = "exact_jet";
  double h = 1e-4, k = 1.0, margin = kDefaultMargin;
  std::optional<double> tol;
  bool wick = false, points = false;
};

int cmd_residual(const ResidualOpts& o, const Output& out, std::ostream& err) {
  const pde::SolutionEntry entry = pde::find_solution(o.solution, o.k);
  ScalarField2 field = entry.field;
  pde::Equation eq = entry.equation;
  GridSpec grid = entry.grid;
  std::string name = entry.name;
  if (o.wick) {
    if (!entry.wick_partner) throw UsageError("--wick: '" + entry.name + "' has no Wick partner");
    const auto partner = pde::find_solution(*entry.wick_partner, o.k);
    const auto clearance = partner.field;
    field = pde::wick_rotate_x(field).with_clearance(
        [clearance](double a, double b) { return clearance.clearance(a, b); });
    eq = pde::Equation::BornInfeld;
    grid = partner.grid;
    name = "wick(" + entry.name + ")";
  }
  if (!o.grid.empty()) grid = parse_grid(o.grid);
  grid.validate();
  if (o.backend == "central_diff") {
    if (!(o.h > 0)) throw UsageError("--h must be positive");
    field = field.with_backend(CentralDiff{o.h});
  } else if (o.backend != "exact_jet") {
    throw UsageError("--backend must be exact_jet or central_diff");
  }
  const double tol = o.tol.value_or(o.backend == "central_diff" ? 1e-5 : 1e-6);
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  const auto rep = pde::residual_on_grid(name, field, eq, grid, o.margin);
  Json j = report::to_json(rep, o.points);
  j["tolerance"] = tol;
  j["pass"] = rep.max_abs <= tol;
  out.write(report::dump(j));
  if (rep.max_abs > tol) {
    err << "violation: max_abs=" << report::fmt(rep.max_abs) << " > tol=" << report::fmt(tol) << "\n";
    return kViolation;
  }
  return kPass;
}

struct SampleOpts {
  std::string name, grid = "-2:2:-2:2:21:21", format, out;
  double margin = kDefaultMargin;
  bool numeric = false;
};

int cmd_surface_sample(const SampleOpts& o, const Output& out) {
  SurfaceMap surface = o.numeric ? weierstrass::we_surface(weierstrass::catalog_we_data(o.name))
                                 : weierstrass::catalog_surface(o.name);
  report::SurfaceSamples s;
  s.grid = parse_grid(o.grid);
  s.grid.validate();
  const auto nodes = s.grid.points();
  s.points.resize(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t k) {
    const CNum zeta(nodes[k].first, nodes[k].second);
    if (surface.excluded(zeta, o.margin)) return;
    try {
      s.points[k] = surface(zeta);
    } catch (const DomainError&) {
    }
  });
  const std::string fmt = format_of(o.format, o.out, "json");
  if (fmt == "obj") out.write(surface_obj(s));
  else if (fmt == "csv") out.write(surface_csv(s));
  else if (fmt == "json") out.write(report::dump(report::to_json(s)));
  else throw UsageError("--format must be json, csv or obj");
  return kPass;
}

struct FamilyOpts {
  std::string pair = "helicoid-catenoid", thetas = "0,pi/6,pi/4,pi/3,pi/2";
  int points = 20;
  double tol = 1e-6, whitham_tol = 1e-8;
};

int cmd_family(const FamilyOpts& o, std::uint64_t seed, const Output& out, std::ostream& err) {
  const auto pair = family::pair_from_string(o.pair);
  const bool whitham = o.pair == "helicoid-catenoid" || o.pair == "helicoid_catenoid";
  if (o.points < 1) throw UsageError("--points must be at least 1");
  std::vector<double> thetas;
  for (const auto& t : split(o.thetas, ',')) thetas.push_back(parse_angle(t));
  if (thetas.empty()) throw UsageError("--theta-list is empty");

  std::mt19937_64 rng(seed);
  std::vector<CNum> zetas;
  for (int i = 0; i < o.points; ++i) {
    const double r = 0.5 + 1.5 * uniform01(rng);
    const double a = -std::numbers::pi + 0.1 + 2.0 * (std::numbers::pi - 0.1) * uniform01(rng);
    zetas.push_back(std::polar(r, a));
  }
  // The Weierstrass pairs live away from their poles; keep samples there.
  if (!whitham) {
    for (auto& z : zetas) z = 0.5 * z + CNum(2.0, 0.0);
  }

  Json rows = Json::array();
  bool ok = true;
  double worst = 0;
  for (double theta : thetas) {
    const SurfaceMap assoc = family::associate_family(pair, theta);
    double iso = 0, conj = 0;
    for (CNum z : zetas) {
      iso = std::max(iso, geometry::isothermal_check(assoc, z).max());
      conj = std::max(conj, family::conjugacy_check(pair, z));
    }
    Json row{{"theta", theta},
             {"max_defects", {{"isothermal", iso}, {"conjugacy", conj}}}};
    ok = ok && iso <= o.tol && conj <= o.tol;
    worst = std::max({worst, iso, conj});
    if (whitham) {
      const auto wp = family::helicoid_catenoid_whitham(theta);
      const auto base = family::soliton_family(pair, theta, 1.0);
      family::WhithamDefects d;
      double constraint = 0;
      for (CNum z : zetas) {
        const auto w = family::whitham_verify(wp, family::soliton_family(pair, theta, z), base);
        d.d1 = std::max(d.d1, w.d1);
        d.d2 = std::max(d.d2, w.d2);
        d.d3 = std::max(d.d3, w.d3);
        constraint = std::max(constraint, family::whitham_constraint_defect(wp, z));
      }
      const auto bi = family::complex_bi_residual_on_family(pair, theta, family::polar_grid(0.5, 2.0, 15, 15));
      row["whitham_defects"] = report::to_json(d);
      row["whitham_constraint"] = constraint;
      row["bi_residual"] = bi.max_abs;
      ok = ok && d.max() <= o.whitham_tol && constraint <= o.whitham_tol && bi.max_abs <= o.tol;
      worst = std::max({worst, d.max(), constraint, bi.max_abs});
    } else {
      row["whitham_defects"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  Json j{{"pair", o.pair}, {"seed", seed}, {"points", o.points}, {"results", rows}, {"pass", ok}};
  out.write(report::dump(j));
  if (!ok) {
    err << "violation: max_abs=" << report::fmt(worst) << "\n";
    return kViolation;
  }
  return kPass;
}

struct IdentityOpts {
  std::string name, X = "0", A = "0", zeta = "2,0", K = "100,1000,10000";
  std::optional<double> tol;
  bool tail = false;
  double margin = identities::kZetaMargin;
};

CNum parse_complex(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return parse_double(parts[0], what);
  if (parts.size() == 2) return {parse_double(parts[0], what), parse_double(parts[1], what)};
  throw UsageError("invalid " + what + " '" + text + "' (expected re or re,im)");
}

int cmd_identity(const IdentityOpts& o, const Output& out, std::ostream& err) {
  identities::IdentitySpec spec;
  try {
    spec = identities::identity_spec(o.name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  identities::IdentityArgs args;
  args.X = parse_complex(o.X, "--X");
  args.A = parse_complex(o.A, "--A");
  args.zeta = parse_complex(o.zeta, "--zeta");
  args.tail = o.tail;
  args.margin = o.margin;
  std::vector<long> Ks;
  for (const auto& k : split(o.K, ',')) {
    const double v = parse_double(k, "--K");
    if (v < 0 || v != std::floor(v)) throw UsageError("--K entries must be non-negative integers");
    Ks.push_back(static_cast<long>(v));
  }
  if (Ks.empty()) throw UsageError("--K is empty");
  std::vector<identities::TruncationResult> rows;
  try {
    rows = identities::convergence_order(spec, args, Ks);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json table = Json::array();
  for (const auto& r : rows) table.push_back(report::to_json(r));
  Json j{{"name", o.name},
         {"args", {{"X", report::complex_json(args.X)},
                   {"A", report::complex_json(args.A)},
                   {"zeta", report::complex_json(args.zeta)},
                   {"tail", args.tail}}},
         {"rows", table}};
  const double last = rows.back().abs_err;
  if (o.tol) {
    j["tolerance"] = *o.tol;
    j["pass"] = last <= *o.tol;
  }
  out.write(report::dump(j));
  if (o.tol && !(last <= *o.tol)) {
    err << "violation: max_abs=" << report::fmt(last) << " > tol=" << report::fmt(*o.tol) << "\n";
    return kViolation;
  }
  return kPass;
}

struct ClassifyOpts {
  std::string solution = "wick_catenoid_graph", grid, format, out;
  double tol = 1e-6;
};

int cmd_classify(const ClassifyOpts& o, const Output& out, std::ostream& err) {
  const auto entry = pde::find_solution(o.solution);
  const GridSpec grid = o.grid.empty() ? entry.grid : parse_grid(o.grid);
  grid.validate();
  const auto nodes = grid.points();
  std::vector<report::ClassifyRow> rows(nodes.size());
  std::vector<std::optional<geometry::GraphPointReport>> reports(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t k) {
    auto& row = rows[k];
    row.y = nodes[k].first;
    row.z = nodes[k].second;
    try {
      reports[k] = geometry::classify_point(entry.field, row.y, row.z);
      row.causal = geometry::to_string(reports[k]->causal);
      row.H = reports[k]->H;
    } catch (const DomainError&) {
    }
  });
  // Graphs of Born-Infeld solutions over the timelike plane have H = 0.
  double worst = 0;
  if (entry.equation == pde::Equation::BornInfeld)
    for (const auto& r : rows)
      if (r.H) worst = std::max(worst, std::abs(*r.H));
  const std::string fmt = format_of(o.format, o.out, "json");
  if (fmt == "csv") {
    out.write(report::classify_csv(rows));
  } else if (fmt == "json") {
    Json pts = Json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (reports[k]) pts.push_back(report::to_json(*reports[k]));
      else pts.push_back({{"y", rows[k].y}, {"z", rows[k].z}, {"class", "undefined"}});
    }
    out.write(report::dump(Json{{"solution", entry.name},
                                {"grid", grid.to_string()},
                                {"max_abs_H", worst},
                                {"points", pts}}));
  } else {
    throw UsageError("--format must be json or csv");
  }
  if (worst > o.tol) {
    err << "violation: max_abs=" << report::fmt(worst) << " > tol=" << report::fmt(o.tol) << "\n";
    return kViolation;
  }
  return kPass;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto p = s.find("pi");
  if (p == std::string::npos) return parse_double(s, "angle");
  std::string coef = s.substr(0, p);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double value = std::numbers::pi;
  if (coef == "-") value = -value;
  else if (!coef.empty() && coef != "+") value *= parse_double(coef, "angle");
  const std::string rest = s.substr(p + 2);
  if (rest.empty()) return value;
  if (rest[0] != '/') throw UsageError("invalid angle '" + text + "'");
  const double den = parse_double(rest.substr(1), "angle");
  if (den == 0) throw UsageError("invalid angle '" + text + "'");
  return value / den;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Born-Infeld solitons, maximal surfaces and Ramanujan identities", "soliton_lab"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "Write the report to this file");
  app.add_option("--seed", seed, "Seed for sampled points");

  auto* catalog = app.add_subcommand("catalog", "Catalog listings");
  auto* catalog_list = catalog->add_subcommand("list", "List solutions, surfaces and identities");
  catalog->require_subcommand(1);
  double catalog_k = 1.0;
  catalog_list->add_option("--k", catalog_k, "Helicoid parameter");

  ResidualOpts ro;
  auto* residual = app.add_subcommand("residual", "PDE residual sweep over a grid");
  residual->add_option("--solution", ro.solution)->required();
  residual->add_option("--grid", ro.grid, "a_min:a_max:b_min:b_max:na:nb");
  residual->add_option("--backend", ro.backend, "exact_jet or central_diff");
  residual->add_option("--h", ro.h, "Central-difference step");
  residual->add_option("--k", ro.k, "Helicoid parameter");
  residual->add_option("--margin", ro.margin, "Excluded radius");
  residual->add_option("--tol", ro.tol);
  residual->add_flag("--wick", ro.wick, "Wick-rotate x -> i x and check Born-Infeld");
  residual->add_flag("--points", ro.points, "Include per-point residuals");

  auto* surface = app.add_subcommand("surface", "Parametrised surfaces");
  surface->require_subcommand(1);
  SampleOpts so;
  auto* sample = surface->add_subcommand("sample", "Sample a catalog surface on a grid");
  sample->add_option("--name", so.name)->required();
  sample->add_option("--grid", so.grid);
  sample->add_option("--format", so.format, "json, csv or obj");
  sample->add_option("--margin", so.margin);
  sample->add_flag("--numeric", so.numeric, "Integrate the Weierstrass data numerically");

  FamilyOpts fo;
  auto* fam = app.add_subcommand("family", "Associate family and Whitham checks");
  fam->add_option("--pair", fo.pair);
  fam->add_option("--theta-list", fo.thetas, "Comma-separated angles (pi/6 syntax allowed)");
  fam->add_option("--points", fo.points, "Random zeta samples per theta");
  fam->add_option("--tol", fo.tol);
  fam->add_option("--whitham-tol", fo.whitham_tol);

  IdentityOpts io;
  auto* ident = app.add_subcommand("identity", "Identity convergence table");
  ident->add_option("--name", io.name)->required();
  ident->add_option("--X", io.X);
  ident->add_option("--A", io.A);
  ident->add_option("--zeta", io.zeta, "re or re,im");
  ident->add_option("--K", io.K, "Comma-separated truncation orders");
  ident->add_option("--margin", io.margin);
  ident->add_option("--tol", io.tol);
  ident->add_flag("--tail", io.tail, "Add the 1/k^2 tail estimate");

  ClassifyOpts co;
  auto* geom = app.add_subcommand("geometry", "Graph geometry");
  geom->require_subcommand(1);
  auto* classify = geom->add_subcommand("classify", "Causal class and H over a grid");
  classify->add_option("--solution", co.solution);
  classify->add_option("--grid", co.grid);
  classify->add_option("--format", co.format, "json or csv");
  classify->add_option("--tol", co.tol, "Bound on |H| for Born-Infeld graphs");

  // Options given after the subcommand are accepted too.
  for (auto* sub : {catalog_list, residual, sample, fam, ident, classify}) {
    sub->add_option("--out", out_path);
    sub->add_option("--seed", seed);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  const Output output{out_path, &out};
  try {
    if (catalog_list->parsed()) return cmd_catalog(catalog_k, output);
    if (residual->parsed()) return cmd_residual(ro, output, err);
    if (sample->parsed()) {
      so.out = out_path;
      return cmd_surface_sample(so, output);
    }
    if (fam->parsed()) return cmd_family(fo, seed, output, err);
    if (ident->parsed()) return cmd_identity(io, output, err);
    if (classify->parsed()) {
      co.out = out_path;
      return cmd_classify(co, output, err);
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const UnknownSolution& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const UnknownSurface& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << "\n";
    return kViolation;
  }
  err << "error: usage: no command given\n";
  return kUsage;
}

}  // namespace soliton_lab::cli
