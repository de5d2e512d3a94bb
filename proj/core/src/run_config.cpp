#include "epsball/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <nlohmann/json.hpp>

#include "epsball/cone_profiles.hpp"
#include "epsball/io.hpp"
#include "epsball/verify.hpp"

namespace epsball {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct ErrorSink {
  std::vector<std::string>* errors;
  void add(const std::string& where, const std::string& what) {
    errors->push_back(where + ": " + what);
  }
};

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed, ErrorSink& sink) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) sink.add(where, "unknown key '" + key + "'");
  }
}

bool read_number(const json& obj, const std::string& where, const std::string& key,
                 double& out, ErrorSink& sink, bool required = true) {
  if (!obj.contains(key)) {
    if (required) sink.add(where, "missing key '" + key + "'");
    return false;
  }
  if (!obj[key].is_number()) {
    sink.add(where + "." + key, "expected a number");
    return false;
  }
  out = obj[key].get<double>();
  return true;
}

bool read_point(const json& arr, const std::string& where, int dim, Point& out,
                ErrorSink& sink) {
  out = {};
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
    sink.add(where, "expected an array of " + std::to_string(dim) + " numbers");
    return false;
  }
  for (int a = 0; a < dim; ++a) {
    if (!arr[a].is_number()) {
      sink.add(where, "expected numeric coordinates");
      return false;
    }
    out[a] = arr[a].get<double>();
  }
  return true;
}

std::optional<Expression> read_expression(const json& obj, const std::string& where,
                                          const std::string& key, int dim,
                                          ErrorSink& sink, bool required) {
  if (!obj.contains(key)) {
    if (required) sink.add(where, "missing key '" + key + "'");
    return std::nullopt;
  }
  std::string text;
  if (obj[key].is_number())
    text = format_double(obj[key].get<double>());
  else if (obj[key].is_string())
    text = obj[key].get<std::string>();
  else {
    sink.add(where + "." + key, "expected a number or an expression string");
    return std::nullopt;
  }
  try {
    Expression e = Expression::parse(text);
    if (e.max_coord() > dim) {
      sink.add(where + "." + key,
               "expression uses coordinate x" + std::to_string(e.max_coord()) +
                   " beyond the domain dimension");
      return std::nullopt;
    }
    return e;
  } catch (const ExpressionParseError& err) {
    sink.add(where + "." + key, err.what());
    return std::nullopt;
  }
}

int box_face_index(const std::string& name, int dim) {
  static const char* names[6] = {"x1lo", "x1hi", "x2lo", "x2hi", "x3lo", "x3hi"};
  for (int f = 0; f < 2 * dim; ++f)
    if (name == names[f]) return f;
  return -1;
}

/// Ordered 2-D polygon -> half-spaces with outward normals. Rejects vertex
/// lists whose turns change sign (non-convex) or degenerate edges.
bool polygon_to_halfspaces(const std::vector<Point>& verts, std::vector<Halfspace>& out,
                           std::string& error) {
  const int n = static_cast<int>(verts.size());
  if (n < 3) {
    error = "polygon needs at least 3 vertices";
    return false;
  }
  double area2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  if (std::fabs(area2) < 1e-14) {
    error = "polygon is degenerate";
    return false;
  }
  const double orient = area2 > 0.0 ? 1.0 : -1.0;  // +1 counter-clockwise

  int sign_seen = 0;
  for (int i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    const Point& c = verts[(i + 2) % n];
    const double cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
    if (std::fabs(cross) < 1e-14) continue;  // collinear corner is fine
    const int s = cross > 0.0 ? 1 : -1;
    if (sign_seen == 0) sign_seen = s;
    if (s != sign_seen) {
      error = "polygon is not convex";
      return false;
    }
  }

  out.clear();
  for (int i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    Halfspace h;
    // Outward normal of edge a->b for counter-clockwise orientation.
    h.normal = {orient * (b[1] - a[1]), orient * (a[0] - b[0]), 0.0};
    h.offset = h.normal[0] * a[0] + h.normal[1] * a[1];
    out.push_back(h);
  }
  return true;
}

void parse_domain(const json& j, RunConfig& cfg, ErrorSink& sink) {
  check_keys(j, "domain",
             {"dimension", "shape", "bounds", "center", "radius", "halfspaces",
              "vertices", "dirichlet", "neumann", "delta"},
             sink);

  double dim_number = 0.0;
  if (!read_number(j, "domain", "dimension", dim_number, sink)) return;
  const int dim = static_cast<int>(dim_number);
  if (dim < 1 || dim > 3) {
    sink.add("domain.dimension", "must be 1, 2 or 3");
    return;
  }
  cfg.domain.dim = dim;

  if (!read_number(j, "domain", "delta", cfg.delta, sink)) return;

  if (!j.contains("shape") || !j["shape"].is_string()) {
    sink.add("domain", "missing or non-string 'shape'");
    return;
  }
  const std::string shape = j["shape"].get<std::string>();

  auto labels_of = [&](const std::string& key) {
    std::vector<json> out;
    if (j.contains(key)) {
      if (!j[key].is_array()) {
        sink.add("domain." + key, "expected an array of boundary labels");
      } else {
        for (const auto& item : j[key]) out.push_back(item);
      }
    }
    return out;
  };
  const auto dirichlet = labels_of("dirichlet");
  const auto neumann = labels_of("neumann");

  if (shape == "box") {
    cfg.domain.shape = DomainSpec::Shape::Box;
    if (!j.contains("bounds") || !j["bounds"].is_array() || j["bounds"].size() != 2) {
      sink.add("domain.bounds", "expected [[lower...],[upper...]]");
      return;
    }
    if (!read_point(j["bounds"][0], "domain.bounds[0]", dim, cfg.domain.lo, sink) ||
        !read_point(j["bounds"][1], "domain.bounds[1]", dim, cfg.domain.hi, sink))
      return;

    std::array<int, 6> seen{};
    auto apply = [&](const std::vector<json>& labels, BoundaryLabel value,
                     const std::string& where) {
      for (const auto& l : labels) {
        if (!l.is_string()) {
          sink.add(where, "box faces are named x1lo/x1hi/...");
          continue;
        }
        const int f = box_face_index(l.get<std::string>(), dim);
        if (f < 0) {
          sink.add(where, "unknown face '" + l.get<std::string>() + "'");
          continue;
        }
        if (seen[f]++) sink.add(where, "face listed twice");
        cfg.domain.face_labels[f] = value;
      }
    };
    apply(dirichlet, BoundaryLabel::Dirichlet, "domain.dirichlet");
    apply(neumann, BoundaryLabel::Neumann, "domain.neumann");
    for (int f = 0; f < 2 * dim; ++f) {
      if (!seen[f]) {
        sink.add("domain", std::string("face '") + (f % 2 ? "hi" : "lo") +
                               "' of axis " + std::to_string(f / 2 + 1) +
                               " carries no label");
      }
    }
    if (dirichlet.empty()) sink.add("domain", "Dirichlet part must be nonempty");
  } else if (shape == "ball") {
    cfg.domain.shape = DomainSpec::Shape::Ball;
    if (j.contains("center"))
      read_point(j["center"], "domain.center", dim, cfg.domain.center, sink);
    else
      sink.add("domain", "missing key 'center'");
    read_number(j, "domain", "radius", cfg.domain.radius, sink);
    const bool d_all = dirichlet.size() == 1 && dirichlet[0].is_string() &&
                       dirichlet[0].get<std::string>() == "all";
    if (!d_all || !neumann.empty())
      sink.add("domain",
               "a ball boundary is one piece and must be dirichlet: [\"all\"] "
               "(Dirichlet part must be nonempty)");
    cfg.domain.sphere_label = BoundaryLabel::Dirichlet;
  } else if (shape == "polytope") {
    cfg.domain.shape = DomainSpec::Shape::Polytope;
    std::vector<Halfspace> hs;
    if (j.contains("vertices")) {
      if (dim != 2) {
        sink.add("domain.vertices", "vertex-list polytopes are 2-D only");
        return;
      }
      std::vector<Point> verts;
      if (!j["vertices"].is_array() || j["vertices"].size() < 3) {
        sink.add("domain.vertices", "expected at least 3 vertices");
        return;
      }
      for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        Point p{};
        if (!read_point(j["vertices"][i],
                        "domain.vertices[" + std::to_string(i) + "]", dim, p, sink))
          return;
        verts.push_back(p);
      }
      std::string error;
      if (!polygon_to_halfspaces(verts, hs, error)) {
        sink.add("domain.vertices", error + " (the domain must be convex)");
        return;
      }
    } else if (j.contains("halfspaces")) {
      if (!j["halfspaces"].is_array() || j["halfspaces"].empty()) {
        sink.add("domain.halfspaces", "expected a nonempty array");
        return;
      }
      for (std::size_t i = 0; i < j["halfspaces"].size(); ++i) {
        const auto& hj = j["halfspaces"][i];
        const std::string where = "domain.halfspaces[" + std::to_string(i) + "]";
        if (!hj.is_object()) {
          sink.add(where, "expected {normal, offset}");
          return;
        }
        check_keys(hj, where, {"normal", "offset"}, sink);
        Halfspace h;
        if (!hj.contains("normal") ||
            !read_point(hj["normal"], where + ".normal", dim, h.normal, sink))
          return;
        double off = 0.0;
        if (!read_number(hj, where, "offset", off, sink)) return;
        h.offset = off;
        hs.push_back(h);
      }
    } else {
      sink.add("domain", "polytope needs 'halfspaces' or 'vertices'");
      return;
    }

    std::vector<int> seen(hs.size(), 0);
    auto apply = [&](const std::vector<json>& labels, BoundaryLabel value,
                     const std::string& where) {
      for (const auto& l : labels) {
        if (!l.is_number_integer()) {
          sink.add(where, "polytope facets are labeled by index");
          continue;
        }
        const auto f = l.get<long>();
        if (f < 0 || f >= static_cast<long>(hs.size())) {
          sink.add(where, "facet index out of range");
          continue;
        }
        if (seen[static_cast<std::size_t>(f)]++) sink.add(where, "facet listed twice");
        hs[static_cast<std::size_t>(f)].label = value;
      }
    };
    apply(dirichlet, BoundaryLabel::Dirichlet, "domain.dirichlet");
    apply(neumann, BoundaryLabel::Neumann, "domain.neumann");
    for (std::size_t f = 0; f < hs.size(); ++f)
      if (!seen[f])
        sink.add("domain", "facet " + std::to_string(f) + " carries no label");
    if (dirichlet.empty()) sink.add("domain", "Dirichlet part must be nonempty");
    cfg.domain.halfspaces = std::move(hs);
  } else {
    sink.add("domain.shape", "unknown shape '" + shape + "'");
    return;
  }

  for (const auto& e : cfg.domain.validate()) sink.add("domain", e);
}

}  // namespace

ParsedConfig parse_config(const std::string& json_text) {
  ParsedConfig parsed;
  ErrorSink sink{&parsed.errors};

  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    sink.add("config", e.what());
    return parsed;
  }
  if (!root.is_object()) {
    sink.add("config", "top level must be an object");
    return parsed;
  }

  RunConfig cfg;
  check_keys(root, "config",
             {"mode", "domain", "scheme", "data", "solver", "output", "converge",
              "stability"},
             sink);

  if (root.contains("mode")) {
    const std::string m = root["mode"].is_string() ? root["mode"].get<std::string>() : "";
    if (m == "solve")
      cfg.mode = RunMode::Solve;
    else if (m == "verify")
      cfg.mode = RunMode::Verify;
    else if (m == "converge")
      cfg.mode = RunMode::Converge;
    else if (m == "stability")
      cfg.mode = RunMode::Stability;
    else
      sink.add("mode", "expected solve|verify|converge|stability");
  } else {
    sink.add("config", "missing key 'mode'");
  }

  if (root.contains("domain") && root["domain"].is_object())
    parse_domain(root["domain"], cfg, sink);
  else
    sink.add("config", "missing object 'domain'");

  if (root.contains("scheme") && root["scheme"].is_object()) {
    check_keys(root["scheme"], "scheme", {"epsilon", "beta"}, sink);
    read_number(root["scheme"], "scheme", "epsilon", cfg.epsilon, sink);
    read_number(root["scheme"], "scheme", "beta", cfg.beta, sink);
  } else {
    sink.add("config", "missing object 'scheme'");
  }

  const int dim = cfg.domain.dim;
  if (root.contains("data") && root["data"].is_object()) {
    check_keys(root["data"], "data", {"f", "g", "exact"}, sink);
    if (auto f = read_expression(root["data"], "data", "f", dim, sink, true))
      cfg.f = *f;
    if (auto g = read_expression(root["data"], "data", "g", dim, sink, true))
      cfg.g = *g;
    cfg.exact = read_expression(root["data"], "data", "exact", dim, sink, false);
  } else {
    sink.add("config", "missing object 'data'");
  }

  if (root.contains("solver")) {
    const auto& s = root["solver"];
    if (!s.is_object()) {
      sink.add("solver", "expected an object");
    } else {
      check_keys(s, "solver", {"seed", "seed_field", "tol", "max_sweeps", "sweep", "threads"},
                 sink);
      if (s.contains("seed")) {
        const std::string seed = s["seed"].is_string() ? s["seed"].get<std::string>() : "";
        if (seed == "from_above")
          cfg.seed = SeedKind::FromAbove;
        else if (seed == "from_below")
          cfg.seed = SeedKind::FromBelow;
        else if (seed == "given")
          cfg.seed = SeedKind::Given;
        else
          sink.add("solver.seed", "expected from_above|from_below|given");
      }
      if (s.contains("seed_field")) {
        if (s["seed_field"].is_string())
          cfg.seed_field_path = s["seed_field"].get<std::string>();
        else
          sink.add("solver.seed_field", "expected a path string");
      }
      if (s.contains("tol")) read_number(s, "solver", "tol", cfg.tol, sink);
      if (s.contains("max_sweeps")) {
        double ms = 0.0;
        if (read_number(s, "solver", "max_sweeps", ms, sink))
          cfg.max_sweeps = static_cast<int>(ms);
      }
      if (s.contains("sweep")) {
        const std::string sw = s["sweep"].is_string() ? s["sweep"].get<std::string>() : "";
        if (sw == "gauss_seidel")
          cfg.sweep = SweepKind::GaussSeidel;
        else if (sw == "jacobi")
          cfg.sweep = SweepKind::Jacobi;
        else
          sink.add("solver.sweep", "expected gauss_seidel|jacobi");
      }
      if (s.contains("threads")) {
        double t = 0.0;
        if (read_number(s, "solver", "threads", t, sink))
          cfg.threads = std::max(1, static_cast<int>(t));
      }
    }
  }

  if (root.contains("output")) {
    const auto& o = root["output"];
    if (!o.is_object()) {
      sink.add("output", "expected an object");
    } else {
      check_keys(o, "output", {"dir", "formats", "slices"}, sink);
      if (o.contains("dir")) {
        if (o["dir"].is_string())
          cfg.out_dir = o["dir"].get<std::string>();
        else
          sink.add("output.dir", "expected a path string");
      }
      if (o.contains("formats")) {
        if (!o["formats"].is_array()) {
          sink.add("output.formats", "expected an array");
        } else {
          cfg.out_csv = cfg.out_json = cfg.out_pgm = cfg.out_grid = false;
          for (const auto& f : o["formats"]) {
            const std::string name = f.is_string() ? f.get<std::string>() : "";
            if (name == "csv")
              cfg.out_csv = true;
            else if (name == "json")
              cfg.out_json = true;
            else if (name == "pgm")
              cfg.out_pgm = true;
            else if (name == "grid")
              cfg.out_grid = true;
            else
              sink.add("output.formats", "unknown format '" + name + "'");
          }
        }
      }
      if (o.contains("slices")) {
        if (!o["slices"].is_array()) {
          sink.add("output.slices", "expected an array");
        } else {
          for (const auto& sj : o["slices"]) {
            if (!sj.is_object()) {
              sink.add("output.slices", "expected {axis, index}");
              continue;
            }
            check_keys(sj, "output.slices[]", {"axis", "index"}, sink);
            RunConfig::Slice slice;
            double v = 0.0;
            if (read_number(sj, "output.slices[]", "axis", v, sink))
              slice.axis = static_cast<int>(v) - 1;
            if (read_number(sj, "output.slices[]", "index", v, sink))
              slice.index = static_cast<std::int32_t>(v);
            cfg.slices.push_back(slice);
          }
        }
      }
    }
  }

  if (root.contains("converge")) {
    const auto& c = root["converge"];
    if (!c.is_object()) {
      sink.add("converge", "expected an object");
    } else {
      check_keys(c, "converge", {"epsilons", "delta_factor"}, sink);
      if (c.contains("epsilons") && c["epsilons"].is_array()) {
        for (const auto& e : c["epsilons"])
          if (e.is_number()) cfg.converge_epsilons.push_back(e.get<double>());
      }
      if (c.contains("delta_factor"))
        read_number(c, "converge", "delta_factor", cfg.converge_delta_factor, sink);
    }
  }
  if (cfg.mode == RunMode::Converge) {
    if (cfg.converge_epsilons.empty())
      sink.add("converge", "converge mode needs a nonempty 'epsilons' list");
    if (!cfg.exact) sink.add("data", "converge mode needs an 'exact' expression");
    if (!(cfg.converge_delta_factor > 0.0) || cfg.converge_delta_factor > 1.0 / 3.0)
      sink.add("converge.delta_factor", "must lie in (0, 1/3]");
  }

  if (root.contains("stability")) {
    const auto& s = root["stability"];
    if (!s.is_object()) {
      sink.add("stability", "expected an object");
    } else {
      check_keys(s, "stability", {"betas", "beta_limit", "f_shifts", "margin"}, sink);
      if (s.contains("betas") && s["betas"].is_array())
        for (const auto& b : s["betas"])
          if (b.is_number()) cfg.stability_betas.push_back(b.get<double>());
      if (s.contains("f_shifts") && s["f_shifts"].is_array())
        for (const auto& b : s["f_shifts"])
          if (b.is_number()) cfg.stability_f_shifts.push_back(b.get<double>());
      double v = 0.0;
      if (s.contains("beta_limit") && read_number(s, "stability", "beta_limit", v, sink))
        cfg.stability_beta_limit = v;
      if (s.contains("margin") && read_number(s, "stability", "margin", v, sink))
        cfg.stability_margin = v;
    }
  }
  if (cfg.mode == RunMode::Stability && cfg.stability_betas.empty() &&
      cfg.stability_f_shifts.empty())
    sink.add("stability", "stability mode needs 'betas' or 'f_shifts'");

  // Cross-field checks that only make sense once the pieces parsed.
  if (parsed.errors.empty()) {
    if (!(cfg.delta > 0.0)) sink.add("domain.delta", "must be positive");
    if (!(cfg.epsilon > 0.0)) sink.add("scheme.epsilon", "must be positive");
    if (cfg.delta > cfg.epsilon)
      sink.add("scheme", "delta must not exceed epsilon (the ball must hold neighbors)");
    if (!(cfg.tol > 0.0)) sink.add("solver.tol", "must be positive");
    if (cfg.max_sweeps < 1) sink.add("solver.max_sweeps", "must be at least 1");
    if (cfg.seed == SeedKind::Given && cfg.seed_field_path.empty())
      sink.add("solver", "seed 'given' needs 'seed_field'");
    if (!cfg.seed_field_path.empty() && !fs::exists(cfg.seed_field_path))
      sink.add("solver.seed_field", "file not found: " + cfg.seed_field_path);
  }

  if (parsed.errors.empty()) parsed.config = std::move(cfg);
  return parsed;
}

namespace {

struct RunArtifacts {
  fs::path dir;
  bool any_fail = false;
  nlohmann::ordered_json report = nlohmann::ordered_json::object();
};

void print_check_line(const VerifyReport& r) {
  std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check
            << "  worst=" << format_double(r.worst_violation)
            << "  tol=" << format_double(r.tolerance) << "\n";
}

int run_solve(const RunConfig& cfg, RunArtifacts& art) {
  const Grid grid = build_grid(cfg.domain, cfg.delta);
  const SchemeParams params = make_scheme_params(cfg.beta, cfg.epsilon);
  const ScalarField f = sample(grid, [&](const Point& p) { return cfg.f(p); });

  SolveOptions opt;
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  opt.max_sweeps = cfg.max_sweeps;
  opt.sweep = cfg.sweep;
  opt.threads = cfg.threads;
  ScalarField seed_field;
  if (cfg.seed == SeedKind::Given) {
    seed_field = read_field_csv(cfg.seed_field_path, grid);
    opt.seed_field = &seed_field;
  }

  const SolveResult sol =
      solve(grid, params, f, [&](const Point& p) { return cfg.g(p); }, opt);

  if (cfg.out_csv) write_field_csv(art.dir / "solution.csv", sol.u);
  if (cfg.out_csv && grid.dim() == 1) write_profile_csv(art.dir / "solution_xy.csv", sol.u);
  if (cfg.out_pgm && grid.dim() == 2) write_pgm_heatmap(art.dir / "heatmap.pgm", sol.u);
  if (grid.dim() == 3)
    for (const auto& s : cfg.slices)
      write_slice_csv(art.dir / ("slice_ax" + std::to_string(s.axis + 1) + "_" +
                                 std::to_string(s.index) + ".csv"),
                      sol.u, s.axis, s.index);
  if (cfg.out_grid) write_grid_csv(art.dir / "grid.csv", grid);

  art.report["solve"] = to_json(sol.report);
  art.report["grid_hash"] = hash_string(grid.hash());
  std::cout << (sol.report.status == SolveStatus::Converged ? "[PASS] " : "[FAIL] ")
            << "solve  residual=" << format_double(sol.report.final_residual)
            << "  sweeps=" << sol.report.iterations << "\n";
  return sol.report.status == SolveStatus::Converged ? 0 : 1;
}

int run_verify(const RunConfig& cfg, RunArtifacts& art) {
  const Grid grid = build_grid(cfg.domain, cfg.delta);
  const SchemeParams params = make_scheme_params(cfg.beta, cfg.epsilon);
  const ScalarField f = sample(grid, [&](const Point& p) { return cfg.f(p); });
  auto g = [&](const Point& p) { return cfg.g(p); };

  SolveOptions opt;
  opt.tol = cfg.tol;
  opt.max_sweeps = cfg.max_sweeps;
  opt.sweep = cfg.sweep;
  opt.threads = cfg.threads;

  opt.seed = SeedKind::FromAbove;
  const SolveResult above = solve(grid, params, f, g, opt);
  opt.seed = SeedKind::FromBelow;
  const SolveResult below = solve(grid, params, f, g, opt);

  auto checks = nlohmann::ordered_json::array();
  bool all_pass = above.report.status == SolveStatus::Converged &&
                  below.report.status == SolveStatus::Converged;

  double gap = 0.0;
  for (NodeId i = 0; i < grid.size(); ++i)
    gap = std::max(gap, std::fabs(above.u[i] - below.u[i]));
  art.report["seed_gap_sup"] = gap;

  const ScalarField g_ext = extend_dirichlet_data(grid, g);
  double g_max = -std::numeric_limits<double>::infinity();
  for (NodeId i = 0; i < grid.size(); ++i)
    if (grid.dirichlet_distance[i] <= cfg.epsilon) g_max = std::max(g_max, g_ext[i]);
  double f_sup = 0.0;
  for (NodeId i = 0; i < grid.size(); ++i) f_sup = std::max(f_sup, std::fabs(f[i]));

  {
    VerifyReport r = check_apriori(above.u, g_max, cfg.beta, f_sup, cfg.epsilon,
                                   2.0 * cfg.epsilon);
    print_check_line(r);
    checks.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  {
    VerifyReport r = check_perturbation(above.u, f, params);
    print_check_line(r);
    checks.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  {
    // Comparison partner: same data, source raised by one; the exact operator
    // values of the two solved fields sandwich the pair (f, f+1).
    ScalarField f_hi = f;
    for (auto& v : f_hi.values) v += 1.0;
    opt.seed = SeedKind::FromAbove;
    const SolveResult partner = solve(grid, params, f_hi, g, opt);
    const NeighborhoodTable nbr = neighborhoods(grid, params.epsilon);
    ScalarField lu(grid), lv(grid);
    for (NodeId i : omega_eps_nodes(grid, params.epsilon)) {
      lu[i] = scheme_operator(partner.u, params, nbr, i);
      lv[i] = scheme_operator(above.u, params, nbr, i);
    }
    VerifyReport r =
        check_fd_comparison(partner.u, above.u, lu, lv, params, FdCase::Strict);
    print_check_line(r);
    checks.push_back(to_json(r));
    all_pass = all_pass && r.pass;

    VerifyReport rc = check_comparison_continuum(partner.u, above.u, cfg.epsilon);
    print_check_line(rc);
    checks.push_back(to_json(rc));
    all_pass = all_pass && rc.pass;
  }

  art.report["checks"] = checks;
  std::cout << (all_pass ? "[PASS] " : "[FAIL] ") << "verify bundle  seed_gap="
            << format_double(gap) << "\n";
  art.any_fail = !all_pass;
  return all_pass ? 0 : 2;
}

int run_converge(const RunConfig& cfg, RunArtifacts& art) {
  Problem problem;
  problem.domain = cfg.domain;
  problem.beta = cfg.beta;
  problem.f = [&](const Point& p) { return cfg.f(p); };
  problem.g = [&](const Point& p) { return cfg.g(p); };

  std::vector<double> deltas;
  for (double e : cfg.converge_epsilons) deltas.push_back(e * cfg.converge_delta_factor);

  SolveOptions opt;
  opt.tol = cfg.tol;
  opt.max_sweeps = cfg.max_sweeps;
  opt.sweep = cfg.sweep;
  opt.threads = cfg.threads;

  const Expression exact = *cfg.exact;
  const ConvergenceTable table = convergence_study(
      problem, [&](const Point& p) { return exact(p); },
      std::span<const double>(cfg.converge_epsilons), std::span<const double>(deltas),
      opt);

  write_atomically(art.dir / "convergence.csv", [&](std::ostream& out) {
    out << "epsilon,delta,sup_error_domain,sup_error_omega_eps,ratio,converged\n";
    for (const auto& r : table.rows) {
      out << format_double(r.eps) << ',' << format_double(r.delta) << ','
          << format_double(r.err_domain) << ',' << format_double(r.err_omega_eps)
          << ',' << format_double(r.ratio) << ',' << (r.converged ? 1 : 0) << '\n';
    }
  });
  art.report["convergence"] = to_json(table);

  bool ok = true;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    ok = ok && table.rows[i].converged;
    if (i > 0) ok = ok && table.rows[i].err_omega_eps <= table.rows[i - 1].err_omega_eps;
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "converge  rows=" << table.rows.size()
            << "\n";
  return ok ? 0 : 2;
}

int run_stability(const RunConfig& cfg, RunArtifacts& art) {
  Problem problem;
  problem.domain = cfg.domain;
  problem.beta = cfg.beta;
  problem.f = [&](const Point& p) { return cfg.f(p); };
  problem.g = [&](const Point& p) { return cfg.g(p); };

  SolveOptions opt;
  opt.tol = cfg.tol;
  opt.max_sweeps = cfg.max_sweeps;
  opt.sweep = cfg.sweep;
  opt.threads = cfg.threads;

  const double margin = cfg.stability_margin.value_or(2.0 * cfg.epsilon);
  VerifyReport r;
  if (!cfg.stability_betas.empty()) {
    r = stability_study(problem, cfg.stability_beta_limit.value_or(cfg.beta),
                        std::span<const double>(cfg.stability_betas), cfg.epsilon,
                        cfg.delta, margin, opt);
  } else {
    r = stability_study_sources(problem, std::span<const double>(cfg.stability_f_shifts),
                                cfg.epsilon, cfg.delta, margin, opt);
  }
  print_check_line(r);

  write_atomically(art.dir / "stability.csv", [&](std::ostream& out) {
    out << "param,distance\n";
    for (const auto& row : r.aux["runs"]) {
      out << format_double(row["param"].get<double>()) << ','
          << format_double(row["distance"].get<double>()) << '\n';
    }
  });
  art.report["stability"] = to_json(r);
  return r.pass ? 0 : 2;
}

}  // namespace

int run(const RunConfig& cfg) {
  RunArtifacts art;
  art.dir = cfg.out_dir;
  std::error_code ec;
  fs::create_directories(art.dir, ec);

  int status = 0;
  try {
    switch (cfg.mode) {
      case RunMode::Solve:
        status = run_solve(cfg, art);
        break;
      case RunMode::Verify:
        status = run_verify(cfg, art);
        break;
      case RunMode::Converge:
        status = run_converge(cfg, art);
        break;
      case RunMode::Stability:
        status = run_stability(cfg, art);
        break;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    art.report["error"] = e.what();
    if (cfg.out_json) {
      try {
        write_json(art.dir / "report.json", art.report);
      } catch (...) {
      }
    }
    return 1;
  }

  if (cfg.out_json) write_json(art.dir / "report.json", art.report);
  return status;
}

}  // namespace epsball
