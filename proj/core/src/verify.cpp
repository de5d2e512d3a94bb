#include "epsball/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace epsball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ScalarField difference(const ScalarField& u, const ScalarField& v) {
  ScalarField d(*u.grid);
  for (NodeId i = 0; i < u.size(); ++i) d[i] = u[i] - v[i];
  return d;
}

double max_over(const ScalarField& u, std::span<const NodeId> nodes, NodeId* where) {
  double m = -kInf;
  NodeId arg = -1;
  for (NodeId i : nodes) {
    if (u[i] > m) {
      m = u[i];
      arg = i;
    }
  }
  if (where) *where = arg;
  return m;
}

}  // namespace

double empirical_lipschitz(const ScalarField& u, const NeighborhoodTable& nbr,
                           std::span<const NodeId> nodes) {
  const Grid& grid = *u.grid;
  double lip = 0.0;
  for (NodeId i : nodes) {
    for (NodeId j : nbr.of(i)) {
      if (j == i) continue;
      const double d = distance(grid.coords[i], grid.coords[j], grid.dim());
      if (d > 0.0) lip = std::max(lip, std::fabs(u[i] - u[j]) / d);
    }
  }
  return lip;
}

VerifyReport check_perturbation(const ScalarField& u, const ScalarField& f,
                                const SchemeParams& params) {
  const Grid& grid = *u.grid;
  const double eps = params.epsilon;
  const auto omega2 = omega_eps_nodes(grid, 2.0 * eps);
  if (omega2.empty())
    throw std::invalid_argument("no node lies deeper than 2*eps from the boundary");

  const NeighborhoodTable nbr = neighborhoods(grid, eps);
  const NeighborhoodTable nbr2 = neighborhoods(grid, 2.0 * eps);
  const auto omega = omega_eps_nodes(grid, eps);

  const ScalarField w = max_ball(u, nbr);
  const ScalarField f2 = max_ball(f, nbr2);

  VerifyReport r;
  r.check = "perturbation";
  const double lip = empirical_lipschitz(u, nbr, std::span<const NodeId>(omega));
  r.tolerance = 10.0 * lip * grid.delta / eps;

  double worst = -kInf;
  for (NodeId i : omega2) {
    const double viol = scheme_operator(w, params, nbr, i) - f2[i];
    if (viol > worst) {
      worst = viol;
      r.worst_node = i;
    }
  }
  r.worst_violation = worst;
  r.pass = worst <= r.tolerance;
  r.aux["lipschitz"] = lip;
  r.aux["eps"] = eps;
  r.aux["delta"] = grid.delta;
  r.aux["checked_nodes"] = omega2.size();
  return r;
}

VerifyReport check_fd_comparison(const ScalarField& u, const ScalarField& v,
                                 const ScalarField& f, const ScalarField& ft,
                                 const SchemeParams& params, FdCase hypothesis) {
  const Grid& grid = *u.grid;
  const NeighborhoodTable nbr = neighborhoods(grid, params.epsilon);
  const auto omega = omega_eps_nodes(grid, params.epsilon);

  VerifyReport r;
  r.check = "fd_comparison";

  // The hypothesis chain Lu <= f <= ft <= Lv is verified with the same
  // operator code the solver uses. The allowance matches the conclusion's so
  // fields solved to a comparable residual qualify as inputs.
  const double scale =
      1.0 + std::max({sup_norm(u), sup_norm(v), sup_norm(f), sup_norm(ft)});
  const double pre_tol = 1e-9 * scale;
  double pre_worst = -kInf;
  bool case_ok = true;
  for (NodeId i : omega) {
    const double lu = scheme_operator(u, params, nbr, i);
    const double lv = scheme_operator(v, params, nbr, i);
    pre_worst = std::max({pre_worst, lu - f[i], f[i] - ft[i], ft[i] - lv});
    switch (hypothesis) {
      case FdCase::Strict:
        case_ok = case_ok && f[i] < ft[i];
        break;
      case FdCase::FNonpos:
        case_ok = case_ok && f[i] <= pre_tol;
        break;
      case FdCase::FtNonneg:
        case_ok = case_ok && ft[i] >= -pre_tol;
        break;
    }
  }
  r.precondition_ok = pre_worst <= pre_tol && case_ok;
  r.aux["precondition_worst"] = pre_worst;
  r.aux["precondition_tol"] = pre_tol;
  r.aux["case_hypothesis_ok"] = case_ok;

  const ScalarField d = difference(u, v);
  std::vector<NodeId> all(static_cast<std::size_t>(grid.size()));
  for (NodeId i = 0; i < grid.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<NodeId> collar;
  for (NodeId i = 0; i < grid.size(); ++i)
    if (grid.dirichlet_distance[i] <= params.epsilon) collar.push_back(i);

  NodeId arg = -1;
  const double gmax = max_over(d, all, &arg);
  const double cmax = collar.empty() ? -kInf : max_over(d, collar, nullptr);
  r.worst_node = arg;
  r.tolerance = 1e-9 * (1.0 + sup_norm(d));
  r.worst_violation = gmax - cmax;
  r.pass = r.precondition_ok && r.worst_violation <= r.tolerance;
  r.aux["global_max"] = gmax;
  r.aux["collar_max"] = cmax;
  return r;
}

VerifyReport check_comparison_continuum(const ScalarField& u, const ScalarField& v,
                                        double eps) {
  const Grid& grid = *u.grid;
  const ScalarField d = difference(u, v);

  std::vector<NodeId> all(static_cast<std::size_t>(grid.size()));
  for (NodeId i = 0; i < grid.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<NodeId> face;
  const double layer = grid.delta * (1.0 + 1e-9);
  for (NodeId i = 0; i < grid.size(); ++i)
    if (grid.dirichlet_distance[i] <= layer) face.push_back(i);

  VerifyReport r;
  r.check = "comparison_continuum";
  if (face.empty()) {
    r.detail = "no nodes within delta of the Dirichlet boundary";
    r.pass = false;
    return r;
  }

  NodeId arg = -1;
  const double gmax = max_over(d, all, &arg);
  const double fmax = max_over(d, face, nullptr);
  const NeighborhoodTable nbr = neighborhoods(grid, std::max(eps, grid.delta));
  const double lip = empirical_lipschitz(d, nbr, std::span<const NodeId>(all));
  const double osc = oscillation(d);

  r.worst_node = arg;
  r.worst_violation = gmax - fmax;  // the excess
  r.tolerance = 1e-6 * (1.0 + osc) + lip * eps;
  r.pass = r.worst_violation <= r.tolerance;
  r.aux["excess"] = r.worst_violation;
  r.aux["global_max"] = gmax;
  r.aux["face_max"] = fmax;
  r.aux["osc"] = osc;
  r.aux["lipschitz"] = lip;
  r.aux["eps"] = eps;
  return r;
}

VerifyReport check_cone_comparison(const ScalarField& u, const ConeProfile& profile,
                                   const Point& x0, double r) {
  const Grid& grid = *u.grid;
  if (profile.branch != +1)
    throw std::invalid_argument("cone comparison needs an increasing profile");
  if (r > profile.r_max * (1.0 + 1e-12))
    throw std::invalid_argument("r exceeds the profile validity interval");

  const double tol_r = 1e-12 * std::max(1.0, r);
  std::vector<NodeId> trace;
  for (NodeId i = 0; i < grid.size(); ++i) {
    if (distance(grid.coords[i], x0, grid.dim()) <= r + tol_r) trace.push_back(i);
  }
  if (trace.empty()) throw std::invalid_argument("ball trace is empty");

  // u - phi on the trace, phi the radial profile about x0.
  ScalarField diff(*u.grid);
  for (NodeId i : trace) {
    const double t = std::min(distance(grid.coords[i], x0, grid.dim()), profile.r_max);
    diff[i] = u[i] - eval(profile, t);
  }

  const double layer = grid.delta * (1.0 + 1e-9);
  std::vector<NodeId> contact;
  for (NodeId i : trace) {
    const double rho = distance(grid.coords[i], x0, grid.dim());
    const bool on_sphere = std::fabs(rho - r) <= layer;
    const bool on_dirichlet = grid.dirichlet_distance[i] <= layer;
    if (on_sphere || on_dirichlet) contact.push_back(i);
  }
  const bool include_center = profile.gamma0p > 1e-12 * std::max(1.0, std::fabs(profile.k));
  if (include_center) {
    NodeId best = -1;
    double best_d = kInf;
    for (NodeId i : trace) {
      const double rho = distance(grid.coords[i], x0, grid.dim());
      if (rho < best_d) {
        best_d = rho;
        best = i;
      }
    }
    if (best >= 0) contact.push_back(best);
  }

  VerifyReport rep;
  rep.check = "cone_comparison";
  if (contact.empty()) {
    rep.detail = "contact trace is empty";
    rep.pass = false;
    return rep;
  }

  NodeId arg = -1;
  const double trace_max = max_over(diff, trace, &arg);
  const double contact_max = max_over(diff, contact, nullptr);

  // Lattice slack: the trace samples the sphere and the boundary to within one
  // spacing, so allow one-delta worth of slope on top of roundoff.
  const NeighborhoodTable nbr = neighborhoods(grid, std::max(2.0 * grid.delta, grid.delta));
  const double lip = empirical_lipschitz(diff, nbr, trace);
  rep.tolerance = 1e-9 + 10.0 * lip * grid.delta;
  rep.worst_node = arg;
  rep.worst_violation = trace_max - contact_max;
  rep.pass = rep.worst_violation <= rep.tolerance;
  rep.aux["trace_max"] = trace_max;
  rep.aux["contact_max"] = contact_max;
  rep.aux["trace_nodes"] = trace.size();
  rep.aux["contact_nodes"] = contact.size();
  rep.aux["center_included"] = include_center;
  return rep;
}

VerifyReport check_apriori(const ScalarField& u, double g_max, double beta, double k,
                           double eps, double margin) {
  const Grid& grid = *u.grid;
  const double diam = grid.spec.diameter();
  const ConeProfile maj = lipschitz_majorant(beta, k, diam);
  const double c1 = eval(maj, diam);

  VerifyReport r;
  r.check = "apriori";
  r.tolerance = 1e-6;
  NodeId arg = -1;
  double mx = -kInf;
  for (NodeId i = 0; i < grid.size(); ++i) {
    if (u[i] > mx) {
      mx = u[i];
      arg = i;
    }
  }
  r.worst_node = arg;
  r.worst_violation = mx - (g_max + c1);
  r.pass = r.worst_violation <= r.tolerance;

  const AprioriConstants consts =
      apriori_constants(beta, k, diam, margin, oscillation(u));
  const auto margin_nodes = omega_eps_nodes(grid, margin);
  double emp_lip = 0.0;
  if (!margin_nodes.empty()) {
    const NeighborhoodTable nbr = neighborhoods(grid, std::max(2.0 * eps, grid.delta));
    emp_lip = empirical_lipschitz(u, nbr, std::span<const NodeId>(margin_nodes));
  }
  r.aux["c1_bound"] = c1;
  r.aux["c2_bound"] = consts.c2_bound;
  r.aux["max_u"] = mx;
  r.aux["g_max"] = g_max;
  r.aux["empirical_interior_lipschitz"] = emp_lip;
  r.aux["margin"] = margin;
  r.detail = emp_lip <= consts.c2_bound || consts.c2_bound == 0.0
                 ? "interior slope within bound"
                 : "interior slope exceeds bound";
  return r;
}

ConvergenceTable convergence_study(const Problem& problem,
                                   const std::function<double(const Point&)>& exact,
                                   std::span<const double> eps_list,
                                   std::span<const double> delta_list,
                                   const SolveOptions& options) {
  if (eps_list.size() != delta_list.size())
    throw std::invalid_argument("eps and delta lists must pair up");
  ConvergenceTable table;
  double prev = 0.0;
  for (std::size_t row = 0; row < eps_list.size(); ++row) {
    const double eps = eps_list[row];
    const double delta = delta_list[row];
    if (!(delta <= eps / 3.0 + 1e-15))
      throw std::invalid_argument("convergence study requires delta <= eps/3");

    const Grid grid = build_grid(problem.domain, delta);
    const ScalarField f = sample(grid, problem.f);
    const SchemeParams params = make_scheme_params(problem.beta, eps);
    const SolveResult sol = solve(grid, params, f, problem.g, options);

    ConvergenceRow r;
    r.eps = eps;
    r.delta = delta;
    r.converged = sol.report.status == SolveStatus::Converged;
    const ScalarField ue = sample(grid, exact);
    double err_all = 0.0, err_omega = 0.0;
    for (NodeId i = 0; i < grid.size(); ++i)
      err_all = std::max(err_all, std::fabs(sol.u[i] - ue[i]));
    for (NodeId i : omega_eps_nodes(grid, eps))
      err_omega = std::max(err_omega, std::fabs(sol.u[i] - ue[i]));
    r.err_domain = err_all;
    r.err_omega_eps = err_omega;
    r.ratio = row == 0 ? 0.0 : (prev > 0.0 ? err_omega / prev : 0.0);
    prev = err_omega;
    table.rows.push_back(r);
  }
  return table;
}

namespace {

VerifyReport stability_from_runs(const std::vector<double>& params_axis,
                                 const std::vector<ScalarField>& runs,
                                 const ScalarField& limit,
                                 std::span<const NodeId> margin_nodes,
                                 const std::string& name, bool ordered_check,
                                 bool descending_sources) {
  VerifyReport r;
  r.check = name;
  const double osc = oscillation(limit);
  std::vector<double> dist;
  dist.reserve(runs.size());
  for (const auto& u : runs) {
    double d = 0.0;
    for (NodeId i : margin_nodes) d = std::max(d, std::fabs(u[i] - limit[i]));
    dist.push_back(d);
  }

  bool nonincreasing = true;
  const double slack = 1e-12 * (1.0 + osc);
  for (std::size_t j = 1; j < dist.size(); ++j)
    nonincreasing = nonincreasing && dist[j] <= dist[j - 1] + slack;

  bool ordered = true;
  if (ordered_check) {
    for (std::size_t j = 1; j < runs.size(); ++j) {
      for (NodeId i : margin_nodes) {
        const double a = runs[j][i];
        const double b = runs[j - 1][i];
        if (descending_sources ? a > b + slack : a < b - slack) {
          ordered = false;
          break;
        }
      }
      if (!ordered) break;
    }
  }

  const double last = dist.empty() ? 0.0 : dist.back();
  r.tolerance = 1e-2 * osc;
  r.worst_violation = last - r.tolerance;
  r.pass = nonincreasing && last <= r.tolerance && (!ordered_check || ordered);
  auto tbl = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < dist.size(); ++j)
    tbl.push_back({{"param", params_axis[j]}, {"distance", dist[j]}});
  r.aux["runs"] = tbl;
  r.aux["osc_limit"] = osc;
  r.aux["nonincreasing"] = nonincreasing;
  if (ordered_check) r.aux["ordered"] = ordered;
  return r;
}

}  // namespace

VerifyReport stability_study(const Problem& problem, double beta_limit,
                             std::span<const double> betas, double eps, double delta,
                             double margin, const SolveOptions& options) {
  const Grid grid = build_grid(problem.domain, delta);
  const ScalarField f = sample(grid, problem.f);
  const auto margin_nodes = omega_eps_nodes(grid, margin);
  if (margin_nodes.empty())
    throw std::invalid_argument("stability margin leaves no nodes");

  const SolveResult limit =
      solve(grid, make_scheme_params(beta_limit, eps), f, problem.g, options);

  std::vector<double> axis(betas.begin(), betas.end());
  std::vector<ScalarField> runs;
  runs.reserve(betas.size());
  for (double b : betas) {
    SolveResult s = solve(grid, make_scheme_params(b, eps), f, problem.g, options);
    if (s.report.status != SolveStatus::Converged)
      throw std::runtime_error("stability member solve did not converge");
    runs.push_back(std::move(s.u));
  }
  VerifyReport r = stability_from_runs(axis, runs, limit.u, margin_nodes,
                                       "stability_beta", false, false);
  r.aux["beta_limit"] = beta_limit;
  r.aux["eps"] = eps;
  r.aux["delta"] = delta;
  return r;
}

VerifyReport stability_study_sources(const Problem& problem,
                                     std::span<const double> shifts, double eps,
                                     double delta, double margin,
                                     const SolveOptions& options) {
  const Grid grid = build_grid(problem.domain, delta);
  const auto margin_nodes = omega_eps_nodes(grid, margin);
  if (margin_nodes.empty())
    throw std::invalid_argument("stability margin leaves no nodes");

  const ScalarField f0 = sample(grid, problem.f);
  const SolveResult limit =
      solve(grid, make_scheme_params(problem.beta, eps), f0, problem.g, options);

  bool descending = true;
  for (std::size_t j = 1; j < shifts.size(); ++j)
    descending = descending && shifts[j] <= shifts[j - 1];

  std::vector<double> axis(shifts.begin(), shifts.end());
  std::vector<ScalarField> runs;
  for (double c : shifts) {
    ScalarField fc = f0;
    for (auto& v : fc.values) v += c;
    SolveResult s =
        solve(grid, make_scheme_params(problem.beta, eps), fc, problem.g, options);
    if (s.report.status != SolveStatus::Converged)
      throw std::runtime_error("stability member solve did not converge");
    runs.push_back(std::move(s.u));
  }
  VerifyReport r = stability_from_runs(axis, runs, limit.u, margin_nodes,
                                       "stability_source", true, descending);
  r.aux["eps"] = eps;
  r.aux["delta"] = delta;
  return r;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["worst_violation"] = r.worst_violation;
  j["worst_node"] = r.worst_node;
  j["tolerance"] = r.tolerance;
  j["precondition_ok"] = r.precondition_ok;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.aux.empty()) j["aux"] = r.aux;
  return j;
}

nlohmann::ordered_json to_json(const ConvergenceTable& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"eps", r.eps},
                    {"delta", r.delta},
                    {"sup_error_domain", r.err_domain},
                    {"sup_error_omega_eps", r.err_omega_eps},
                    {"ratio", r.ratio},
                    {"converged", r.converged}});
  }
  return nlohmann::ordered_json{{"rows", rows}};
}

nlohmann::ordered_json to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  switch (r.status) {
    case SolveStatus::Converged:
      j["status"] = "converged";
      break;
    case SolveStatus::NonConverged:
      j["status"] = "non_converged";
      break;
    case SolveStatus::EmptyOmegaEps:
      j["status"] = "empty_omega_eps";
      break;
  }
  j["iterations"] = r.iterations;
  j["final_residual"] = r.final_residual;
  j["sweep"] = r.sweep;
  j["monotone"] = r.monotone;
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["residual_history_len"] = r.residual_history.size();
  j["wall_seconds"] = r.wall_seconds;  // the one run-dependent field
  return j;
}

nlohmann::ordered_json to_json(const ConeProfile& p) {
  return nlohmann::ordered_json{{"beta", p.beta}, {"k", p.k},     {"c1", p.c1},
                                {"c2", p.c2},     {"branch", p.branch},
                                {"r_max", p.r_max}};
}

}  // namespace epsball
