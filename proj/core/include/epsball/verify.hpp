#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "epsball/cone_profiles.hpp"
#include "epsball/geometry.hpp"
#include "epsball/scheme.hpp"

namespace epsball {

/// Outcome of one executable check. `worst_violation` is signed: positive
/// values measure how far the asserted inequality failed, non-positive values
/// mean it held with that much slack. Reruns on identical inputs reproduce the
/// report bit for bit.
struct VerifyReport {
  std::string check;
  double worst_violation = 0.0;
  NodeId worst_node = -1;
  double tolerance = 0.0;
  bool pass = false;
  bool precondition_ok = true;
  std::string detail;
  nlohmann::ordered_json aux = nlohmann::ordered_json::object();
};

/// Empirical lattice slope: max |u_i - u_j| / |x_i - x_j| over neighbor pairs
/// drawn from `nodes`. Tolerance budgets use this instead of any a-priori
/// constant.
double empirical_lipschitz(const ScalarField& u, const NeighborhoodTable& nbr,
                           std::span<const NodeId> nodes);

/// Ball-max perturbation check: with w = max_ball(u) and f2 = max_ball(f) at
/// radius 2 eps, the scheme operator of w must not exceed f2 anywhere deeper
/// than 2 eps from the Dirichlet boundary. Budget: 10 * Lip(u) * delta / eps.
/// The caller vouches that u solves (or under-solves) its equation for f.
VerifyReport check_perturbation(const ScalarField& u, const ScalarField& f,
                                const SchemeParams& params);

enum class FdCase { Strict, FNonpos, FtNonneg };

/// Discrete comparison: when the scheme operators of u and v sandwich f <= ft
/// on the equation nodes (verified first, reported separately), max(u - v)
/// over all nodes must be attained on the collar, up to 1e-9 * (1 + ||u-v||).
VerifyReport check_fd_comparison(const ScalarField& u, const ScalarField& v,
                                 const ScalarField& f, const ScalarField& ft,
                                 const SchemeParams& params, FdCase hypothesis);

/// Boundary-attainment check for solved fields: compares the global max of
/// u - v against its max over nodes within delta of the Dirichlet boundary.
/// Tolerance: 1e-6 * (1 + osc) plus the collar allowance Lip(u-v) * eps.
/// Run it along a shrinking eps sequence; the excess must shrink with it.
VerifyReport check_comparison_continuum(const ScalarField& u, const ScalarField& v,
                                        double eps);

/// Radial-barrier contact check: with phi(x) = gamma(|x - x0|), the max of
/// u - phi over the lattice trace of the closed r-ball must be attained on the
/// contact set: sphere trace + Dirichlet trace inside the ball + the center
/// node (the center drops out when gamma'(0) = 0).
VerifyReport check_cone_comparison(const ScalarField& u, const ConeProfile& profile,
                                   const Point& x0, double r);

/// Sup-norm bound max(u) <= g_max + c1_bound + 1e-6 for ||f||_inf <= k, with
/// c1_bound from the increasing barrier at the domain diameter. Also reports
/// the empirical interior slope on the margin set against c2_bound.
VerifyReport check_apriori(const ScalarField& u, double g_max, double beta, double k,
                           double eps, double margin);

/// A boundary-value problem: domain, bias, source and Dirichlet data.
struct Problem {
  DomainSpec domain;
  double beta = 0.0;
  std::function<double(const Point&)> f;
  std::function<double(const Point&)> g;
};

struct ConvergenceRow {
  double eps = 0.0;
  double delta = 0.0;
  double err_domain = 0.0;     // sup error over all nodes
  double err_omega_eps = 0.0;  // sup error over the equation nodes
  double ratio = 0.0;          // err_omega_eps relative to the previous row
  bool converged = false;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
};

/// Solves the problem for each (eps, delta) pair (delta <= eps/3 required) and
/// tabulates sup errors against the supplied exact solution. Non-convergence
/// of a cell is recorded in the row, not fatal.
ConvergenceTable convergence_study(const Problem& problem,
                                   const std::function<double(const Point&)>& exact,
                                   std::span<const double> eps_list,
                                   std::span<const double> delta_list,
                                   const SolveOptions& options = {});

/// Solves the problem at each bias in `betas` on one fixed grid and measures
/// sup distances to the solution at `beta_limit` over the margin set
/// (Dirichlet distance > margin). Passes when the distances are nonincreasing
/// past the first term and the last is at most 1e-2 * osc of the limit.
VerifyReport stability_study(const Problem& problem, double beta_limit,
                             std::span<const double> betas, double eps, double delta,
                             double margin, const SolveOptions& options = {});

/// Same sweep over additive source shifts f + c_j at fixed bias; also checks
/// that the solutions stay ordered the way the shifted sources are.
VerifyReport stability_study_sources(const Problem& problem,
                                     std::span<const double> shifts, double eps,
                                     double delta, double margin,
                                     const SolveOptions& options = {});

nlohmann::ordered_json to_json(const VerifyReport& r);
nlohmann::ordered_json to_json(const ConvergenceTable& t);
nlohmann::ordered_json to_json(const SolveReport& r);
nlohmann::ordered_json to_json(const ConeProfile& p);

}  // namespace epsball
