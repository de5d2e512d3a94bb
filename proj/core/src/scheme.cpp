#include "epsball/scheme.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "epsball/cone_profiles.hpp"

namespace epsball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_grid(const ScalarField& a, const ScalarField& b) {
  if (a.grid == nullptr || a.grid != b.grid)
    throw std::invalid_argument("fields must live on the same grid");
}

struct BallExtrema {
  double mx;
  double mn;
};

BallExtrema ball_extrema(const ScalarField& u, const NeighborhoodTable& nbr,
                         NodeId node) {
  double mx = -kInf, mn = kInf;
  for (NodeId j : nbr.of(node)) {
    const double v = u[j];
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  return {mx, mn};
}

}  // namespace

SchemeParams make_scheme_params(double beta, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  SchemeParams p;
  p.epsilon = eps;
  p.beta = beta;
  const double s = eps * beta;
  p.a_plus = std::fabs(s) < 1e-8 ? 1.0 / eps : beta / std::expm1(s);
  p.a_minus = p.a_plus + beta;
  p.p_plus = 1.0 / (1.0 + std::exp(s));
  p.p_minus = 1.0 / (1.0 + std::exp(-s));
  p.source_scale = eps / (p.a_plus + p.a_minus);
  return p;
}

std::pair<double, double> coefficients(double beta, double eps) {
  const SchemeParams p = make_scheme_params(beta, eps);
  return {p.a_plus, p.a_minus};
}

ScalarField sample(const Grid& grid, const std::function<double(const Point&)>& fn) {
  ScalarField out(grid);
  for (NodeId i = 0; i < grid.size(); ++i) out[i] = fn(grid.coords[i]);
  return out;
}

double max_value(const ScalarField& u) {
  double m = -kInf;
  for (double v : u.values) m = std::max(m, v);
  return m;
}

double min_value(const ScalarField& u) {
  double m = kInf;
  for (double v : u.values) m = std::min(m, v);
  return m;
}

double sup_norm(const ScalarField& u) {
  double m = 0.0;
  for (double v : u.values) m = std::max(m, std::fabs(v));
  return m;
}

double oscillation(const ScalarField& u) { return max_value(u) - min_value(u); }

double s_plus(const ScalarField& u, const NeighborhoodTable& nbr, NodeId node) {
  return (ball_extrema(u, nbr, node).mx - u[node]) / nbr.eps;
}

double s_minus(const ScalarField& u, const NeighborhoodTable& nbr, NodeId node) {
  return (u[node] - ball_extrema(u, nbr, node).mn) / nbr.eps;
}

ScalarField max_ball(const ScalarField& u, const NeighborhoodTable& nbr) {
  ScalarField out(*u.grid);
  for (NodeId i = 0; i < u.size(); ++i) out[i] = ball_extrema(u, nbr, i).mx;
  return out;
}

ScalarField min_ball(const ScalarField& u, const NeighborhoodTable& nbr) {
  ScalarField out(*u.grid);
  for (NodeId i = 0; i < u.size(); ++i) out[i] = ball_extrema(u, nbr, i).mn;
  return out;
}

double scheme_operator(const ScalarField& u, const SchemeParams& params,
                       const NeighborhoodTable& nbr, NodeId node) {
  const auto [mx, mn] = ball_extrema(u, nbr, node);
  const double eps = params.epsilon;
  return params.a_plus * (u[node] - mn) / eps - params.a_minus * (mx - u[node]) / eps;
}

double residual(const ScalarField& u, const ScalarField& f, const SchemeParams& params,
                const NeighborhoodTable& nbr, NodeId node) {
  require_same_grid(u, f);
  if (u.grid->dirichlet_distance[node] <= params.epsilon)
    throw std::invalid_argument("residual is not defined on collar nodes");
  return scheme_operator(u, params, nbr, node) - f[node];
}

double residual_sup(const ScalarField& u, const ScalarField& f,
                    const SchemeParams& params, const NeighborhoodTable& nbr,
                    std::span<const NodeId> nodes) {
  double worst = 0.0;
  for (NodeId i : nodes) {
    const double r = scheme_operator(u, params, nbr, i) - f[i];
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

ScalarField extend_dirichlet_data(const Grid& grid,
                                  const std::function<double(const Point&)>& g) {
  ScalarField out(grid);
  for (NodeId i = 0; i < grid.size(); ++i) out[i] = g(grid.dirichlet_anchor[i]);
  return out;
}

ScalarField dpp_apply(const ScalarField& u, const ScalarField& f,
                      const ScalarField& g_ext, const SchemeParams& params,
                      const NeighborhoodTable& nbr, std::span<const NodeId> omega,
                      int threads) {
  require_same_grid(u, f);
  require_same_grid(u, g_ext);
  ScalarField out = g_ext;
  const double w_max = params.p_minus;
  const double w_min = params.p_plus;

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const NodeId i = omega[idx];
      const auto [mx, mn] = ball_extrema(u, nbr, i);
      out[i] = w_max * mx + w_min * mn + params.source_scale * f[i];
    }
  };

  if (threads <= 1 || omega.size() < 1024) {
    work(0, omega.size());
  } else {
    const int n_threads = std::min<int>(threads, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    const std::size_t chunk = (omega.size() + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const std::size_t b = t * chunk;
      const std::size_t e = std::min(omega.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

SolveResult solve(const Grid& grid, const SchemeParams& params, const ScalarField& f,
                  const std::function<double(const Point&)>& g,
                  const SolveOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (f.grid != &grid) throw std::invalid_argument("source field lives on another grid");

  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&t_start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
        .count();
  };

  SolveResult res;
  res.report.sweep =
      options.sweep == SweepKind::GaussSeidel ? "gauss_seidel" : "jacobi";

  const ScalarField g_ext = extend_dirichlet_data(grid, g);
  const auto omega = omega_eps_nodes(grid, params.epsilon);
  if (omega.empty()) {
    res.u = g_ext;
    res.report.status = SolveStatus::EmptyOmegaEps;
    res.report.warning = "no node lies deeper than eps from the Dirichlet boundary";
    res.report.monotone = true;
    res.report.wall_seconds = elapsed();
    return res;
  }

  const NeighborhoodTable nbr = neighborhoods(grid, params.epsilon);
  res.report.warning = nbr.warning;

  // Collar maxima stand in for the Dirichlet extrema of g; barrier seeds start
  // above every admissible field (FromAbove) or below (FromBelow).
  double g_max = -kInf, g_min = kInf;
  for (NodeId i = 0; i < grid.size(); ++i) {
    if (grid.dirichlet_distance[i] <= params.epsilon) {
      g_max = std::max(g_max, g_ext[i]);
      g_min = std::min(g_min, g_ext[i]);
    }
  }
  if (!std::isfinite(g_max)) {  // collar can be just the boundary trace
    g_max = max_value(g_ext);
    g_min = min_value(g_ext);
  }
  double f_sup = 0.0;
  for (NodeId i : omega) f_sup = std::max(f_sup, std::fabs(f[i]));

  ScalarField u = g_ext;
  switch (options.seed) {
    case SeedKind::FromAbove: {
      const ConeProfile barrier =
          lipschitz_majorant(params.beta, f_sup, grid.spec.diameter());
      for (NodeId i : omega)
        u[i] = g_max + eval(barrier, std::min(grid.dirichlet_distance[i], barrier.r_max));
      break;
    }
    case SeedKind::FromBelow: {
      const ConeProfile barrier =
          subsolution_minorant(params.beta, f_sup, grid.spec.diameter());
      for (NodeId i : omega)
        u[i] = g_min + eval(barrier, std::min(grid.dirichlet_distance[i], barrier.r_max));
      break;
    }
    case SeedKind::Given: {
      if (options.seed_field == nullptr || options.seed_field->grid != &grid)
        throw std::invalid_argument("Given seed requires a field on the solve grid");
      for (NodeId i : omega) u[i] = (*options.seed_field)[i];
      break;
    }
  }

  const double w_max = params.p_minus;
  const double w_min = params.p_plus;
  const double mono_tol =
      1e-12 * std::max({1.0, sup_norm(u), std::fabs(g_max), std::fabs(g_min)});
  bool moved_up = false;
  bool moved_down = false;

  double res_sup =
      residual_sup(u, f, params, nbr, std::span<const NodeId>(omega));
  if (options.record_history) res.report.residual_history.push_back(res_sup);

  int sweeps = 0;
  ScalarField scratch;
  while (res_sup > options.tol && sweeps < options.max_sweeps) {
    if (options.sweep == SweepKind::GaussSeidel) {
      for (NodeId i : omega) {
        const auto [mx, mn] = ball_extrema(u, nbr, i);
        const double val = w_max * mx + w_min * mn + params.source_scale * f[i];
        if (val > u[i] + mono_tol) moved_up = true;
        if (val < u[i] - mono_tol) moved_down = true;
        u[i] = val;
      }
    } else {
      scratch = dpp_apply(u, f, g_ext, params, nbr, std::span<const NodeId>(omega),
                          options.threads);
      for (NodeId i : omega) {
        if (scratch[i] > u[i] + mono_tol) moved_up = true;
        if (scratch[i] < u[i] - mono_tol) moved_down = true;
        u[i] = scratch[i];
      }
    }
    ++sweeps;
    res_sup = residual_sup(u, f, params, nbr, std::span<const NodeId>(omega));
    if (options.record_history) res.report.residual_history.push_back(res_sup);
  }

  res.u = std::move(u);
  res.report.status =
      res_sup <= options.tol ? SolveStatus::Converged : SolveStatus::NonConverged;
  res.report.iterations = sweeps;
  res.report.final_residual = res_sup;
  res.report.monotone = !(moved_up && moved_down);
  res.report.wall_seconds = elapsed();
  return res;
}

}  // namespace epsball
