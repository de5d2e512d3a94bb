#pragma once

#include <functional>
#include <string>
#include <vector>

#include "epsball/geometry.hpp"
#include "epsball/scheme_params.hpp"

namespace epsball {

/// One real value per grid node. Public operations keep every entry finite.
struct ScalarField {
  const Grid* grid = nullptr;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(&g), values(static_cast<std::size_t>(g.size()), fill) {}

  double& operator[](NodeId i) { return values[static_cast<std::size_t>(i)]; }
  double operator[](NodeId i) const { return values[static_cast<std::size_t>(i)]; }
  NodeId size() const { return static_cast<NodeId>(values.size()); }
};

/// Samples a coordinate function at every node.
ScalarField sample(const Grid& grid, const std::function<double(const Point&)>& fn);

double max_value(const ScalarField& u);
double min_value(const ScalarField& u);
double sup_norm(const ScalarField& u);
double oscillation(const ScalarField& u);

/// Normalized ball increments at one node:
/// s_plus = (max over the ball - u)/eps >= 0, s_minus = (u - min over the ball)/eps.
double s_plus(const ScalarField& u, const NeighborhoodTable& nbr, NodeId node);
double s_minus(const ScalarField& u, const NeighborhoodTable& nbr, NodeId node);

/// Pointwise max/min of u over each node's ball neighborhood.
ScalarField max_ball(const ScalarField& u, const NeighborhoodTable& nbr);
ScalarField min_ball(const ScalarField& u, const NeighborhoodTable& nbr);

/// Scheme operator a_plus*S-u - a_minus*S+u at one node (no source term).
double scheme_operator(const ScalarField& u, const SchemeParams& params,
                       const NeighborhoodTable& nbr, NodeId node);

/// scheme_operator minus the source: <= 0 marks a discrete subsolution at the
/// node, >= 0 a supersolution. Throws when the node lies in the collar
/// (distance to the Dirichlet boundary <= eps), where the equation is not posed.
double residual(const ScalarField& u, const ScalarField& f, const SchemeParams& params,
                const NeighborhoodTable& nbr, NodeId node);

/// Sup of |residual| over the given node set.
double residual_sup(const ScalarField& u, const ScalarField& f,
                    const SchemeParams& params, const NeighborhoodTable& nbr,
                    std::span<const NodeId> nodes);

/// Dirichlet data carried to every node from its nearest boundary point.
ScalarField extend_dirichlet_data(const Grid& grid,
                                  const std::function<double(const Point&)>& g);

/// One fixed-point update: collar nodes copy g_ext, nodes of the given set get
/// p_minus * (ball max) + p_plus * (ball min) + source_scale * f. A fixed point
/// has zero residual on the set. Jacobi-style (reads u, writes a fresh field);
/// deterministic for any thread count.
ScalarField dpp_apply(const ScalarField& u, const ScalarField& f,
                      const ScalarField& g_ext, const SchemeParams& params,
                      const NeighborhoodTable& nbr, std::span<const NodeId> omega,
                      int threads = 1);

enum class SeedKind { FromAbove, FromBelow, Given };
enum class SweepKind { GaussSeidel, Jacobi };
enum class SolveStatus { Converged, NonConverged, EmptyOmegaEps };

struct SolveOptions {
  SeedKind seed = SeedKind::FromAbove;
  const ScalarField* seed_field = nullptr;  // required for SeedKind::Given
  double tol = 1e-8;
  int max_sweeps = 100000;
  SweepKind sweep = SweepKind::GaussSeidel;
  int threads = 1;
  bool record_history = true;
};

struct SolveReport {
  SolveStatus status = SolveStatus::NonConverged;
  int iterations = 0;
  double final_residual = 0.0;  // true sup over the equation nodes at exit
  std::string sweep;
  bool monotone = false;  // iterates moved one direction throughout
  double wall_seconds = 0.0;
  std::string warning;
  std::vector<double> residual_history;
};

struct SolveResult {
  ScalarField u;
  SolveReport report;
};

/// Sweeps the fixed-point update over the equation nodes in lexicographic
/// order until the residual sup-norm drops to tol. Collar values are the
/// nearest-point extension of g and never move. FromAbove seeds with
/// max(g) plus the increasing barrier of level ||f||_inf evaluated at the
/// Dirichlet distance; FromBelow mirrors it with the decreasing barrier.
SolveResult solve(const Grid& grid, const SchemeParams& params, const ScalarField& f,
                  const std::function<double(const Point&)>& g,
                  const SolveOptions& options = {});

}  // namespace epsball
