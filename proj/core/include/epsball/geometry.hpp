#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace epsball {

/// Coordinates are stored as fixed 3-arrays; components beyond the active
/// dimension are zero and ignored by all distance computations.
using Point = std::array<double, 3>;
using NodeId = std::int32_t;

double dot(const Point& a, const Point& b, int dim);
double distance(const Point& a, const Point& b, int dim);
double squared_distance(const Point& a, const Point& b, int dim);

enum class BoundaryLabel { Dirichlet, Neumann };

/// One face of a polytope: the set {x : normal·x <= offset} bounds the domain.
struct Halfspace {
  Point normal{};
  double offset = 0.0;
  BoundaryLabel label = BoundaryLabel::Dirichlet;
};

/// Nearest-point query result against a boundary part.
struct BoundaryProjection {
  double dist = 0.0;
  Point point{};
};

/// Convex domain with its boundary split into a Dirichlet part (value data)
/// and a Neumann part (seen by the scheme only through ball clipping).
///
/// Box faces are indexed 2*axis + (0 lower / 1 upper). A ball carries a single
/// label for the whole sphere, which must be Dirichlet (the Dirichlet part may
/// never be empty). Polytopes are intersections of half-spaces and are convex
/// by construction; boundedness and a nonempty interior are validated.
struct DomainSpec {
  enum class Shape { Box, Ball, Polytope };

  int dim = 1;
  Shape shape = Shape::Box;

  // Box
  Point lo{};
  Point hi{};
  std::array<BoundaryLabel, 6> face_labels{};

  // Ball
  Point center{};
  double radius = 0.0;
  BoundaryLabel sphere_label = BoundaryLabel::Dirichlet;

  // Polytope
  std::vector<Halfspace> halfspaces;

  /// Collects every violated invariant; an empty list means the spec is usable.
  std::vector<std::string> validate() const;

  bool has_neumann() const;
  bool contains(const Point& x, double tol) const;

  double inradius() const;
  double diameter() const;

  /// Axis-aligned bounding box (exact for box/ball, vertex hull for polytopes).
  void bounding_box(Point& out_lo, Point& out_hi) const;

  /// Distance to and nearest point on the Dirichlet part of the boundary.
  /// Ties are broken toward the lexicographically smallest point.
  BoundaryProjection project_to_dirichlet(const Point& x) const;

  /// Distance to the Neumann part; +inf when there is none.
  double distance_to_neumann(const Point& x) const;

  /// Copy with polytope normals scaled to unit length.
  DomainSpec normalized() const;

  /// Polytope vertices (empty for box/ball).
  std::vector<Point> vertices() const;
};

enum class NodeClass { Interior, NeumannFace };

/// Uniform lattice trace of the closed domain.
///
/// Nodes are exactly the lattice points (anchored at the box lower corner, the
/// ball center, or the polytope bounding-box corner) lying inside the closure,
/// ordered lexicographically by coordinates so identical inputs always produce
/// identical grids.
struct Grid {
  DomainSpec spec;
  double delta = 0.0;
  Point anchor{};

  std::vector<Point> coords;
  std::vector<std::array<std::int32_t, 3>> lattice;
  std::vector<NodeClass> node_class;
  std::vector<double> dirichlet_distance;
  std::vector<Point> dirichlet_anchor;  // nearest Dirichlet boundary point

  int dim() const { return spec.dim; }
  NodeId size() const { return static_cast<NodeId>(coords.size()); }

  /// Node index at integer lattice offset, if such a node exists.
  std::optional<NodeId> node_at(const std::array<std::int32_t, 3>& iv) const;

  /// Content hash used to tie dumped fields back to the grid they live on.
  std::uint64_t hash() const;

 private:
  friend Grid build_grid(const DomainSpec&, double);
  std::unordered_map<std::uint64_t, NodeId> index_;
};

/// Per-node lists of all nodes within closed Euclidean distance eps, stored in
/// CSR form. Membership is decided on squared distances with a 1e-12*eps^2
/// slack so lattice-commensurate radii include their sphere points exactly.
struct NeighborhoodTable {
  double eps = 0.0;
  std::vector<std::int64_t> row_begin;
  std::vector<NodeId> data;
  std::string warning;  // set when eps/delta < 3 (coarse ball quadrature)

  std::span<const NodeId> of(NodeId i) const {
    return {data.data() + row_begin[i],
            static_cast<std::size_t>(row_begin[i + 1] - row_begin[i])};
  }
};

/// Builds the lattice for spacing delta > 0 (must be below the inradius).
/// Throws std::invalid_argument on an invalid spec or an empty lattice.
Grid build_grid(const DomainSpec& spec, double delta);

/// Closed eps-ball neighbor table over the grid's node set. Requires eps >= delta.
NeighborhoodTable neighborhoods(const Grid& grid, double eps);

/// Nodes strictly farther than eps from the Dirichlet boundary, ascending.
/// Ties at distance exactly eps belong to the collar, not the result.
std::vector<NodeId> omega_eps_nodes(const Grid& grid, double eps);

/// CSV dump: node_id,x1,..,xd,class,dist_gammaD
void dump_grid_csv(const Grid& grid, std::ostream& out);

}  // namespace epsball
