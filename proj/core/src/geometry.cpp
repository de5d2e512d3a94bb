#include "epsball/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace epsball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kKeyOffset = 1 << 20;

std::uint64_t lattice_key(const std::array<std::int32_t, 3>& iv) {
  const auto a = static_cast<std::uint64_t>(iv[0] + kKeyOffset);
  const auto b = static_cast<std::uint64_t>(iv[1] + kKeyOffset);
  const auto c = static_cast<std::uint64_t>(iv[2] + kKeyOffset);
  return (a << 42) | (b << 21) | c;
}

bool lex_less(const Point& a, const Point& b) {
  for (int c = 0; c < 3; ++c) {
    if (a[c] < b[c]) return true;
    if (a[c] > b[c]) return false;
  }
  return false;
}

/// Solves the n x n system A y = rhs (partial pivoting, n <= 4).
/// Returns false when a pivot collapses (rank-deficient subset).
bool solve_dense(int n, double a[4][4], double rhs[4], double* y) {
  int perm[4] = {0, 1, 2, 3};
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[perm[r]][col]) > std::fabs(a[perm[piv]][col])) piv = r;
    }
    std::swap(perm[col], perm[piv]);
    const double p = a[perm[col]][col];
    if (std::fabs(p) < 1e-13) return false;
    for (int r = col + 1; r < n; ++r) {
      const double m = a[perm[r]][col] / p;
      for (int c = col; c < n; ++c) a[perm[r]][c] -= m * a[perm[col]][c];
      rhs[perm[r]] -= m * rhs[perm[col]];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    double s = rhs[perm[col]];
    for (int c = col + 1; c < n; ++c) s -= a[perm[col]][c] * y[c];
    y[col] = s / a[perm[col]][col];
  }
  return true;
}

// Small-dimension linear algebra for polytope queries. Everything below runs
// in at most 4 variables (domain dimension plus one slack), so exhaustive
// active-set enumeration is exact and fast enough.
using Vec4 = std::array<double, 4>;

struct Row {
  Vec4 normal{};
  double offset = 0.0;
};

double dot_n(const Vec4& a, const Vec4& b, int n) {
  double s = 0.0;
  for (int c = 0; c < n; ++c) s += a[c] * b[c];
  return s;
}

/// Vertices of {y in R^n : row.normal . y <= row.offset} by intersecting every
/// n-subset of constraint hyperplanes and keeping feasible solutions.
std::vector<Vec4> enumerate_vertices_n(std::span<const Row> rows, int n, double feas_tol) {
  std::vector<Vec4> verts;
  const int m = static_cast<int>(rows.size());
  if (m < n) return verts;
  std::array<int, 4> pick{};

  auto emit = [&]() {
    double a[4][4] = {};
    double rhs[4] = {};
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a[r][c] = rows[pick[r]].normal[c];
      rhs[r] = rows[pick[r]].offset;
    }
    double y[4] = {};
    if (!solve_dense(n, a, rhs, y)) return;
    Vec4 p{};
    for (int c = 0; c < n; ++c) p[c] = y[c];
    for (const auto& row : rows) {
      if (dot_n(row.normal, p, n) > row.offset + feas_tol) return;
    }
    for (const auto& q : verts) {
      double d2 = 0.0;
      for (int c = 0; c < n; ++c) d2 += (p[c] - q[c]) * (p[c] - q[c]);
      if (std::sqrt(d2) < 1e-9 * (1.0 + std::sqrt(dot_n(p, p, n)))) return;
    }
    verts.push_back(p);
  };

  // Iterative subset enumeration (n <= 4).
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      emit();
      return;
    }
    for (int i = start; i <= m - (n - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return verts;
}

std::vector<Row> polytope_rows(const DomainSpec& s) {
  std::vector<Row> rows;
  rows.reserve(s.halfspaces.size());
  for (const auto& h : s.halfspaces) {
    Row r;
    for (int a = 0; a < s.dim; ++a) r.normal[a] = h.normal[a];
    r.offset = h.offset;
    rows.push_back(r);
  }
  return rows;
}

/// True when {z : n_i . z <= 0} contains a nonzero direction, i.e. the
/// half-space intersection recedes to infinity along it.
bool has_recession_direction(const std::vector<Row>& facet_rows, int dim) {
  std::vector<Row> rows = facet_rows;
  for (auto& r : rows) r.offset = 0.0;
  for (int a = 0; a < dim; ++a) {
    Row up{}, dn{};
    up.normal[a] = 1.0;
    up.offset = 1.0;
    dn.normal[a] = -1.0;
    dn.offset = 1.0;
    rows.push_back(up);
    rows.push_back(dn);
  }
  for (const auto& v : enumerate_vertices_n(rows, dim, 1e-9)) {
    double mx = 0.0;
    for (int a = 0; a < dim; ++a) mx = std::max(mx, std::fabs(v[a]));
    if (mx > 0.5) return true;
  }
  return false;
}

/// Chebyshev radius of a bounded half-space intersection with unit normals:
/// max r subject to n_i . x + r <= b_i, solved as a vertex enumeration over
/// the lifted (x, r) polytope.
double chebyshev_radius(const std::vector<Row>& facet_rows, int dim, double r_cap) {
  std::vector<Row> rows;
  rows.reserve(facet_rows.size() + 2);
  for (const auto& f : facet_rows) {
    Row r = f;
    r.normal[dim] = 1.0;
    rows.push_back(r);
  }
  Row rlo{}, rhi{};
  rlo.normal[dim] = -1.0;
  rlo.offset = 0.0;
  rhi.normal[dim] = 1.0;
  rhi.offset = r_cap;
  rows.push_back(rlo);
  rows.push_back(rhi);

  double best = 0.0;
  for (const auto& v : enumerate_vertices_n(rows, dim + 1, 1e-9))
    best = std::max(best, v[dim]);
  return best;
}

/// Projection of x onto the affine subspace {y : n_j . y = b_j, j in subset},
/// via y = x + N^T lam with (N N^T) lam = b - N x.
bool project_affine(const Point& x, const std::vector<Row>& rows,
                    std::span<const int> subset, int dim, Point& out) {
  const int k = static_cast<int>(subset.size());
  double g[4][4] = {};
  double rhs[4] = {};
  for (int r = 0; r < k; ++r) {
    const auto& nr = rows[subset[r]].normal;
    for (int c = 0; c < k; ++c) g[r][c] = dot_n(nr, rows[subset[c]].normal, dim);
    double nx = 0.0;
    for (int a = 0; a < dim; ++a) nx += nr[a] * x[a];
    rhs[r] = rows[subset[r]].offset - nx;
  }
  double lam[4] = {};
  if (!solve_dense(k, g, rhs, lam)) return false;
  out = x;
  for (int r = 0; r < k; ++r) {
    for (int a = 0; a < dim; ++a) out[a] += lam[r] * rows[subset[r]].normal[a];
  }
  return true;
}

/// Nearest point of the union of labeled facets of a convex polytope.
///
/// The nearest point lies in the relative interior of some face contained in
/// a facet carrying the requested label. Every such face is cut out by an
/// active set of at most `dim` facet hyperplanes, so enumerating the subsets
/// that include a labeled facet, projecting onto their affine hull and keeping
/// in-polytope candidates is exact.
BoundaryProjection project_to_facets(const Point& x, const DomainSpec& s,
                                     BoundaryLabel wanted) {
  const int dim = s.dim;
  const auto rows = polytope_rows(s);
  const int m = static_cast<int>(rows.size());
  double xn = 0.0;
  for (int a = 0; a < dim; ++a) xn += x[a] * x[a];
  const double feas_tol = 1e-9 * (1.0 + std::sqrt(xn));

  BoundaryProjection best;
  best.dist = kInf;
  std::array<int, 3> pick{};
  std::function<void(int, int, bool)> rec = [&](int start, int depth, bool labeled) {
    if (depth > 0 && labeled) {
      Point y{};
      if (project_affine(x, rows, std::span<const int>(pick.data(), depth), dim, y)) {
        bool feasible = true;
        for (const auto& r : rows) {
          double ny = 0.0;
          for (int a = 0; a < dim; ++a) ny += r.normal[a] * y[a];
          if (ny > r.offset + feas_tol) {
            feasible = false;
            break;
          }
        }
        if (feasible) {
          const double d = distance(x, y, dim);
          if (d < best.dist - 1e-12 ||
              (d < best.dist + 1e-12 && lex_less(y, best.point))) {
            best.dist = d;
            best.point = y;
          }
        }
      }
    }
    if (depth == dim) return;
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1, labeled || s.halfspaces[i].label == wanted);
    }
  };
  rec(0, 0, false);
  return best;
}

}  // namespace

double dot(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int c = 0; c < dim; ++c) s += a[c] * b[c];
  return s;
}

double squared_distance(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int c = 0; c < dim; ++c) {
    const double d = a[c] - b[c];
    s += d * d;
  }
  return s;
}

double distance(const Point& a, const Point& b, int dim) {
  return std::sqrt(squared_distance(a, b, dim));
}

std::vector<std::string> DomainSpec::validate() const {
  std::vector<std::string> errors;
  if (dim < 1 || dim > 3) errors.push_back("dimension must be 1, 2 or 3");
  const int d = std::clamp(dim, 1, 3);

  switch (shape) {
    case Shape::Box: {
      for (int a = 0; a < d; ++a) {
        if (!(lo[a] < hi[a])) {
          errors.push_back("box bounds must satisfy lower < upper componentwise");
          break;
        }
      }
      bool any_d = false;
      for (int f = 0; f < 2 * d; ++f)
        any_d = any_d || face_labels[f] == BoundaryLabel::Dirichlet;
      if (!any_d) errors.push_back("Dirichlet part must be nonempty");
      break;
    }
    case Shape::Ball: {
      if (!(radius > 0.0)) errors.push_back("ball radius must be positive");
      if (sphere_label != BoundaryLabel::Dirichlet)
        errors.push_back(
            "Dirichlet part must be nonempty (a ball boundary is a single piece)");
      break;
    }
    case Shape::Polytope: {
      if (static_cast<int>(halfspaces.size()) < d + 1) {
        errors.push_back("polytope needs at least dim+1 half-spaces");
        break;
      }
      bool any_d = false;
      bool bad_normal = false;
      for (const auto& h : halfspaces) {
        if (distance(h.normal, Point{}, d) < 1e-14) bad_normal = true;
        any_d = any_d || h.label == BoundaryLabel::Dirichlet;
      }
      if (bad_normal) errors.push_back("polytope half-space with zero normal");
      if (!any_d) errors.push_back("Dirichlet part must be nonempty");
      if (!errors.empty()) break;

      const DomainSpec unit = normalized();
      const auto rows = polytope_rows(unit);
      if (has_recession_direction(rows, d)) {
        errors.push_back("polytope is unbounded");
        break;
      }
      Point blo{}, bhi{};
      unit.bounding_box(blo, bhi);
      if (chebyshev_radius(rows, d, 1.0 + distance(blo, bhi, d)) < 1e-12)
        errors.push_back("polytope has empty interior");
      break;
    }
  }
  return errors;
}

bool DomainSpec::has_neumann() const {
  switch (shape) {
    case Shape::Box: {
      for (int f = 0; f < 2 * dim; ++f)
        if (face_labels[f] == BoundaryLabel::Neumann) return true;
      return false;
    }
    case Shape::Ball:
      return sphere_label == BoundaryLabel::Neumann;
    case Shape::Polytope: {
      for (const auto& h : halfspaces)
        if (h.label == BoundaryLabel::Neumann) return true;
      return false;
    }
  }
  return false;
}

bool DomainSpec::contains(const Point& x, double tol) const {
  switch (shape) {
    case Shape::Box: {
      for (int a = 0; a < dim; ++a) {
        if (x[a] < lo[a] - tol || x[a] > hi[a] + tol) return false;
      }
      return true;
    }
    case Shape::Ball:
      return distance(x, center, dim) <= radius + tol;
    case Shape::Polytope: {
      for (const auto& h : halfspaces) {
        const double n = distance(h.normal, Point{}, dim);
        if (dot(h.normal, x, dim) > h.offset + tol * n) return false;
      }
      return true;
    }
  }
  return false;
}

double DomainSpec::inradius() const {
  switch (shape) {
    case Shape::Box: {
      double r = kInf;
      for (int a = 0; a < dim; ++a) r = std::min(r, 0.5 * (hi[a] - lo[a]));
      return r;
    }
    case Shape::Ball:
      return radius;
    case Shape::Polytope: {
      const DomainSpec unit = normalized();
      Point blo{}, bhi{};
      unit.bounding_box(blo, bhi);
      return chebyshev_radius(polytope_rows(unit), dim, 1.0 + distance(blo, bhi, dim));
    }
  }
  return 0.0;
}

double DomainSpec::diameter() const {
  switch (shape) {
    case Shape::Box:
      return distance(lo, hi, dim);
    case Shape::Ball:
      return 2.0 * radius;
    case Shape::Polytope: {
      const auto verts = vertices();
      double d = 0.0;
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          d = std::max(d, distance(verts[i], verts[j], dim));
      return d;
    }
  }
  return 0.0;
}

void DomainSpec::bounding_box(Point& out_lo, Point& out_hi) const {
  out_lo = {};
  out_hi = {};
  switch (shape) {
    case Shape::Box:
      out_lo = lo;
      out_hi = hi;
      return;
    case Shape::Ball:
      for (int a = 0; a < dim; ++a) {
        out_lo[a] = center[a] - radius;
        out_hi[a] = center[a] + radius;
      }
      return;
    case Shape::Polytope: {
      const auto verts = vertices();
      if (verts.empty()) return;
      out_lo = out_hi = verts.front();
      for (const auto& v : verts) {
        for (int a = 0; a < dim; ++a) {
          out_lo[a] = std::min(out_lo[a], v[a]);
          out_hi[a] = std::max(out_hi[a], v[a]);
        }
      }
      return;
    }
  }
}

DomainSpec DomainSpec::normalized() const {
  DomainSpec s = *this;
  for (auto& h : s.halfspaces) {
    const double n = distance(h.normal, Point{}, dim);
    if (n > 0.0) {
      for (int a = 0; a < dim; ++a) h.normal[a] /= n;
      h.offset /= n;
    }
  }
  return s;
}

std::vector<Point> DomainSpec::vertices() const {
  if (shape != Shape::Polytope) return {};
  const DomainSpec unit = normalized();
  std::vector<Point> out;
  for (const auto& v : enumerate_vertices_n(polytope_rows(unit), dim, 1e-9))
    out.push_back(Point{v[0], dim > 1 ? v[1] : 0.0, dim > 2 ? v[2] : 0.0});
  return out;
}

BoundaryProjection DomainSpec::project_to_dirichlet(const Point& x) const {
  switch (shape) {
    case Shape::Box: {
      BoundaryProjection best;
      best.dist = kInf;
      for (int a = 0; a < dim; ++a) {
        for (int side = 0; side < 2; ++side) {
          if (face_labels[2 * a + side] != BoundaryLabel::Dirichlet) continue;
          Point p = x;
          p[a] = side == 0 ? lo[a] : hi[a];
          const double d = std::fabs(x[a] - p[a]);
          if (d < best.dist - 1e-15 ||
              (d < best.dist + 1e-15 && lex_less(p, best.point))) {
            best.dist = d;
            best.point = p;
          }
        }
      }
      return best;
    }
    case Shape::Ball: {
      BoundaryProjection r;
      const double rho = distance(x, center, dim);
      r.dist = radius - rho;
      if (rho < 1e-14 * std::max(1.0, radius)) {
        r.point = center;
        r.point[0] -= radius;  // deterministic pick for the exact-center tie
      } else {
        r.point = center;
        for (int a = 0; a < dim; ++a)
          r.point[a] = center[a] + (x[a] - center[a]) * radius / rho;
      }
      return r;
    }
    case Shape::Polytope:
      return project_to_facets(x, *this, BoundaryLabel::Dirichlet);
  }
  return {};
}

double DomainSpec::distance_to_neumann(const Point& x) const {
  if (!has_neumann()) return kInf;
  switch (shape) {
    case Shape::Box: {
      double best = kInf;
      for (int a = 0; a < dim; ++a) {
        if (face_labels[2 * a + 0] == BoundaryLabel::Neumann)
          best = std::min(best, std::fabs(x[a] - lo[a]));
        if (face_labels[2 * a + 1] == BoundaryLabel::Neumann)
          best = std::min(best, std::fabs(hi[a] - x[a]));
      }
      return best;
    }
    case Shape::Ball:
      return kInf;  // validate() rejects an all-Neumann sphere
    case Shape::Polytope:
      return project_to_facets(x, *this, BoundaryLabel::Neumann).dist;
  }
  return kInf;
}

std::optional<NodeId> Grid::node_at(const std::array<std::int32_t, 3>& iv) const {
  const auto it = index_.find(lattice_key(iv));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Grid::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  auto mixd = [&](double v) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &v, sizeof(bits));
    mix(bits);
  };
  mix(static_cast<std::uint64_t>(spec.dim));
  mix(static_cast<std::uint64_t>(spec.shape));
  mixd(delta);
  mix(static_cast<std::uint64_t>(coords.size()));
  for (const auto& p : coords) {
    mixd(p[0]);
    mixd(p[1]);
    mixd(p[2]);
  }
  return h;
}

Grid build_grid(const DomainSpec& raw_spec, double delta) {
  const auto errors = raw_spec.validate();
  if (!errors.empty()) {
    std::string msg = "invalid domain spec:";
    for (const auto& e : errors) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
  if (!(delta > 0.0)) throw std::invalid_argument("grid spacing must be positive");

  const DomainSpec spec = raw_spec.normalized();
  if (delta >= spec.inradius())
    throw std::invalid_argument("grid spacing must be smaller than the domain inradius");

  Grid g;
  g.spec = spec;
  g.delta = delta;
  switch (spec.shape) {
    case DomainSpec::Shape::Box:
      g.anchor = spec.lo;
      break;
    case DomainSpec::Shape::Ball:
      g.anchor = spec.center;
      break;
    case DomainSpec::Shape::Polytope: {
      Point blo{}, bhi{};
      spec.bounding_box(blo, bhi);
      g.anchor = blo;
      break;
    }
  }

  Point blo{}, bhi{};
  spec.bounding_box(blo, bhi);
  const double scale = std::max(1.0, distance(blo, bhi, spec.dim));
  const double tol = 1e-9 * scale;

  std::array<std::int64_t, 3> ib{0, 0, 0}, ie{0, 0, 0};
  for (int a = 0; a < spec.dim; ++a) {
    ib[a] = static_cast<std::int64_t>(std::ceil((blo[a] - g.anchor[a]) / delta - 1e-9));
    ie[a] = static_cast<std::int64_t>(std::floor((bhi[a] - g.anchor[a]) / delta + 1e-9));
  }

  const double half_delta = 0.5 * delta;
  for (std::int64_t i0 = ib[0]; i0 <= ie[0]; ++i0) {
    for (std::int64_t i1 = ib[1]; i1 <= ie[1]; ++i1) {
      for (std::int64_t i2 = ib[2]; i2 <= ie[2]; ++i2) {
        const std::array<std::int32_t, 3> iv = {static_cast<std::int32_t>(i0),
                                                static_cast<std::int32_t>(i1),
                                                static_cast<std::int32_t>(i2)};
        Point p = g.anchor;
        p[0] += delta * static_cast<double>(i0);
        p[1] += delta * static_cast<double>(i1);
        p[2] += delta * static_cast<double>(i2);
        if (!spec.contains(p, tol)) continue;

        const auto proj = spec.project_to_dirichlet(p);
        const double dn = spec.distance_to_neumann(p);
        g.lattice.push_back(iv);
        g.coords.push_back(p);
        g.dirichlet_distance.push_back(std::max(0.0, proj.dist));
        g.dirichlet_anchor.push_back(proj.point);
        g.node_class.push_back(dn <= half_delta + tol ? NodeClass::NeumannFace
                                                      : NodeClass::Interior);
      }
    }
  }
  if (g.coords.empty()) throw std::invalid_argument("empty lattice for the given spacing");

  g.index_.reserve(g.coords.size() * 2);
  for (NodeId i = 0; i < g.size(); ++i) g.index_.emplace(lattice_key(g.lattice[i]), i);
  return g;
}

NeighborhoodTable neighborhoods(const Grid& grid, double eps) {
  if (!(eps >= grid.delta))
    throw std::invalid_argument("neighborhood radius must be at least the grid spacing");

  NeighborhoodTable t;
  t.eps = eps;
  if (eps / grid.delta < 3.0)
    t.warning = "eps/delta < 3: ball extrema carry a large lattice quadrature error";

  // Squared radii compare exactly in integer lattice units.
  const double limit = eps * eps * (1.0 + 1e-12) / (grid.delta * grid.delta);
  const auto reach = static_cast<std::int32_t>(std::floor(std::sqrt(limit)) + 1);
  std::vector<std::array<std::int32_t, 3>> offsets;
  const int d = grid.dim();
  std::array<std::int32_t, 3> o{0, 0, 0};
  const std::int32_t r1 = d > 1 ? reach : 0;
  const std::int32_t r2 = d > 2 ? reach : 0;
  for (o[0] = -reach; o[0] <= reach; ++o[0]) {
    for (o[1] = -r1; o[1] <= r1; ++o[1]) {
      for (o[2] = -r2; o[2] <= r2; ++o[2]) {
        const double n2 = static_cast<double>(o[0]) * o[0] +
                          static_cast<double>(o[1]) * o[1] +
                          static_cast<double>(o[2]) * o[2];
        if (n2 <= limit) offsets.push_back(o);
      }
    }
  }

  const NodeId n = grid.size();
  t.row_begin.assign(static_cast<std::size_t>(n) + 1, 0);
  t.data.reserve(static_cast<std::size_t>(n) * offsets.size() / 2);
  for (NodeId i = 0; i < n; ++i) {
    const auto& iv = grid.lattice[i];
    for (const auto& off : offsets) {
      const std::array<std::int32_t, 3> jv = {iv[0] + off[0], iv[1] + off[1],
                                              iv[2] + off[2]};
      if (auto j = grid.node_at(jv)) t.data.push_back(*j);
    }
    std::sort(t.data.begin() + t.row_begin[i], t.data.end());
    t.row_begin[i + 1] = static_cast<std::int64_t>(t.data.size());
  }
  return t;
}

std::vector<NodeId> omega_eps_nodes(const Grid& grid, double eps) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < grid.size(); ++i) {
    if (grid.dirichlet_distance[i] > eps) out.push_back(i);
  }
  return out;
}

void dump_grid_csv(const Grid& grid, std::ostream& out) {
  out << "node_id";
  for (int a = 0; a < grid.dim(); ++a) out << ",x" << (a + 1);
  out << ",class,dist_gammaD\n";
  char buf[64];
  for (NodeId i = 0; i < grid.size(); ++i) {
    out << i;
    for (int a = 0; a < grid.dim(); ++a) {
      std::snprintf(buf, sizeof(buf), "%.17g", grid.coords[i][a]);
      out << ',' << buf;
    }
    out << ','
        << (grid.node_class[i] == NodeClass::Interior ? "INTERIOR" : "NEUMANN_FACE");
    std::snprintf(buf, sizeof(buf), "%.17g", grid.dirichlet_distance[i]);
    out << ',' << buf << '\n';
  }
}

}  // namespace epsball
