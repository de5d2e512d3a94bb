#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "epsball/geometry.hpp"
#include "test_support.hpp"

using namespace epsball;
using namespace epsball::testing;

TEST_CASE("1-D box lattice enumerates the expected nodes") {
  const Grid grid = build_grid(interval01(), 0.25);
  REQUIRE(grid.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(grid.coords[i][0] == doctest::Approx(0.25 * i));
  CHECK(grid.dirichlet_distance[2] == doctest::Approx(0.5));
  CHECK(grid.dirichlet_distance[0] == doctest::Approx(0.0));
}

TEST_CASE("2-D mixed box: node count and Dirichlet distance") {
  const Grid grid = build_grid(box2d_mixed(), 0.5);
  REQUIRE(grid.size() == 9);
  bool found_center = false;
  for (NodeId i = 0; i < grid.size(); ++i) {
    if (grid.coords[i][0] == doctest::Approx(0.5) &&
        grid.coords[i][1] == doctest::Approx(0.5)) {
      found_center = true;
      CHECK(grid.dirichlet_distance[i] == doctest::Approx(0.5));
    }
  }
  CHECK(found_center);
  // distance to the Dirichlet part ignores the Neumann faces entirely
  for (NodeId i = 0; i < grid.size(); ++i) {
    const double x1 = grid.coords[i][0];
    CHECK(grid.dirichlet_distance[i] ==
          doctest::Approx(std::min(x1, 1.0 - x1)).epsilon(1e-12));
  }
}

TEST_CASE("ball lattice matches a brute-force scan") {
  DomainSpec disc = unit_disc();
  const double delta = 0.4;
  const Grid grid = build_grid(disc, delta);

  int count = 0;  // independent double loop over the index rectangle
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      const double x = delta * i, y = delta * j;
      if (std::sqrt(x * x + y * y) <= 1.0 + 1e-9) ++count;
    }
  }
  CHECK(grid.size() == count);
  for (NodeId i = 0; i < grid.size(); ++i) {
    const double rho = std::hypot(grid.coords[i][0], grid.coords[i][1]);
    CHECK(grid.dirichlet_distance[i] == doctest::Approx(1.0 - rho).epsilon(1e-9));
  }
}

TEST_CASE("neighborhoods trace closed balls exactly") {
  const Grid grid = build_grid(interval01(), 0.25);
  const NeighborhoodTable t = neighborhoods(grid, 0.5);

  SUBCASE("interior node sees the whole closed ball") {
    const auto n = t.of(2);  // node at 0.5
    REQUIRE(n.size() == 5);
    for (int j = 0; j < 5; ++j) CHECK(n[j] == j);
  }
  SUBCASE("boundary node's ball is clipped by the closure") {
    const auto n = t.of(0);
    REQUIRE(n.size() == 3);
    CHECK(n[0] == 0);
    CHECK(n[1] == 1);
    CHECK(n[2] == 2);
  }
  SUBCASE("coarse radius carries a warning") {
    CHECK(!t.warning.empty());  // 0.5/0.25 = 2 < 3
    const NeighborhoodTable fine = neighborhoods(grid, 0.75);
    CHECK(fine.warning.empty());
  }
}

TEST_CASE("2-D neighbor lists match a brute-force double loop") {
  const Grid grid = build_grid(box2d_mixed(), 0.125);
  const double eps = 0.3;
  const NeighborhoodTable t = neighborhoods(grid, eps);
  for (NodeId i = 0; i < grid.size(); i += 7) {
    std::set<NodeId> brute;
    for (NodeId j = 0; j < grid.size(); ++j) {
      if (squared_distance(grid.coords[i], grid.coords[j], 2) <=
          eps * eps * (1.0 + 1e-12))
        brute.insert(j);
    }
    const auto fast = t.of(i);
    REQUIRE(fast.size() == brute.size());
    for (NodeId j : fast) CHECK(brute.count(j) == 1);
  }
}

TEST_CASE("omega_eps uses a strict distance comparison") {
  const Grid grid = build_grid(interval01(), 0.1);
  SUBCASE("eps = 0.3 keeps exactly the three middle nodes") {
    const auto omega = omega_eps_nodes(grid, 0.3);
    REQUIRE(omega.size() == 3);
    CHECK(grid.coords[omega[0]][0] == doctest::Approx(0.4));
    CHECK(grid.coords[omega[1]][0] == doctest::Approx(0.5));
    CHECK(grid.coords[omega[2]][0] == doctest::Approx(0.6));
  }
  SUBCASE("eps at half the diameter leaves nothing") {
    CHECK(omega_eps_nodes(grid, 0.5).empty());
    CHECK(omega_eps_nodes(grid, 0.7).empty());
  }
  SUBCASE("mixed box membership depends only on the Dirichlet coordinate") {
    const Grid g2 = build_grid(box2d_mixed(), 0.125);
    for (NodeId i : omega_eps_nodes(g2, 0.25)) {
      CHECK(g2.coords[i][0] > 0.25);
      CHECK(g2.coords[i][0] < 0.75);
    }
    // exact count: x1 in {0.375, 0.5, 0.625} times 9 x2 values
    CHECK(omega_eps_nodes(g2, 0.25).size() == 3 * 9);
  }
}

TEST_CASE("neighborhood symmetry and radius monotonicity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const double delta = rand_in(rng, 0.07, 0.2);
    const Grid grid = build_grid(trial % 2 ? box2d_mixed() : unit_disc(), delta);
    const double eps1 = delta * rand_in(rng, 1.0, 2.5);
    const double eps2 = eps1 * rand_in(rng, 1.0, 2.0);
    const NeighborhoodTable a = neighborhoods(grid, eps1);
    const NeighborhoodTable b = neighborhoods(grid, eps2);
    for (NodeId i = 0; i < grid.size(); ++i) {
      const auto ni = a.of(i);
      CHECK(std::find(ni.begin(), ni.end(), i) != ni.end());  // self-membership
      for (NodeId j : ni) {
        const auto nj = a.of(j);
        CHECK(std::find(nj.begin(), nj.end(), i) != nj.end());  // symmetry
      }
      const auto wide = b.of(i);
      std::set<NodeId> wide_set(wide.begin(), wide.end());
      for (NodeId j : ni) CHECK(wide_set.count(j) == 1);  // monotone in eps
    }
  }
}

TEST_CASE("Dirichlet distance is 1-Lipschitz across neighbors") {
  const Grid grid = build_grid(box2d_mixed(), 0.1);
  const NeighborhoodTable t = neighborhoods(grid, 0.1001);
  for (NodeId i = 0; i < grid.size(); ++i) {
    for (NodeId j : t.of(i)) {
      const double gap =
          std::fabs(grid.dirichlet_distance[i] - grid.dirichlet_distance[j]);
      CHECK(gap <= distance(grid.coords[i], grid.coords[j], 2) + 1e-12);
    }
  }
}

TEST_CASE("grid construction is deterministic") {
  const Grid a = build_grid(unit_disc(), 0.13);
  const Grid b = build_grid(unit_disc(), 0.13);
  REQUIRE(a.size() == b.size());
  CHECK(a.hash() == b.hash());
  for (NodeId i = 0; i < a.size(); ++i) {
    CHECK(a.coords[i] == b.coords[i]);
    CHECK(a.lattice[i] == b.lattice[i]);
  }
  const NeighborhoodTable ta = neighborhoods(a, 0.3);
  const NeighborhoodTable tb = neighborhoods(b, 0.3);
  CHECK(ta.data == tb.data);
  CHECK(ta.row_begin == tb.row_begin);
}

TEST_CASE("square as a polytope reproduces the box geometry") {
  DomainSpec poly;
  poly.dim = 2;
  poly.shape = DomainSpec::Shape::Polytope;
  // x >= 0, x <= 1, y >= 0, y <= 1; Dirichlet on the x faces only.
  poly.halfspaces = {
      {{-1.0, 0.0, 0.0}, 0.0, BoundaryLabel::Dirichlet},
      {{1.0, 0.0, 0.0}, 1.0, BoundaryLabel::Dirichlet},
      {{0.0, -1.0, 0.0}, 0.0, BoundaryLabel::Neumann},
      {{0.0, 1.0, 0.0}, 1.0, BoundaryLabel::Neumann},
  };
  CHECK(poly.validate().empty());
  CHECK(poly.inradius() == doctest::Approx(0.5));
  CHECK(poly.diameter() == doctest::Approx(std::sqrt(2.0)));
  REQUIRE(poly.vertices().size() == 4);

  const Grid gp = build_grid(poly, 0.125);
  const Grid gb = build_grid(box2d_mixed(), 0.125);
  REQUIRE(gp.size() == gb.size());
  for (NodeId i = 0; i < gp.size(); ++i) {
    CHECK(gp.coords[i][0] == doctest::Approx(gb.coords[i][0]));
    CHECK(gp.coords[i][1] == doctest::Approx(gb.coords[i][1]));
    CHECK(gp.dirichlet_distance[i] ==
          doctest::Approx(gb.dirichlet_distance[i]).epsilon(1e-9));
    CHECK((gp.node_class[i] == gb.node_class[i]));
  }
}

TEST_CASE("invalid specs are rejected") {
  SUBCASE("spacing above the inradius") {
    CHECK_THROWS_AS(build_grid(interval01(), 0.6), std::invalid_argument);
  }
  SUBCASE("all-Neumann sphere leaves no Dirichlet part") {
    DomainSpec s = unit_disc();
    s.sphere_label = BoundaryLabel::Neumann;
    CHECK(!s.validate().empty());
  }
  SUBCASE("unbounded polytope") {
    DomainSpec s;
    s.dim = 2;
    s.shape = DomainSpec::Shape::Polytope;
    s.halfspaces = {
        {{-1.0, 0.0, 0.0}, 0.0, BoundaryLabel::Dirichlet},
        {{0.0, -1.0, 0.0}, 0.0, BoundaryLabel::Dirichlet},
        {{0.0, 1.0, 0.0}, 1.0, BoundaryLabel::Dirichlet},
    };
    const auto errors = s.validate();
    bool mentions_unbounded = false;
    for (const auto& e : errors)
      mentions_unbounded = mentions_unbounded || e.find("unbounded") != std::string::npos;
    CHECK(mentions_unbounded);
  }
  SUBCASE("empty-interior polytope") {
    DomainSpec s;
    s.dim = 2;
    s.shape = DomainSpec::Shape::Polytope;
    s.halfspaces = {
        {{-1.0, 0.0, 0.0}, 0.0, BoundaryLabel::Dirichlet},
        {{1.0, 0.0, 0.0}, -0.5, BoundaryLabel::Dirichlet},
        {{0.0, -1.0, 0.0}, 0.0, BoundaryLabel::Dirichlet},
        {{0.0, 1.0, 0.0}, 1.0, BoundaryLabel::Dirichlet},
    };
    CHECK(!s.validate().empty());
  }
  SUBCASE("degenerate box bounds") {
    DomainSpec s = interval01();
    s.hi[0] = 0.0;
    CHECK(!s.validate().empty());
  }
}

TEST_CASE("grid CSV dump carries coordinates, class and distance") {
  const Grid grid = build_grid(box2d_mixed(), 0.5);
  std::ostringstream out;
  dump_grid_csv(grid, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "node_id,x1,x2,class,dist_gammaD");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const bool labeled = line.find("INTERIOR") != std::string::npos ||
                         line.find("NEUMANN_FACE") != std::string::npos;
    CHECK(labeled);
  }
  CHECK(rows == grid.size());
}
