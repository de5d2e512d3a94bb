#include <doctest.h>

#include <cmath>
#include <random>

#include "epsball/cone_profiles.hpp"
#include "epsball/scheme_params.hpp"
#include "test_support.hpp"

using namespace epsball;
using namespace epsball::testing;

namespace {

/// Independent 2x2 solve of gamma(0)=g0, gamma'(0)=g0p against the
/// exponential closed form c1 + c2 e^{-bt} - (k/b) t.
void closed_form_coeffs(double b, double k, double g0, double g0p, double& c1,
                        double& c2) {
  // gamma(0) = c1 + c2, gamma'(0) = -b c2 - k/b
  c2 = -(g0p + k / b) / b;
  c1 = g0 - c2;
}

/// Draws an increasing profile whose derivative stays positive past t_need.
ConeProfile random_increasing(std::mt19937& rng, double t_need, bool allow_beta0) {
  for (;;) {
    const bool beta0 = allow_beta0 && rng() % 4 == 0;
    const double beta = beta0 ? 0.0 : rand_in(rng, -2.5, 2.5);
    const double k = rand_in(rng, -2.0, 2.0);
    const double g0 = rand_in(rng, -1.0, 1.0);
    const double g0p = rand_in(rng, 0.05, 3.0);
    ConeProfile p = from_initial(beta, k, g0, g0p);
    if (p.r_max > t_need) return p;
  }
}

}  // namespace

TEST_CASE("initial-value construction reproduces the closed forms") {
  SUBCASE("zero bias, zero level is a straight line") {
    const ConeProfile p = from_initial(0.0, 0.0, 0.0, 1.0);
    CHECK(p.branch == +1);
    for (double t : {0.0, 0.3, 1.7}) CHECK(eval(p, t) == doctest::Approx(t));
  }
  SUBCASE("bias 1, level 0: coefficients solve the 2x2 system") {
    const ConeProfile p = from_initial(1.0, 0.0, 0.0, 1.0);
    double c1 = 0.0, c2 = 0.0;
    closed_form_coeffs(1.0, 0.0, 0.0, 1.0, c1, c2);
    CHECK(p.c1 == doctest::Approx(c1));
    CHECK(p.c2 == doctest::Approx(c2));
    CHECK(p.c1 == doctest::Approx(-p.c2));
    CHECK(eval(p, 0.7) == doctest::Approx(1.0 - std::exp(-0.7)).epsilon(1e-14));
  }
  SUBCASE("flat start with negative level rises") {
    const ConeProfile p = from_initial(1.0, -1.0, 0.0, 0.0, 1.0);
    for (double t : {0.1, 0.5, 1.0}) {
      CHECK(eval(p, t) == doctest::Approx(t + std::exp(-t) - 1.0).epsilon(1e-14));
      CHECK(eval_prime(p, t) > 0.0);
      CHECK(ode_residual(p, t) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("flat-start profile") {
  SUBCASE("bias 1, level -1") {
    const ConeProfile p = flat_start_profile(1.0, -1.0, 0.0);
    CHECK(eval(p, 1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-14));
    CHECK(eval_prime(p, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("zero bias gives the half parabola") {
    const ConeProfile p = flat_start_profile(0.0, -1.0, 0.0);
    for (double t : {0.2, 1.0, 2.0})
      CHECK(eval(p, t) == doctest::Approx(0.5 * t * t).epsilon(1e-14));
  }
  SUBCASE("initial data are honored for any bias") {
    for (double beta : {-1.5, 0.0, 0.7}) {
      const ConeProfile p = flat_start_profile(beta, -0.4, 2.5);
      CHECK(eval(p, 0.0) == doctest::Approx(2.5));
      CHECK(eval_prime(p, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("nonnegative level is rejected") {
    CHECK_THROWS_AS(flat_start_profile(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(flat_start_profile(1.0, 0.5, 0.0), std::invalid_argument);
  }
}

TEST_CASE("increasing barrier values") {
  SUBCASE("zero bias") {
    const ConeProfile p = lipschitz_majorant(0.0, 1.0, 1.0);
    CHECK(eval(p, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eval(p, 0.4) == doctest::Approx(-0.08 + 0.4).epsilon(1e-14));
  }
  SUBCASE("bias 1") {
    const ConeProfile p = lipschitz_majorant(1.0, 1.0, 1.0);
    CHECK(eval(p, 1.0) == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-14));
    CHECK(ode_residual(p, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("zero level collapses to zero") {
    for (double beta : {-1.0, 0.0, 2.0}) {
      const ConeProfile p = lipschitz_majorant(beta, 0.0, 1.0);
      for (double t : {0.0, 0.5, 1.0}) CHECK(eval(p, t) == doctest::Approx(0.0));
    }
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(lipschitz_majorant(1.0, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lipschitz_majorant(1.0, 1.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("decreasing barrier values") {
  SUBCASE("zero bias") {
    const ConeProfile p = subsolution_minorant(0.0, 1.0, 1.0);
    CHECK(eval(p, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
  }
  SUBCASE("bias 1") {
    const ConeProfile p = subsolution_minorant(1.0, 1.0, 1.0);
    CHECK(eval(p, 1.0) == doctest::Approx(-0.36787944117144233).epsilon(1e-14));
    CHECK(p.branch == -1);
    CHECK(eval_prime(p, 0.5) < 0.0);
    // decreasing branch solves the equation at level -k
    CHECK(ode_residual(p, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("zero level collapses to zero") {
    const ConeProfile p = subsolution_minorant(0.5, 0.0, 2.0);
    CHECK(eval(p, 1.3) == doctest::Approx(0.0));
  }
}

TEST_CASE("equation residual vanishes on random branches") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const double beta = trial % 5 == 0 ? 0.0 : rand_in(rng, -3.0, 3.0);
    const double k = rand_in(rng, -2.0, 2.0);
    const double g0 = rand_in(rng, -1.0, 1.0);
    const double g0p = rand_in(rng, -2.0, 2.0);
    const ConeProfile p = from_initial(beta, k, g0, g0p);
    const double top = std::isfinite(p.r_max) ? p.r_max : 3.0;
    for (int s = 0; s < 100; ++s) {
      const double t = top * s / 100.0;
      const double scale = std::max(1.0, std::fabs(k));
      CHECK(std::fabs(ode_residual(p, t)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("branch discipline holds along the validity interval") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const double beta = rand_in(rng, -2.0, 2.0);
    const double k = rand_in(rng, -2.0, 2.0);
    const double g0p = rand_in(rng, -2.0, 2.0);
    const ConeProfile p = from_initial(beta, k, 0.0, g0p);
    const double top = std::isfinite(p.r_max) ? p.r_max : 5.0;
    for (int s = 0; s <= 1000; ++s) {
      const double t = top * s / 1000.0;
      CHECK(p.branch * eval_prime(p, t) >= -1e-10 * std::max(1.0, std::fabs(g0p)));
    }
  }
}

TEST_CASE("barrier grows pointwise with its level") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const double beta = rand_in(rng, -2.0, 2.0);
    const double d = rand_in(rng, 0.5, 2.0);
    const double k1 = rand_in(rng, 0.0, 1.0);
    const double k2 = k1 + rand_in(rng, 0.1, 1.0);
    const ConeProfile a = lipschitz_majorant(beta, k1, d);
    const ConeProfile b = lipschitz_majorant(beta, k2, d);
    for (int s = 1; s <= 20; ++s) {
      const double t = d * s / 20.0;
      CHECK(eval(b, t) > eval(a, t) - 1e-14);
    }
  }
}

TEST_CASE("ball-increment identity: equality without clipping") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const ConeProfile p = random_increasing(rng, 1.0, true);
    const double eps = rand_in(rng, 0.05, 0.45);
    const FdIdentity id = fd_identity_check(p, eps, 1.0);
    CHECK(std::fabs(id.lhs - id.rhs) <= 1e-10 * std::max(1.0, std::fabs(id.rhs)));
  }
}

TEST_CASE("ball-increment identity: strict drop when the interval clips") {
  SUBCASE("worked example") {
    // increasing with gamma'(0.15) = 0, checked against the lemma's window
    const ConeProfile p = lipschitz_majorant(1.0, 1.0, 0.15);
    const FdIdentity id = fd_identity_check(p, 0.1, 0.15);
    CHECK(id.rhs == doctest::Approx(0.1));
    CHECK(id.lhs < id.rhs - 1e-4);
  }
  SUBCASE("random clipped profiles stay strictly below") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const double beta = rand_in(rng, -2.0, 2.0);
      const double k = rand_in(rng, 0.2, 2.0);
      const double eps = rand_in(rng, 0.1, 0.3);
      const double r = eps * rand_in(rng, 1.05, 1.9);
      const ConeProfile p = lipschitz_majorant(beta, k, r);
      const FdIdentity id = fd_identity_check(p, eps, r);
      CHECK(id.lhs < id.rhs);
    }
  }
  SUBCASE("zero-bias quadratic example") {
    const ConeProfile p = lipschitz_majorant(0.0, 1.0, 1.0);  // -t^2/2 + t
    const FdIdentity id = fd_identity_check(p, 0.1, 1.0);
    CHECK(id.lhs == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(id.rhs == doctest::Approx(0.1));
  }
}

TEST_CASE("profile contract violations throw") {
  SUBCASE("interior sign change is refused with the crossing point") {
    try {
      from_initial(0.0, 1.0, 0.0, 0.5, 1.0);  // gamma' = 0.5 - t crosses at 0.5
      FAIL("expected SignChangeError");
    } catch (const SignChangeError& e) {
      CHECK(e.critical == doctest::Approx(0.5));
    }
  }
  SUBCASE("default interval stops at the crossing instead") {
    const ConeProfile p = from_initial(0.0, 1.0, 0.0, 0.5);
    CHECK(p.r_max == doctest::Approx(0.5));
  }
  SUBCASE("evaluation outside the interval") {
    const ConeProfile p = from_initial(0.0, 1.0, 0.0, 0.5);
    CHECK_THROWS_AS(eval(p, 0.7), std::domain_error);
    CHECK_THROWS_AS(eval_prime(p, -0.2), std::domain_error);
  }
  SUBCASE("identity rejects decreasing profiles") {
    const ConeProfile p = subsolution_minorant(1.0, 1.0, 1.0);
    CHECK_THROWS_AS(fd_identity_check(p, 0.1, 1.0), std::invalid_argument);
  }
  SUBCASE("identity rejects a clipped window without a flat end") {
    const ConeProfile p = from_initial(1.0, 0.0, 0.0, 1.0);  // gamma' > 0 always
    CHECK_THROWS_AS(fd_identity_check(p, 0.3, 0.4), std::invalid_argument);
  }
}

TEST_CASE("derived bound constants") {
  const AprioriConstants c = apriori_constants(1.0, 1.0, 1.0, 0.25, 2.0);
  CHECK(c.c1_bound == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-13));
  const ConeProfile maj = lipschitz_majorant(1.0, 1.0, 1.0);
  const double expected_c2 =
      std::max(1.0, 2.0 / eval(maj, 0.25)) * maj.gamma0p;
  CHECK(c.c2_bound == doctest::Approx(expected_c2).epsilon(1e-13));
  // flat barrier: no slope information
  const AprioriConstants z = apriori_constants(1.0, 0.0, 1.0, 0.25, 2.0);
  CHECK(z.c1_bound == doctest::Approx(0.0));
  CHECK(z.c2_bound == doctest::Approx(0.0));
}

TEST_CASE("profiles are continuous across zero bias") {
  const double k = -0.7, g0 = 0.3, g0p = 1.1;
  const ConeProfile at0 = from_initial(0.0, k, g0, g0p);
  for (double beta : {1e-12, -1e-12, 1e-9, -1e-9}) {
    const ConeProfile near0 = from_initial(beta, k, g0, g0p);
    for (double t : {0.1, 0.8, 1.9}) {
      CHECK(eval(near0, t) == doctest::Approx(eval(at0, t)).epsilon(1e-9));
      CHECK(eval_prime(near0, t) == doctest::Approx(eval_prime(at0, t)).epsilon(1e-9));
    }
  }
}
