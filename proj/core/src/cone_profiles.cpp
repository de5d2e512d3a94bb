#include "epsball/cone_profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "epsball/scheme_params.hpp"

namespace epsball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// phi_b(t) = (1 - exp(-b t))/b, the t-limit at b = 0.
double phi(double b, double t) {
  const double z = b * t;
  if (std::fabs(z) < 1e-3) {
    return t * (1.0 + z * (-0.5 + z * (1.0 / 6.0 + z * (-1.0 / 24.0 + z / 120.0))));
  }
  return -std::expm1(-z) / b;
}

/// psi_b(t) = (phi_b(t) - t)/b = (1 - b t - exp(-b t))/b^2, -> -t^2/2 at b = 0.
double psi(double b, double t) {
  const double z = b * t;
  if (std::fabs(z) < 1e-3) {
    return -0.5 * t * t *
           (1.0 + z * (-1.0 / 3.0 + z * (1.0 / 12.0 + z * (-1.0 / 60.0 + z / 360.0))));
  }
  return (-std::expm1(-z) - z) / (b * b);
}

double length_scale(const ConeProfile& p) {
  return std::isfinite(p.r_max) ? std::max(1.0, p.r_max) : 1.0;
}

void check_interval(const ConeProfile& p, double t) {
  const double tol = 1e-12 * length_scale(p);
  if (t < -tol || t > p.r_max + tol)
    throw std::domain_error("profile evaluated outside its validity interval");
}

/// First positive zero of gamma' for the closed form, if any. gamma0p = 0 is
/// the flat-start boundary case and does not count as an interior crossing.
std::optional<double> first_critical_point(double b, double k, double gamma0p) {
  if (k == 0.0) return std::nullopt;  // gamma' = gamma0p * exp(-b t), no zero
  if (gamma0p == 0.0) return std::nullopt;
  if (std::fabs(b) < 1e-14) {
    const double t = gamma0p / k;
    return t > 0.0 ? std::optional<double>(t) : std::nullopt;
  }
  const double arg = b * gamma0p / k;
  if (arg <= -1.0) return std::nullopt;
  const double t = std::log1p(arg) / b;
  return t > 0.0 ? std::optional<double>(t) : std::nullopt;
}

void fill_closed_form(ConeProfile& p) {
  const double scale = length_scale(p);
  p.quadratic = std::fabs(p.beta) < 1e-8 / scale;
  if (p.quadratic) {
    p.c1 = p.gamma0;
    p.c2 = p.gamma0p;
  } else {
    const double b = p.linear_rate();
    p.c2 = -(p.gamma0p + p.k / b) / b;
    p.c1 = p.gamma0 - p.c2;
  }
}

}  // namespace

ConeProfile from_initial(double beta, double k, double gamma0, double gamma0p,
                         std::optional<double> r_max) {
  ConeProfile p;
  p.beta = beta;
  p.k = k;
  p.gamma0 = gamma0;
  p.gamma0p = gamma0p;
  if (gamma0p > 0.0)
    p.branch = +1;
  else if (gamma0p < 0.0)
    p.branch = -1;
  else
    p.branch = k < 0.0 ? +1 : (k > 0.0 ? -1 : +1);

  const double b = p.linear_rate();
  const auto crit = first_critical_point(b, k, gamma0p);
  if (r_max) {
    if (!(*r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
    const double tol = 1e-12 * std::max(1.0, *r_max);
    if (crit && *crit < *r_max - tol) {
      throw SignChangeError(
          "SIGN_CHANGE: gamma' crosses zero inside the requested interval", *crit);
    }
    p.r_max = *r_max;
  } else {
    p.r_max = crit.value_or(kInf);
  }
  fill_closed_form(p);
  return p;
}

ConeProfile flat_start_profile(double beta, double k, double gamma0) {
  if (!(k < 0.0))
    throw std::invalid_argument("flat-start profile requires a negative level");
  return from_initial(beta, k, gamma0, 0.0, std::nullopt);
}

ConeProfile lipschitz_majorant(double beta, double k, double d) {
  if (k < 0.0) throw std::invalid_argument("barrier level must be nonnegative");
  if (!(d > 0.0)) throw std::invalid_argument("barrier length must be positive");
  // gamma'(0) = k (e^{beta d} - 1)/beta; the critical point lands exactly at d.
  const double slope0 = k * phi(-beta, d);
  return from_initial(beta, k, 0.0, slope0, d);
}

ConeProfile subsolution_minorant(double beta, double k, double d) {
  if (k < 0.0) throw std::invalid_argument("barrier level must be nonnegative");
  if (!(d > 0.0)) throw std::invalid_argument("barrier length must be positive");
  // Decreasing branch at level -k: gamma'(0) = k (e^{-beta d} - 1)/beta.
  const double slope0 = -k * phi(beta, d);
  return from_initial(beta, -k, 0.0, slope0, d);
}

double eval(const ConeProfile& p, double t) {
  check_interval(p, t);
  t = std::clamp(t, 0.0, p.r_max);
  const double b = p.linear_rate();
  return p.gamma0 + p.gamma0p * phi(b, t) + p.k * psi(b, t);
}

double eval_prime(const ConeProfile& p, double t) {
  check_interval(p, t);
  t = std::clamp(t, 0.0, p.r_max);
  const double b = p.linear_rate();
  return p.gamma0p * std::exp(-b * t) - p.k * phi(b, t);
}

double ode_residual(const ConeProfile& p, double t) {
  check_interval(p, t);
  t = std::clamp(t, 0.0, p.r_max);
  const double b = p.linear_rate();
  const double gp = p.gamma0p * std::exp(-b * t) - p.k * phi(b, t);
  const double gpp = -std::exp(-b * t) * (b * p.gamma0p + p.k);
  return -gpp - p.beta * std::fabs(gp) - p.k;
}

AprioriConstants apriori_constants(double beta, double k, double diam, double margin,
                                   double osc) {
  const ConeProfile maj = lipschitz_majorant(beta, k, diam);
  AprioriConstants c;
  c.c1_bound = eval(maj, diam);
  const double gm = eval(maj, std::clamp(margin, 0.0, diam));
  // A zero level gives a flat barrier and no slope information.
  c.c2_bound = gm > 0.0 ? std::max(1.0, osc / gm) * maj.gamma0p : 0.0;
  return c;
}

FdIdentity fd_identity_check(const ConeProfile& p, double eps, double r) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
  if (p.branch != +1)
    throw std::invalid_argument("identity requires an increasing profile");
  const double tol = 1e-12 * std::max(1.0, r);
  if (r > p.r_max + tol)
    throw std::invalid_argument("r exceeds the profile validity interval");
  const double end_slope = eval_prime(p, std::min(r, p.r_max));
  const double slope_scale = std::max({1.0, std::fabs(p.gamma0p), std::fabs(p.k)});
  if (r < 2.0 * eps - tol && std::fabs(end_slope) > 1e-9 * slope_scale) {
    throw std::invalid_argument(
        "clipped case requires gamma'(r) = 0 when r < 2 eps");
  }

  const double r1 = std::min(eps, r);
  const double r2 = std::min(2.0 * eps, r);
  const auto [a_plus, a_minus] = coefficients(p.beta, eps);
  FdIdentity id;
  id.lhs = a_plus * (eval(p, r1) - eval(p, 0.0)) -
           a_minus * (eval(p, r2) - eval(p, r1));
  id.rhs = eps * p.k;
  return id;
}

}  // namespace epsball
