#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace epsball {

/// Thrown by from_initial when the derivative crosses zero strictly inside the
/// requested interval; the caller must split the profile at the critical point.
struct SignChangeError : std::invalid_argument {
  explicit SignChangeError(const std::string& what, double critical_point)
      : std::invalid_argument(what), critical(critical_point) {}
  double critical;
};

/// Radial profile gamma solving -gamma'' - beta*|gamma'| = k on a branch where
/// gamma' keeps one sign.
///
/// On the branch the absolute value resolves to branch*gamma', so gamma obeys
/// the linear equation -gamma'' - b*gamma' = k with b = branch*beta, whose
/// closed form is
///     gamma(t) = c1 + c2*exp(-b t) - (k/b) t        (b away from 0)
///     gamma(t) = c1 + c2*t - (k/2) t^2              (quadratic regime)
/// Evaluation never uses (c1, c2): it runs through the initial-value form
/// gamma0 + gamma0p*phi_b(t) + k*psi_b(t), which is stable uniformly in b and
/// continuous across beta = 0. The coefficients are kept because they identify
/// the profile in reports; `quadratic` records which closed form they refer to
/// (|beta| below 1e-8 over the profile's length scale).
struct ConeProfile {
  double beta = 0.0;
  double k = 0.0;      // level: -gamma'' - beta*|gamma'| = k on the branch
  double c1 = 0.0;
  double c2 = 0.0;
  int branch = +1;     // +1 nondecreasing, -1 nonincreasing on [0, r_max]
  double r_max = 0.0;  // validity interval [0, r_max]; may be +inf
  double gamma0 = 0.0;
  double gamma0p = 0.0;
  bool quadratic = false;

  double linear_rate() const { return branch * beta; }
};

/// Solves the initial-value problem gamma(0)=gamma0, gamma'(0)=gamma0p on
/// [0, r_max]. When r_max is omitted it defaults to the first critical point
/// of the closed form (or +inf when the derivative never vanishes).
/// Throws SignChangeError when gamma' changes sign strictly inside (0, r_max).
ConeProfile from_initial(double beta, double k, double gamma0, double gamma0p,
                         std::optional<double> r_max = std::nullopt);

/// Increasing profile with a flat start: gamma(0)=gamma0, gamma'(0)=0,
/// gamma'>0 on (0, inf). Requires k < 0.
ConeProfile flat_start_profile(double beta, double k, double gamma0);

/// Increasing barrier on [0, d] with gamma(0)=0 and gamma'(d)=0; its value at
/// d bounds how far any admissible field can rise above its Dirichlet maximum.
/// Requires k >= 0 and d > 0.
ConeProfile lipschitz_majorant(double beta, double k, double d);

/// Decreasing barrier on [0, d] with gamma(0)=0, solving the equation at level
/// -k; seeds iterations from below. Requires k >= 0 and d > 0.
ConeProfile subsolution_minorant(double beta, double k, double d);

/// Point evaluation on [0, r_max]; throws std::domain_error outside it.
double eval(const ConeProfile& p, double t);
double eval_prime(const ConeProfile& p, double t);

/// -gamma''(t) - beta*|gamma'(t)| - k; vanishes identically on the branch.
double ode_residual(const ConeProfile& p, double t);

/// Sup-norm and interior-slope bounds derived from the increasing barrier:
/// c1_bound = gamma(diam), c2_bound = max{1, osc/gamma(margin)} * gamma'(0).
struct AprioriConstants {
  double c1_bound = 0.0;
  double c2_bound = 0.0;
};
AprioriConstants apriori_constants(double beta, double k, double diam, double margin,
                                   double osc);

/// Both sides of the ball-increment inequality
///   a_plus*(gamma(r1)-gamma(0)) - a_minus*(gamma(r2)-gamma(r1)) <= eps*k,
/// r1 = min(eps, r), r2 = min(2 eps, r). Equality holds whenever r >= 2 eps;
/// the clipped case (gamma'(r)=0, r < 2 eps) is strictly below. Requires an
/// increasing profile and either r >= 2 eps or gamma'(r) = 0.
struct FdIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};
FdIdentity fd_identity_check(const ConeProfile& p, double eps, double r);

}  // namespace epsball
