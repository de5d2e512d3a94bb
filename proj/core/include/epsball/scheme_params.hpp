#pragma once

#include <utility>

namespace epsball {

/// Step length, bias, and the derived rates of the eps-ball scheme.
///
/// a_plus = beta/(exp(eps*beta) - 1) and a_minus = beta/(1 - exp(-eps*beta)),
/// both 1/eps at beta = 0. a_minus - a_plus = beta is an exact identity, so
/// a_minus is pinned to a_plus + beta rather than evaluated independently;
/// this keeps the identity exact in floating point for every (beta, eps).
/// p_plus = a_plus/(a_plus+a_minus) simplifies to 1/(1+exp(eps*beta)) and is
/// computed in that form.
///
/// In the scheme operator a_plus weights the backward slope S- and a_minus the
/// forward slope S+; with that pairing the exponential cone profiles solve the
/// lattice equation exactly and the fixed-point weight on the ball max,
/// p_minus = exp(eps*beta)/(1+exp(eps*beta)), exceeds 1/2 exactly when the
/// bias favors the maximizing side.
struct SchemeParams {
  double epsilon = 0.0;
  double beta = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;
  double p_plus = 0.0;       // weight of the ball min in the fixed-point form
  double p_minus = 0.0;      // weight of the ball max
  double source_scale = 0.0; // eps/(a_plus + a_minus)
};

/// Requires eps > 0. Switches to the exact beta = 0 value 1/eps when
/// |eps*beta| < 1e-8; elsewhere uses expm1 forms.
SchemeParams make_scheme_params(double beta, double eps);

/// Just the rate pair (a_plus, a_minus).
std::pair<double, double> coefficients(double beta, double eps);

}  // namespace epsball
