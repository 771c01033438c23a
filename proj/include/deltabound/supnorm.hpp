#pragma once

#include "deltabound/numerics.hpp"

namespace deltabound {

/// 352 pi: the constant produced by adding the three t0 = 10 closed forms.
double d2_exact();
/// 1.2e3: the rounded constant.
inline constexpr double kD2Rounded = 1.2e3;

struct BTerms {
  double b1;
  double b2;
  double b3;
  double sum() const { return b1 + b2 + b3; }
};

struct SupNormReport {
  double ell0 = 0.0;
  double t0 = 10.0;
  QuadratureResult quadrature_bound;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  /// 88 pi e^{3l/4} / (sinh^2(l/8) (1 - e^{-l/2})^{1/2})
  double aggregate = 0.0;
  double closed_form = 0.0;
  double d2_constant = 0.0;
};

/// Upper bound for sup(mu_can / mu_shyp) from the weight-1 kernel at heat time t0,
/// integrated against the lattice-point counting majorant of the base surface.
/// Valid for any t0 > 0. The error estimate accounts for the outer quadrature,
/// the inner kernel evaluations and the certified tail.
QuadratureResult s_x_quadrature_bound(double ell0, double t0, const QuadratureSpec& spec);
QuadratureResult s_x_quadrature_bound(double ell0, double t0 = 10.0);

/// Closed-form bounds for the three pieces at t0 = 10 (4 pi factor included).
BTerms b_terms_closed(double ell0);

/// 88 pi e^{3 l/4} / (sinh^2(l/8) (1 - e^{-l/2})^{1/2}), the sum of the b-term envelopes.
double b_aggregate(double ell0);

/// D2 e^{l/2} / (1 - e^{-l/4})^{5/2} with D2 = 352 pi, or 1.2e3 when `rounded`.
double s_x_closed(double ell0, bool rounded);

/// Closed bound for int_{l/4}^inf A1(t0; rho) w(rho) drho, general t0.
double a1_weighted_closed(double ell0, double t0);
/// The same integral evaluated by quadrature.
QuadratureResult a1_weighted_quadrature(double ell0, double t0, const QuadratureSpec& spec);

/// Counting-majorant density w(rho) = sinh(rho + l/2) / (2 sinh^2(l/8)).
double counting_weight(double ell0, double rho);

SupNormReport supnorm_report(double ell0, double t0, const QuadratureSpec& spec);

}  // namespace deltabound
