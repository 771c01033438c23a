#include "deltabound/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deltabound/errors.hpp"
#include "deltabound/heat_kernel.hpp"

namespace deltabound {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog4 = 2.0 * std::numbers::ln2;

void check_ell(double ell0) {
  if (!(ell0 > 0.0)) throw DomainError("supnorm: base systole ell0 must be > 0");
}

double sinh2(double x) {
  const double s = std::sinh(x);
  return s * s;
}

// sinh^2(3l/8) / sinh^2(l/8) - 1: weight of the boundary term at rho = l/4.
double boundary_factor(double ell0) { return sinh2(3.0 * ell0 / 8.0) / sinh2(ell0 / 8.0) - 1.0; }

struct GaussShift {
  double v0;
  double e;  // exp(-v0^2)
  double g;  // gauss_tail(v0)
};

GaussShift shift(double t, double big_r) {
  const double st = std::sqrt(t);
  const double v0 = big_r / (2.0 * st) - 0.5 * st;
  return {v0, std::exp(-v0 * v0), gauss_tail(v0)};
}

// int_R^inf A1(t; rho) w(rho) drho, bounded in closed form.
double a1_weighted_tail(double ell0, double t, double big_r) {
  const double st = std::sqrt(t);
  const GaussShift s = shift(t, big_r);
  const double lead = 17.0 * std::exp(0.5 * ell0) /
                      (std::pow(4.0 * kPi * t, 1.5) * sinh2(ell0 / 8.0) *
                       std::sqrt(-std::expm1(-2.0 * big_r)));
  return lead * 2.0 * st * (st * s.e + (t + kLog4) * s.g);
}

// int_R^inf (A1 + A2 + A3)(t; rho) w(rho) drho. Since k1 <= A1 + A2 + A3 pointwise,
// this certifies the discarded tail of the kernel integral.
double k1_weighted_tail(double ell0, double t, double big_r) {
  const double st = std::sqrt(t);
  const GaussShift s = shift(t, big_r);
  const double pi32 = std::pow(kPi, 1.5);
  const double scale = std::exp(0.5 * ell0) / sinh2(ell0 / 8.0);
  const double t2 = 4.0 * std::sqrt(2.0) * scale * s.g / pi32;
  const double t3 = 4.0 * std::sqrt(2.0) / pi32 * scale * st * (0.5 * s.e - s.v0 * s.g);
  return a1_weighted_tail(ell0, t, big_r) + t2 + t3;
}

}  // namespace

double d2_exact() { return 352.0 * kPi; }

double counting_weight(double ell0, double rho) {
  return std::sinh(rho + 0.5 * ell0) / (2.0 * sinh2(ell0 / 8.0));
}

QuadratureResult s_x_quadrature_bound(double ell0, double t0, const QuadratureSpec& spec) {
  check_ell(ell0);
  if (!(t0 > 0.0)) throw DomainError("supnorm: t0 must be > 0");
  spec.validate();
  QuadratureSpec inner = kernel_default_spec();
  inner.rel_tol = std::max(1e-13, 0.1 * spec.rel_tol);

  const double a = 0.25 * ell0;
  const Integrand integrand = [&](double rho) {
    return k1({t0, rho}, inner).value * counting_weight(ell0, rho);
  };
  const TailBound tail = [&](double big_r) { return k1_weighted_tail(ell0, t0, big_r); };
  QuadratureResult outer = integrate_to_infinity(integrand, a, tail, spec);

  const QuadratureResult k_at_a = k1({t0, a}, inner);
  const double bfac = boundary_factor(ell0);

  // Inner kernel errors are bounded by abs + rel * value at every node.
  const double weight_mass =
      (std::cosh(outer.truncation_point + 0.5 * ell0) - std::cosh(0.75 * ell0)) /
      (2.0 * sinh2(ell0 / 8.0));
  const double inner_err = inner.rel_tol * std::fabs(outer.value) + inner.abs_tol * weight_mass;

  QuadratureResult r;
  r.value = 4.0 * kPi * (outer.value + k_at_a.value * bfac);
  r.error_estimate =
      4.0 * kPi * (outer.error_estimate + inner_err + k_at_a.error_estimate * bfac);
  r.subdivisions_used = outer.subdivisions_used;
  r.truncation_point = outer.truncation_point;
  return r;
}

QuadratureResult s_x_quadrature_bound(double ell0, double t0) {
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 2000;
  return s_x_quadrature_bound(ell0, t0, spec);
}

BTerms b_terms_closed(double ell0) {
  check_ell(ell0);
  const double s2 = sinh2(ell0 / 8.0);
  const double q = std::sqrt(-std::expm1(-0.5 * ell0));
  BTerms b{};
  b.b1 = 4.0 * kPi * (3.0 * std::exp(0.5 * ell0) + std::exp(0.625 * ell0)) / (s2 * q);
  b.b2 = 4.0 * kPi * 3.0 * std::exp(0.75 * ell0) / s2;
  b.b3 = 4.0 * kPi * 15.0 * std::exp(0.75 * ell0) / s2;
  return b;
}

double b_aggregate(double ell0) {
  check_ell(ell0);
  return 88.0 * kPi * std::exp(0.75 * ell0) /
         (sinh2(ell0 / 8.0) * std::sqrt(-std::expm1(-0.5 * ell0)));
}

double s_x_closed(double ell0, bool rounded) {
  check_ell(ell0);
  const double d2 = rounded ? kD2Rounded : d2_exact();
  return d2 * std::exp(0.5 * ell0) / std::pow(-std::expm1(-0.25 * ell0), 2.5);
}

double a1_weighted_closed(double ell0, double t0) {
  check_ell(ell0);
  if (!(t0 > 0.0)) throw DomainError("supnorm: t0 must be > 0");
  const double q = std::sqrt(-std::expm1(-0.5 * ell0));
  return 34.0 * std::exp(0.5 * ell0) / (std::pow(4.0 * kPi, 1.5) * sinh2(ell0 / 8.0) * q) *
         ((1.0 + kLog4 / t0) * std::sqrt(kPi) + 2.0 / std::sqrt(t0));
}

QuadratureResult a1_weighted_quadrature(double ell0, double t0, const QuadratureSpec& spec) {
  check_ell(ell0);
  if (!(t0 > 0.0)) throw DomainError("supnorm: t0 must be > 0");
  const Integrand integrand = [&](double rho) {
    return k1_upper_terms({t0, rho}).a1 * counting_weight(ell0, rho);
  };
  const TailBound tail = [&](double big_r) { return a1_weighted_tail(ell0, t0, big_r); };
  return integrate_to_infinity(integrand, 0.25 * ell0, tail, spec);
}

SupNormReport supnorm_report(double ell0, double t0, const QuadratureSpec& spec) {
  SupNormReport rep;
  rep.ell0 = ell0;
  rep.t0 = t0;
  rep.quadrature_bound = s_x_quadrature_bound(ell0, t0, spec);
  const BTerms b = b_terms_closed(ell0);
  rep.b1 = b.b1;
  rep.b2 = b.b2;
  rep.b3 = b.b3;
  rep.aggregate = b_aggregate(ell0);
  rep.closed_form = s_x_closed(ell0, false);
  rep.d2_constant = d2_exact();
  return rep;
}

}  // namespace deltabound
