#include "deltabound/heat_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "deltabound/errors.hpp"

namespace deltabound {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog4 = 2.0 * std::numbers::ln2;

void check_point(KernelPoint p) {
  if (!(p.t > 0.0)) throw DomainError("heat kernel: t must be > 0");
  if (!(p.rho >= 0.0)) throw DomainError("heat kernel: rho must be >= 0");
}

// log T2(cosh(r/2) / cosh(rho/2)) for r >= rho, where the argument is >= 1.
double log_t2_ratio(double rho, double r) {
  const double log_x = log_cosh(0.5 * r) - log_cosh(0.5 * rho);
  return 2.0 * log_x + std::log(2.0 - std::exp(-2.0 * log_x));
}

// Shared driver: `with_t2` selects the weight-1 kernel.
QuadratureResult kernel(KernelPoint p, const QuadratureSpec& spec, bool with_t2) {
  check_point(p);
  const double t = p.t;
  const double rho = p.rho;
  const double log_pref = std::log(kernel_prefactor(t));

  const Integrand numerator = [=](double r) {
    if (r <= 0.0) return 0.0;
    double lg = log_pref + std::log(r) - r * r / (4.0 * t);
    if (with_t2) lg += log_t2_ratio(rho, r);
    return std::exp(lg);
  };

  // Bound for int_R^inf |numerator| e^{-r/2} dr.
  const TailBound weighted_tail = [=](double big_r) {
    if (!with_t2) {
      // r e^{-r^2/4t} e^{-r/2} <= e^{-R/2} r e^{-r^2/4t}
      return std::exp(log_pref - 0.5 * big_r - big_r * big_r / (4.0 * t)) * 2.0 * t;
    }
    // T2(X) <= 2 X^2 <= 8 e^{r - rho}; complete the square in r e^{r/2 - r^2/4t}.
    const double st = std::sqrt(t);
    const double v0 = big_r / (2.0 * st) - 0.5 * st;
    const double inner = 2.0 * st * (st * std::exp(-v0 * v0) + t * gauss_tail(v0));
    return std::sqrt(2.0) / std::pow(4.0 * kPi * t, 1.5) * 8.0 * std::exp(-rho) * inner;
  };

  if (rho > 0.0) return integrate_singular(numerator, rho, weighted_tail, spec);

  // rho = 0: r / sqrt(cosh r - 1) = r / (sqrt(2) sinh(r/2)) is bounded at 0.
  const Integrand direct = [=](double r) {
    return numerator(r) / (std::sqrt(2.0) * std::sinh(0.5 * r));
  };
  const TailBound tail = [=](double big_r) {
    if (big_r < kLog4) return std::numeric_limits<double>::infinity();
    return 2.0 * weighted_tail(big_r);
  };
  return integrate_to_infinity(direct, 0.0, tail, spec);
}

void check_appendix(double t, double rho, double r) {
  if (!(t > 0.0)) throw DomainError("appendix: t must be > 0");
  if (!(rho > 0.0)) throw DomainError("appendix: rho must be > 0");
  if (!(r >= rho)) throw DomainError("appendix: requires r >= rho");
}

}  // namespace

QuadratureSpec kernel_default_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-200;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 4000;
  spec.tail_cutoff = 0.1;
  return spec;
}

double kernel_prefactor(double t) {
  return std::sqrt(2.0) * std::exp(-0.25 * t) / std::pow(4.0 * kPi * t, 1.5);
}

QuadratureResult k0(KernelPoint p, const QuadratureSpec& spec) { return kernel(p, spec, false); }

QuadratureResult k1(KernelPoint p, const QuadratureSpec& spec) { return kernel(p, spec, true); }

K1UpperTerms k1_upper_terms(KernelPoint p) {
  if (!(p.t > 0.0)) throw DomainError("k1_upper_terms: t must be > 0");
  if (!(p.rho > 0.0))
    throw DomainError("k1_upper_terms: rho must be > 0 (the bound diverges as sinh(rho) -> 0)");
  const double t = p.t;
  const double rho = p.rho;
  const double st = std::sqrt(t);
  const double pi32 = std::pow(kPi, 1.5);
  K1UpperTerms terms{};
  terms.a1 = 17.0 * kernel_prefactor(t) * (rho + kLog4) * std::exp(-rho * rho / (4.0 * t)) /
             std::sqrt(std::sinh(rho));
  const double s = rho / (2.0 * st) + 0.5 * st;
  terms.a2 = 4.0 * std::sqrt(2.0) * std::exp(-s * s) / (pi32 * st);
  terms.a3 = 4.0 * std::sqrt(2.0) * std::exp(-rho) * gauss_tail(rho / (2.0 * st) - 0.5 * st) / pi32;
  return terms;
}

double appendix_f(double t, double rho, double r) {
  check_appendix(t, rho, r);
  const double x = std::cosh(0.5 * r) / std::cosh(0.5 * rho);
  return r * std::exp(-r * r / (4.0 * t)) * chebyshev_t2(x) / std::sinh(r);
}

AppendixGradient appendix_df(double t, double rho, double r) {
  const double f = appendix_f(t, rho, r);
  const double x = std::cosh(0.5 * r) / std::cosh(0.5 * rho);
  const double q = 2.0 * x * x / (2.0 * x * x - 1.0);
  AppendixGradient g{};
  g.d_rho = -f * q * std::tanh(0.5 * rho);
  g.d_r = f * (1.0 / r - r / (2.0 * t) + q * std::tanh(0.5 * r) - std::cosh(r) / std::sinh(r));
  return g;
}

double appendix_h(double rho, double r) {
  if (!(rho > 0.0)) throw DomainError("appendix_h: rho must be > 0");
  if (!(r >= rho)) throw DomainError("appendix_h: requires r >= rho");
  return std::tanh(0.5 * rho) * std::sinh(r) - std::sinh(rho) * std::tanh(0.5 * r);
}

}  // namespace deltabound
