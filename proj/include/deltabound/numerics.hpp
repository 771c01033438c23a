#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace deltabound {

/// Accuracy contract for the adaptive integrators.
struct QuadratureSpec {
  double abs_tol = 1e-200;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  /// Fraction of abs_tol the certified truncation tail may consume.
  double tail_cutoff = 0.1;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  /// Upper limit actually integrated to (the finite endpoint for proper integrals).
  double truncation_point = 0.0;
};

/// Adaptive refinement exhausted max_subdivisions; carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;
/// R -> certified upper bound for a tail integral starting at R (may return +inf when R is too small).
using TailBound = std::function<double(double)>;

double chebyshev_t2(double r);

/// Logarithmic integral anchored at 2: li(u) = int_2^u dxi / log(xi); negative for u < 2.
double li(double u);

/// int_x^inf exp(-s^2) ds = sqrt(pi)/2 * erfc(x).
double gauss_tail(double x);

/// Hyperbolic distance on the upper half-plane.
double dist_hyp(std::complex<double> z, std::complex<double> w);

/// Adaptive Gauss-Kronrod (7/15) on a finite interval. The per-panel error is
/// the raw |K15 - G7| difference, with no heuristic rescaling.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// int_a^inf f, truncated at the first R whose `tail(R)` falls below
/// tail_cutoff * abs_tol. The tail bound is added to the error estimate.
QuadratureResult integrate_to_infinity(const Integrand& f, double a, const TailBound& tail,
                                       const QuadratureSpec& spec);

/// int_rho^inf numerator(r) / sqrt(cosh r - cosh rho) dr for rho > 0.
///
/// The substitution r = rho + u^2 removes the inverse square-root endpoint
/// singularity. `weighted_tail(R)` must bound int_R^inf |numerator(r)| e^{-r/2} dr
/// for R >= rho + log 4; there cosh r - cosh rho >= e^r / 4, so twice that
/// value certifies the discarded part of the integral.
QuadratureResult integrate_singular(const Integrand& numerator, double rho,
                                    const TailBound& weighted_tail, const QuadratureSpec& spec);

/// sqrt(sinh x) for x > 0 without overflow for large x.
double sqrt_sinh(double x);
/// log cosh x without overflow.
double log_cosh(double x);

}  // namespace deltabound
