#pragma once

#include "deltabound/numerics.hpp"

namespace deltabound {

/// Heat time t and hyperbolic distance rho at which a kernel is evaluated.
struct KernelPoint {
  double t;
  double rho;
};

/// The three closed-form pieces whose sum dominates the weight-1 kernel.
struct K1UpperTerms {
  double a1;
  double a2;
  double a3;
  double sum() const { return a1 + a2 + a3; }
};

/// Quadrature settings used when nothing else is requested: tight relative
/// accuracy and an absolute floor far below any kernel value of interest.
QuadratureSpec kernel_default_spec();

/// sqrt(2) e^{-t/4} / (4 pi t)^{3/2}
double kernel_prefactor(double t);

/// Heat kernel for functions on the upper half-plane, K(t; rho).
QuadratureResult k0(KernelPoint p, const QuadratureSpec& spec = kernel_default_spec());

/// Heat kernel for weight-1 forms: the k0 integrand times T2(cosh(r/2) / cosh(rho/2)).
QuadratureResult k1(KernelPoint p, const QuadratureSpec& spec = kernel_default_spec());

/// Closed-form majorant of k1 split at r = rho + log 4. Requires rho > 0.
K1UpperTerms k1_upper_terms(KernelPoint p);

/// F(t; rho, r) = r e^{-r^2/4t} T2(cosh(r/2)/cosh(rho/2)) / sinh(r), for r >= rho > 0.
double appendix_f(double t, double rho, double r);

struct AppendixGradient {
  double d_rho;
  double d_r;
};

/// Closed-form partial derivatives of appendix_f.
AppendixGradient appendix_df(double t, double rho, double r);

/// h_rho(r) = tanh(rho/2) sinh(r) - sinh(rho) tanh(r/2); vanishes at r = rho.
double appendix_h(double rho, double r);

}  // namespace deltabound
