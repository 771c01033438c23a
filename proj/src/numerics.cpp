#include "deltabound/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "deltabound/errors.hpp"

namespace deltabound {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw DomainError("integrand is not finite at x = " + std::to_string(x));
  return y;
}

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::fabs(kronrod - gauss)};
}

double target(const QuadratureSpec& spec, double value, double reserved) {
  return std::max(spec.abs_tol, spec.rel_tol * std::fabs(value)) - reserved;
}

// Adaptive bisection of the worst panel. `reserved` is error budget already
// spent elsewhere (the truncation tail).
QuadratureResult adapt(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                       double reserved) {
  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double value = first.value;
  double error = first.error;
  panels.push(first);
  int used = 1;

  auto summarize = [&]() {
    QuadratureResult r;
    std::priority_queue<Panel> copy = panels;
    while (!copy.empty()) {
      r.value += copy.top().value;
      r.error_estimate += copy.top().error;
      copy.pop();
    }
    r.subdivisions_used = used;
    r.truncation_point = b;
    return r;
  };

  while (error > target(spec, value, reserved)) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (used >= spec.max_subdivisions || !(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("quadrature did not reach the requested accuracy within " +
                                 std::to_string(spec.max_subdivisions) + " subdivisions",
                             summarize());
    }
    panels.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++used;
  }
  QuadratureResult r = summarize();
  if (r.error_estimate > target(spec, r.value, reserved)) {
    // Running sums drifted below the target; the exact sums did not.
    throw ConvergenceError("quadrature error budget not met after summation", r);
  }
  return r;
}

// Smallest (up to bisection) R >= lo with tail(R) <= limit.
double find_truncation(const TailBound& tail, double lo, double limit) {
  double step = 1.0;
  double hi = lo + step;
  double prev = lo;
  int doublings = 0;
  while (!(tail(hi) <= limit)) {
    prev = hi;
    step *= 2.0;
    hi = lo + step;
    if (++doublings > 40)
      throw DomainError("integrand tail bound does not decay; cannot truncate");
  }
  for (int i = 0; i < 30; ++i) {
    const double mid = 0.5 * (prev + hi);
    if (tail(mid) <= limit) {
      hi = mid;
    } else {
      prev = mid;
    }
  }
  return hi;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
  if (!(tail_cutoff > 0.0 && tail_cutoff < 1.0))
    throw DomainError("QuadratureSpec: tail_cutoff must lie in (0, 1)");
}

double chebyshev_t2(double r) { return 2.0 * r * r - 1.0; }

double li(double u) {
  if (!(u > 1.0)) throw DomainError("li(u) requires u > 1 (integrand singular at 1)");
  if (u == 2.0) return 0.0;
  // xi = e^x turns the integrand into e^x / x on [log 2, log u].
  QuadratureSpec spec;
  spec.abs_tol = 1e-300;
  spec.rel_tol = 1e-14;
  spec.max_subdivisions = 5000;
  const Integrand f = [](double x) { return std::exp(x) / x; };
  const double lo = std::numbers::ln2;
  const double hi = std::log(u);
  if (hi > lo) return integrate(f, lo, hi, spec).value;
  return -integrate(f, hi, lo, spec).value;
}

double gauss_tail(double x) { return 0.5 * std::sqrt(std::numbers::pi) * std::erfc(x); }

double dist_hyp(std::complex<double> z, std::complex<double> w) {
  if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
    throw DomainError("dist_hyp: points must lie in the upper half-plane (Im > 0)");
  const double delta = std::norm(z - w) / (2.0 * z.imag() * w.imag());
  // arcosh(1 + d) = log1p(d + sqrt(d (2 + d))), accurate for small d.
  return std::log1p(delta + std::sqrt(delta * (2.0 + delta)));
}

double sqrt_sinh(double x) {
  if (x < 20.0) return std::sqrt(std::sinh(x));
  return std::exp(0.5 * x) * std::sqrt(0.5 * (1.0 - std::exp(-2.0 * x)));
}

double log_cosh(double x) {
  const double ax = std::fabs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return QuadratureResult{0.0, 0.0, 0, b};
  return adapt(f, a, b, spec, 0.0);
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, const TailBound& tail,
                                       const QuadratureSpec& spec) {
  spec.validate();
  const double limit = spec.tail_cutoff * spec.abs_tol;
  const double cut = find_truncation(tail, a, limit);
  const double tail_err = tail(cut);
  QuadratureResult r = adapt(f, a, cut, spec, tail_err);
  r.error_estimate += tail_err;
  return r;
}

QuadratureResult integrate_singular(const Integrand& numerator, double rho,
                                    const TailBound& weighted_tail, const QuadratureSpec& spec) {
  spec.validate();
  if (!(rho > 0.0)) throw DomainError("integrate_singular: requires rho > 0");
  const double log4 = 2.0 * std::numbers::ln2;
  const TailBound tail = [&](double r) {
    if (r < rho + log4) return std::numeric_limits<double>::infinity();
    return 2.0 * weighted_tail(r);
  };
  const double limit = spec.tail_cutoff * spec.abs_tol;
  const double cut = find_truncation(tail, rho, limit);
  const double tail_err = tail(cut);

  // cosh(rho + u^2) - cosh(rho) = 2 sinh(rho + w) sinh(w), w = u^2 / 2, dr = 2u du.
  const Integrand h = [&](double u) {
    const double w = 0.5 * u * u;
    const double ratio = w > 0.0 ? w / std::sinh(w) : 1.0;
    return numerator(rho + u * u) * 2.0 * std::sqrt(ratio) / sqrt_sinh(rho + w);
  };
  QuadratureResult r = adapt(h, 0.0, std::sqrt(cut - rho), spec, tail_err);
  r.error_estimate += tail_err;
  r.truncation_point = cut;
  return r;
}

}  // namespace deltabound
