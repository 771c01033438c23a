#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "deltabound/errors.hpp"
#include "deltabound/heat_kernel.hpp"

using namespace deltabound;

namespace {

// Kernel integral rewritten with cosh r = cosh rho + v^2 and evaluated by exp-sinh.
double kernel_oracle(double t, double rho, bool weight1) {
  boost::math::quadrature::exp_sinh<double> rule;
  const double pref = std::sqrt(2.0) * std::exp(-t / 4.0) / std::pow(4.0 * std::numbers::pi * t, 1.5);
  auto f = [&](double v) {
    const double r = std::acosh(std::cosh(rho) + v * v);
    if (!(r > 0.0) || !std::isfinite(r)) return 0.0;
    double g = r * std::exp(-r * r / (4.0 * t));
    if (weight1) {
      const double x = std::cosh(r / 2.0) / std::cosh(rho / 2.0);
      g *= 2.0 * x * x - 1.0;
    }
    return 2.0 * g / std::sinh(r);
  };
  return pref * rule.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace

TEST_CASE("k0 and k1 agree with an independent quadrature") {
  for (double t : {0.5, 1.0, 3.0, 10.0})
    for (double rho : {0.05, 0.5, 1.0, 2.5, 6.0}) {
      const auto a = k0({t, rho});
      const auto b = k1({t, rho});
      CHECK(a.value == doctest::Approx(kernel_oracle(t, rho, false)).epsilon(1e-8));
      CHECK(b.value == doctest::Approx(kernel_oracle(t, rho, true)).epsilon(1e-8));
      CHECK(a.error_estimate <= 1e-9 * a.value + 1e-200);
    }
}

TEST_CASE("heat kernel has unit mass") {
  // int_H K(t; rho) dmu = 2 pi int_0^inf K(t; rho) sinh(rho) drho = 1.
  for (double t : {0.5, 1.0, 2.0}) {
    auto f = [t](double rho) { return 2.0 * std::numbers::pi * k0({t, rho}).value * std::sinh(rho); };
    const double mass = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, 12.0 * std::sqrt(t) + 4.0, 8, 1e-9);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("k0 is finite and positive at rho = 0") {
  const auto a = k0({1.0, 0.0});
  CHECK(a.value > 0.0);
  CHECK(a.value == doctest::Approx(k0({1.0, 1e-6}).value).epsilon(1e-5));
}

TEST_CASE("weight-1 kernel dominates the scalar one and is dominated by the closed pieces") {
  for (double t : {0.25, 1.0, 10.0, 40.0})
    for (double rho : {0.01, 0.3, 1.0, 4.0, 10.0}) {
      const double v0 = k0({t, rho}).value;
      const double v1 = k1({t, rho}).value;
      CHECK(v0 <= v1);
      const auto terms = k1_upper_terms({t, rho});
      CHECK(terms.a1 >= 0.0);
      CHECK(terms.a2 >= 0.0);
      CHECK(terms.a3 >= 0.0);
      CHECK(v1 <= terms.sum());
    }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(k0({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(k1({1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(k1_upper_terms({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(appendix_f(1.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(appendix_h(0.0, 1.0), DomainError);
}

TEST_CASE("appendix derivatives match finite differences") {
  const double h = 1e-6;
  for (double t : {0.5, 5.0})
    for (double rho : {0.2, 1.0, 3.0})
      for (double d : {0.1, 1.0, 4.0}) {
        const double r = rho + d;
        const auto g = appendix_df(t, rho, r);
        const double fr = (appendix_f(t, rho, r + h) - appendix_f(t, rho, r - h)) / (2 * h);
        const double fp = (appendix_f(t, rho + h, r) - appendix_f(t, rho - h, r)) / (2 * h);
        const double scale = std::fabs(appendix_f(t, rho, r)) + 1e-300;
        CHECK(std::fabs(g.d_r - fr) <= 1e-6 * std::max(scale, std::fabs(fr)));
        CHECK(std::fabs(g.d_rho - fp) <= 1e-6 * std::max(scale, std::fabs(fp)));
        CHECK(g.d_rho < 0.0);
      }
}

TEST_CASE("h_rho vanishes on the diagonal and grows") {
  for (double rho : {0.1, 1.0, 5.0}) {
    CHECK(std::fabs(appendix_h(rho, rho)) <= 1e-12 * std::sinh(rho));
    double prev = 0.0;
    for (double d = 0.1; d < 6.0; d += 0.1) {
      const double cur = appendix_h(rho, rho + d);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}
