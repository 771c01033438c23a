#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "deltabound/errors.hpp"
#include "deltabound/supnorm.hpp"

using namespace deltabound;
using boost::multiprecision::cpp_bin_float_50;

namespace {

struct BOracle {
  double b1, b2, b3, aggregate, closed;
};

BOracle b_oracle(double ell) {
  const cpp_bin_float_50 l = ell;
  const cpp_bin_float_50 pi = boost::math::constants::pi<cpp_bin_float_50>();
  const cpp_bin_float_50 s2 = pow(sinh(l / 8), 2);
  const cpp_bin_float_50 q = sqrt(1 - exp(-l / 2));
  BOracle o{};
  o.b1 = static_cast<double>(4 * pi * (3 * exp(l / 2) + exp(5 * l / 8)) / (s2 * q));
  o.b2 = static_cast<double>(12 * pi * exp(3 * l / 4) / s2);
  o.b3 = static_cast<double>(60 * pi * exp(3 * l / 4) / s2);
  o.aggregate = static_cast<double>(88 * pi * exp(3 * l / 4) / (s2 * q));
  o.closed = static_cast<double>(352 * pi * exp(l / 2) / pow(1 - exp(-l / 4), cpp_bin_float_50(2.5)));
  return o;
}

double k1_oracle(double t, double rho) {
  boost::math::quadrature::exp_sinh<double> rule;
  const double pref = std::sqrt(2.0) * std::exp(-t / 4.0) / std::pow(4.0 * std::numbers::pi * t, 1.5);
  auto f = [&](double v) {
    const double r = std::acosh(std::cosh(rho) + v * v);
    if (!(r > 0.0) || !std::isfinite(r)) return 0.0;
    const double x = std::cosh(r / 2.0) / std::cosh(rho / 2.0);
    return 2.0 * r * std::exp(-r * r / (4.0 * t)) * (2.0 * x * x - 1.0) / std::sinh(r);
  };
  return pref * rule.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace

TEST_CASE("b-terms match a 50-digit evaluation") {
  for (double ell : {0.01, 0.1, 0.5, 1.0, 2.0, 2.77, 5.0, 20.0}) {
    const auto b = b_terms_closed(ell);
    const auto o = b_oracle(ell);
    CHECK(b.b1 == doctest::Approx(o.b1).epsilon(1e-12));
    CHECK(b.b2 == doctest::Approx(o.b2).epsilon(1e-12));
    CHECK(b.b3 == doctest::Approx(o.b3).epsilon(1e-12));
    CHECK(b_aggregate(ell) == doctest::Approx(o.aggregate).epsilon(1e-12));
    CHECK(s_x_closed(ell, false) == doctest::Approx(o.closed).epsilon(1e-12));
  }
}

TEST_CASE("each envelope dominates the previous one") {
  for (double ell = 0.02; ell < 30.0; ell *= 1.3) {
    const auto b = b_terms_closed(ell);
    CHECK(b.sum() <= b_aggregate(ell) * (1 + 1e-14));
    CHECK(b_aggregate(ell) <= s_x_closed(ell, false) * (1 + 1e-14));
    CHECK(s_x_closed(ell, false) <= s_x_closed(ell, true));
  }
}

TEST_CASE("D2 constant") {
  CHECK(d2_exact() == doctest::Approx(1105.8406140636072).epsilon(1e-15));
  CHECK(d2_exact() <= kD2Rounded);
}

TEST_CASE("quadrature bound agrees with an independent double integral") {
  const double ell = 1.0, t0 = 10.0;
  auto w = [ell](double rho) { return std::sinh(rho + ell / 2) / (2 * std::pow(std::sinh(ell / 8), 2)); };
  auto f = [&](double rho) { return k1_oracle(t0, rho) * w(rho); };
  const double interior = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, ell / 4, 90.0, 10, 1e-11);
  const double bfac = std::pow(std::sinh(3 * ell / 8) / std::sinh(ell / 8), 2) - 1.0;
  const double want = 4 * std::numbers::pi * (interior + k1_oracle(t0, ell / 4) * bfac);
  const auto got = s_x_quadrature_bound(ell, t0);
  CHECK(std::fabs(got.value - want) <= got.error_estimate + 1e-8 * want);
  CHECK(got.value + got.error_estimate <= s_x_closed(ell, false));
}

TEST_CASE("quadrature bound stays below the closed form across systoles") {
  for (double ell : {0.05, 0.3, 1.0, 3.0, 8.0}) {
    const auto r = s_x_quadrature_bound(ell);
    CHECK(r.value > 0.0);
    CHECK(r.value + r.error_estimate <= s_x_closed(ell, false));
  }
}

TEST_CASE("weighted A1 integral is below its closed bound") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  for (double ell : {0.1, 1.0, 4.0})
    for (double t0 : {1.0, 10.0}) {
      const auto q = a1_weighted_quadrature(ell, t0, spec);
      CHECK(q.value + q.error_estimate <= a1_weighted_closed(ell, t0));
    }
}

TEST_CASE("report fields are consistent") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  const auto rep = supnorm_report(1.5, 10.0, spec);
  CHECK(rep.b1 + rep.b2 + rep.b3 <= rep.aggregate);
  CHECK(rep.aggregate <= rep.closed_form);
  CHECK(rep.d2_constant == d2_exact());
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(b_terms_closed(0.0), DomainError);
  CHECK_THROWS_AS(s_x_closed(-1.0, false), DomainError);
  CHECK_THROWS_AS(s_x_quadrature_bound(1.0, 0.0), DomainError);
}
