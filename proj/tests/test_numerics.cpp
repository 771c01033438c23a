#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "deltabound/errors.hpp"
#include "deltabound/numerics.hpp"

using namespace deltabound;
using boost::multiprecision::cpp_bin_float_50;

namespace {

// li(u) = Ei(log u) - Ei(log 2), with Ei(x) = gamma + log|x| + sum x^k/(k k!).
cpp_bin_float_50 ei_series(cpp_bin_float_50 x) {
  const cpp_bin_float_50 gamma("0.57721566490153286060651209008240243104215933593992");
  cpp_bin_float_50 term = 1, sum = 0;
  for (int k = 1; k < 400; ++k) {
    term *= x / k;
    const cpp_bin_float_50 add = term / k;
    sum += add;
    if (abs(add) < 1e-45 * abs(sum)) break;
  }
  return gamma + log(abs(x)) + sum;
}

double li_oracle(double u) {
  const cpp_bin_float_50 v = ei_series(log(cpp_bin_float_50(u))) - ei_series(log(cpp_bin_float_50(2)));
  return static_cast<double>(v);
}

// erfc-based tail from the Maclaurin series of erf.
double gauss_tail_oracle(double x) {
  cpp_bin_float_50 X = x, term = X, sum = X;
  for (int n = 1; n < 300; ++n) {
    term *= -X * X / n;
    sum += term / (2 * n + 1);
  }
  const cpp_bin_float_50 sqrt_pi = sqrt(boost::math::constants::pi<cpp_bin_float_50>());
  return static_cast<double>(sqrt_pi / 2 - sum);
}

}  // namespace

TEST_CASE("chebyshev_t2") {
  CHECK(chebyshev_t2(1.0) == 1.0);
  CHECK(chebyshev_t2(2.0) == 7.0);
  CHECK(chebyshev_t2(0.0) == -1.0);
}

TEST_CASE("li against the exponential-integral series") {
  CHECK(li(2.0) == 0.0);
  const double l5 = std::log(5.0);
  CHECK(li(l5) < 0.0);
  CHECK(li(l5) == doctest::Approx(li_oracle(l5)).epsilon(1e-12));
  CHECK(li(10.0) > 0.0);
  for (double u : {1.05, 1.5, 3.0, 10.0, 1e3, 1e6, 1e8})
    CHECK(li(u) == doctest::Approx(li_oracle(u)).epsilon(1e-11));
  CHECK_THROWS_AS(li(1.0), DomainError);
  CHECK_THROWS_AS(li(0.5), DomainError);
}

TEST_CASE("li is strictly increasing and negative below 2") {
  double prev = li(1.01);
  CHECK(prev < 0.0);
  for (double u = 1.1; u < 50.0; u *= 1.17) {
    const double cur = li(u);
    CHECK(cur > prev);
    if (u < 2.0) CHECK(cur < 0.0);
    prev = cur;
  }
}

TEST_CASE("gauss_tail") {
  const double sp = std::sqrt(std::numbers::pi);
  CHECK(gauss_tail(0.0) == doctest::Approx(sp / 2).epsilon(1e-15));
  CHECK(std::fabs(gauss_tail(-20.0) - sp) <= 1e-12);
  CHECK(gauss_tail(1.0) == doctest::Approx(gauss_tail_oracle(1.0)).epsilon(1e-14));
  CHECK(gauss_tail(2.5) == doctest::Approx(gauss_tail_oracle(2.5)).epsilon(1e-13));
  for (double x = -4.0; x <= 4.0; x += 0.37) CHECK(std::fabs(gauss_tail(x) + gauss_tail(-x) - sp) <= 1e-12);
  for (double x = -5.0; x < 5.0; x += 0.1) CHECK(gauss_tail(x + 0.1) < gauss_tail(x));
}

TEST_CASE("dist_hyp") {
  using C = std::complex<double>;
  CHECK(dist_hyp(C(0, 1), C(0, 1)) == 0.0);
  CHECK(dist_hyp(C(0, 1), C(0, 2)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(dist_hyp(C(0, 1), C(0, 2)) == doctest::Approx(std::acosh(1.25)).epsilon(1e-14));
  CHECK(dist_hyp(C(0, 1), C(1, 1)) == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(dist_hyp(C(0, 0), C(0, 1)), DomainError);
  CHECK_THROWS_AS(dist_hyp(C(0, 1), C(2, -1)), DomainError);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.05, 4.0);
  for (int i = 0; i < 500; ++i) {
    const C a(re(rng), im(rng)), b(re(rng), im(rng)), c(re(rng), im(rng));
    CHECK(dist_hyp(a, b) == doctest::Approx(dist_hyp(b, a)).epsilon(1e-13));
    CHECK(dist_hyp(a, c) <= dist_hyp(a, b) + dist_hyp(b, c) + 1e-10);
  }
}

TEST_CASE("integrate on a finite interval") {
  QuadratureSpec spec;
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, spec);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * 2.0));
  CHECK(r.subdivisions_used <= spec.max_subdivisions);
}

TEST_CASE("QuadratureSpec validation") {
  QuadratureSpec bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = {};
  bad.tail_cutoff = 1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = {};
  bad.max_subdivisions = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

namespace {

// Independent oracle for int_rho^inf g(r)/sqrt(cosh r - cosh rho) dr: with
// cosh r = cosh rho + v^2 the integral becomes 2 int_0^inf g(r(v)) / sinh r(v) dv,
// evaluated by Boost's exp-sinh rule.
template <class G>
double singular_oracle(G g, double rho) {
  boost::math::quadrature::exp_sinh<double> rule;
  auto f = [&](double v) {
    const double r = std::acosh(std::cosh(rho) + v * v);
    if (!(r > 0.0) || !std::isfinite(r)) return 0.0;
    return 2.0 * g(r) / std::sinh(r);
  };
  return rule.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace

TEST_CASE("integrate_singular agrees with a different substitution") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-11;

  SUBCASE("sinh(r) e^{-r}") {
    auto g = [](double r) { return std::sinh(r) * std::exp(-r); };
    // |g| e^{-r/2} <= e^{-r/2}/2, integrated from R.
    auto tail = [](double R) { return std::exp(-R / 2.0); };
    const auto got = integrate_singular(g, 1.0, tail, spec);
    const double want = singular_oracle(g, 1.0);
    CHECK(got.value > 0.0);
    CHECK(std::fabs(got.value - want) <= got.error_estimate + 1e-12 * want);
  }
  SUBCASE("Gaussian numerators") {
    for (double rho : {0.1, 1.0, 3.0})
      for (double t : {0.5, 2.0, 10.0}) {
        auto g = [t](double r) { return r * std::exp(-r * r / (4 * t)); };
        auto tail = [t](double R) { return 2.0 * t * std::exp(-R * R / (4 * t)); };
        const auto got = integrate_singular(g, rho, tail, spec);
        const double want = singular_oracle(g, rho);
        CHECK(std::fabs(got.value - want) <= got.error_estimate + 1e-11 * want);
      }
  }
  SUBCASE("zero numerator") {
    const auto got = integrate_singular([](double) { return 0.0; }, 1.0, [](double) { return 0.0; }, spec);
    CHECK(got.value == 0.0);
  }
  SUBCASE("rho must be positive") {
    CHECK_THROWS_AS(integrate_singular([](double) { return 1.0; }, 0.0, [](double) { return 0.0; }, spec), DomainError);
  }
}

TEST_CASE("a single subdivision either converges or reports failure") {
  QuadratureSpec spec;
  spec.max_subdivisions = 1;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-14;
  auto g = [](double r) { return r * std::exp(-r * r / 4.0); };
  auto tail = [](double R) { return 2.0 * std::exp(-R * R / 4.0); };
  const double want = singular_oracle(g, 1.0);
  try {
    const auto r = integrate_singular(g, 1.0, tail, spec);
    CHECK(std::fabs(r.value - want) <= r.error_estimate + 1e-12 * want);
    CHECK(r.subdivisions_used <= 1);
  } catch (const ConvergenceError& e) {
    CHECK(e.partial().subdivisions_used <= 1);
    CHECK(std::isfinite(e.partial().value));
  }
}

TEST_CASE("overflow-safe helpers") {
  CHECK(sqrt_sinh(1.0) == doctest::Approx(std::sqrt(std::sinh(1.0))).epsilon(1e-15));
  CHECK(std::isfinite(sqrt_sinh(1400.0)));
  CHECK(std::log(sqrt_sinh(1400.0)) == doctest::Approx(700.0 - 0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(log_cosh(0.5) == doctest::Approx(std::log(std::cosh(0.5))).epsilon(1e-15));
  CHECK(log_cosh(5000.0) == doctest::Approx(5000.0 - std::log(2.0)).epsilon(1e-15));
}
