#include <doctest.h>

#include <cmath>
#include <random>

#include "deltabound/errors.hpp"
#include "deltabound/log_scalar.hpp"

using deltabound::LogScalar;

TEST_CASE("multiplication adds log magnitudes") {
  const auto a = LogScalar::from_double(3.0);
  const auto b = LogScalar::from_double(-7.0);
  const auto p = a * b;
  CHECK(p.sign() == -1);
  CHECK(p.log_magnitude() == doctest::Approx(std::log(21.0)).epsilon(1e-15));
}

TEST_CASE("products associate exactly in log space") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-500.0, 500.0);
  for (int i = 0; i < 100; ++i) {
    const auto a = LogScalar::exp(u(rng));
    const auto b = LogScalar::exp(u(rng));
    const auto c = LogScalar::exp(u(rng));
    const auto l = (a * b) * c;
    const auto r = a * (b * c);
    CHECK(std::fabs(l.log() - r.log()) <= 1e-12 * std::max(1.0, std::fabs(l.log())));
  }
}

TEST_CASE("same-sign sums dominate both summands") {
  for (double x : {-50.0, 0.0, 1.0, 700.0, 5000.0})
    for (double y : {-3.0, 2.0, 710.0, 5001.0}) {
      const auto s = LogScalar::exp(x) + LogScalar::exp(y);
      CHECK(s.log() >= std::max(x, y));
      CHECK(s.log() <= std::max(x, y) + std::log(2.0) + 1e-15);
    }
}

TEST_CASE("sums agree with double arithmetic in range") {
  const double xs[] = {1.5, -2.25, 1e-3, 123456.0, -0.5};
  for (double a : xs)
    for (double b : xs) {
      const double got = (LogScalar::from_double(a) + LogScalar::from_double(b)).to_double();
      CHECK(got == doctest::Approx(a + b).epsilon(1e-13));
      const double diff = (LogScalar::from_double(a) - LogScalar::from_double(b)).to_double();
      CHECK(diff == doctest::Approx(a - b).epsilon(1e-12));
    }
  CHECK((LogScalar::from_double(2.0) - LogScalar::from_double(2.0)).is_zero());
}

TEST_CASE("e^1000 round-trips without overflow") {
  const auto big = LogScalar::exp(1000.0);
  CHECK(std::isinf(big.to_double()));
  CHECK(big.log() == 1000.0);
  const std::string text = big.to_decimal(12);
  // e^1000 = 1.97007111401705e+434
  CHECK(text == "1.97007111402e+434");
  const auto back = LogScalar::parse_decimal(text);
  CHECK(back.log() == doctest::Approx(1000.0).epsilon(1e-13));
}

TEST_CASE("decimal strings are monotone") {
  double prev = -1e300;
  for (double l = -800.0; l < 800.0; l += 13.37) {
    const auto v = LogScalar::parse_decimal(LogScalar::exp(l).to_decimal(6));
    CHECK(v.log() > prev);
    prev = v.log();
  }
  CHECK(LogScalar::from_double(1234.5678).to_decimal(6) == "1.23457e+03");
  CHECK(LogScalar::from_double(-0.000999999999).to_decimal(3) == "-1.00e-03");
  CHECK(LogScalar::zero().to_decimal(6) == "0.00000e+00");
  CHECK_THROWS_AS(LogScalar::parse_decimal("12x"), deltabound::DomainError);
}

TEST_CASE("ordering and powers") {
  const auto a = LogScalar::from_double(-5.0);
  const auto b = LogScalar::zero();
  const auto c = LogScalar::exp(900.0);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a < c);
  CHECK(LogScalar::from_double(-2.0) > LogScalar::from_double(-3.0));
  CHECK(c.pow(0.5).log() == doctest::Approx(450.0));
  CHECK(LogScalar::from_double(4.0) == LogScalar::from_double(4.0));
  CHECK_THROWS_AS(LogScalar::from_double(-1.0).log(), deltabound::DomainError);
}
