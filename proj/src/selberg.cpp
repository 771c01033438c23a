#include "deltabound/selberg.hpp"

#include <algorithm>
#include <cmath>

#include "deltabound/errors.hpp"

namespace deltabound {

GeodesicLengthSpectrum::GeodesicLengthSpectrum(std::vector<double> lengths)
    : lengths_(std::move(lengths)) {
  for (double l : lengths_)
    if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("geodesic lengths must be finite and > 0");
  std::sort(lengths_.begin(), lengths_.end());
}

double GeodesicLengthSpectrum::systole() const {
  if (lengths_.empty()) throw DomainError("empty length spectrum has no systole");
  return lengths_.front();
}

namespace {

void check_positive(double ell, double tol) {
  if (!(ell > 0.0)) throw DomainError("geodesic length must be > 0");
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
}

constexpr int kMaxTerms = 10'000'000;

}  // namespace

TruncatedValue z_gamma(double ell_gamma, double s, double tol) {
  check_positive(ell_gamma, tol);
  if (!(s > 0.0)) throw DomainError("s must be > 0");
  // After N factors, -log of the remaining product is at most
  //   sum_{n >= N} x_n / (1 - x_n) <= x_N / ((1 - x_N)(1 - e^{-l})),  x_n = e^{-(s+n) l},
  // and the product itself is < 1, so that bound also controls the absolute error.
  const double ratio = -std::expm1(-ell_gamma);
  double log_prod = 0.0;
  int n = 0;
  for (;; ++n) {
    const double x = std::exp(-(s + n) * ell_gamma);
    const double tail = x / ((1.0 - x) * ratio);
    if (tail < tol || n >= kMaxTerms) {
      const double value = std::exp(log_prod);
      return {value, value * -std::expm1(-tail), n};
    }
    log_prod += std::log1p(-x);
  }
}

TruncatedValue z_log_deriv_at_1(double ell_gamma, double tol) {
  check_positive(ell_gamma, tol);
  // Terms l x_n / (1 - x_n) with x_n = e^{-(1+n) l}; the tail from N is bounded
  // by l x_N / ((1 - x_N)(1 - e^{-l})).
  const double ratio = -std::expm1(-ell_gamma);
  double sum = 0.0;
  int n = 0;
  for (;; ++n) {
    const double x = std::exp(-(1.0 + n) * ell_gamma);
    const double tail = ell_gamma * x / ((1.0 - x) * ratio);
    if (tail < tol || n >= kMaxTerms) return {sum, tail, n};
    sum += ell_gamma * x / -std::expm1(-(1.0 + n) * ell_gamma);
  }
}

int pi_x(const GeodesicLengthSpectrum& spectrum, double u) {
  if (!(u > 1.0)) throw DomainError("pi_x requires u > 1");
  const double log_u = std::log(u);
  const auto& l = spectrum.lengths();
  return static_cast<int>(std::lower_bound(l.begin(), l.end(), log_u) - l.begin());
}

double trace_to_length(double abs_trace) {
  if (!(abs_trace >= 2.0)) throw DomainError("trace_to_length requires |tr| >= 2");
  return 2.0 * std::acosh(abs_trace / 2.0);
}

int n_geo_window(const GeodesicLengthSpectrum& spectrum, double lo, double hi) {
  if (!(lo >= 0.0) || !(lo < hi)) throw DomainError("n_geo_window requires 0 <= lo < hi");
  const auto& l = spectrum.lengths();
  auto first = std::upper_bound(l.begin(), l.end(), lo);
  auto last = std::lower_bound(l.begin(), l.end(), hi);
  return last > first ? static_cast<int>(last - first) : 0;
}

}  // namespace deltabound
