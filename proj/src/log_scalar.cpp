#include "deltabound/log_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "deltabound/errors.hpp"

namespace deltabound {

namespace {

// log(e^a + e^b) for a >= b.
double log_add(double a, double b) { return a + std::log1p(std::exp(b - a)); }

// log(e^a - e^b) for a > b.
double log_sub(double a, double b) { return a + std::log1p(-std::exp(b - a)); }

}  // namespace

LogScalar LogScalar::from_double(double x) {
  if (std::isnan(x)) throw DomainError("LogScalar: NaN input");
  LogScalar r;
  if (x == 0.0) return r;
  r.sign_ = x > 0 ? 1 : -1;
  r.log_mag_ = std::log(std::fabs(x));
  return r;
}

LogScalar LogScalar::from_log(double log_magnitude, int sign) {
  if (std::isnan(log_magnitude)) throw DomainError("LogScalar: NaN log magnitude");
  LogScalar r;
  if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.log_mag_ = log_magnitude;
  return r;
}

double LogScalar::log() const {
  if (sign_ <= 0) throw DomainError("LogScalar::log of a nonpositive value");
  return log_mag_;
}

double LogScalar::log10() const { return log() / std::numbers::ln10; }

double LogScalar::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_mag_);
}

std::string LogScalar::to_decimal(int significant) const {
  significant = std::clamp(significant, 1, 17);
  const int decimals = significant - 1;
  char buf[64];
  if (sign_ == 0) {
    std::snprintf(buf, sizeof buf, "%.*fe+00", decimals, 0.0);
    return buf;
  }
  const double l10 = log_mag_ / std::numbers::ln10;
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  const double scale = std::pow(10.0, decimals);
  mantissa = std::round(mantissa * scale) / scale;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  std::snprintf(buf, sizeof buf, "%s%.*fe%+03lld", sign_ < 0 ? "-" : "", decimals, mantissa,
                static_cast<long long>(exponent));
  return buf;
}

LogScalar LogScalar::parse_decimal(std::string_view text) {
  const std::string s(text);
  const auto epos = s.find_first_of("eE");
  const std::string mant_str = s.substr(0, epos);
  char* end = nullptr;
  const double mantissa = std::strtod(mant_str.c_str(), &end);
  if (end == mant_str.c_str() || *end != '\0')
    throw DomainError("LogScalar: malformed decimal '" + s + "'");
  long long exponent = 0;
  if (epos != std::string::npos) {
    const std::string exp_str = s.substr(epos + 1);
    exponent = std::strtoll(exp_str.c_str(), &end, 10);
    if (end == exp_str.c_str() || *end != '\0')
      throw DomainError("LogScalar: malformed exponent in '" + s + "'");
  }
  if (mantissa == 0.0) return zero();
  return from_log(std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln10,
                  mantissa > 0 ? 1 : -1);
}

LogScalar LogScalar::operator-() const {
  LogScalar r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogScalar& LogScalar::operator+=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    log_mag_ = log_mag_ >= rhs.log_mag_ ? log_add(log_mag_, rhs.log_mag_)
                                        : log_add(rhs.log_mag_, log_mag_);
    return *this;
  }
  if (log_mag_ == rhs.log_mag_) return *this = zero();
  if (log_mag_ > rhs.log_mag_) {
    log_mag_ = log_sub(log_mag_, rhs.log_mag_);
  } else {
    log_mag_ = log_sub(rhs.log_mag_, log_mag_);
    sign_ = rhs.sign_;
  }
  return *this;
}

LogScalar& LogScalar::operator-=(const LogScalar& rhs) { return *this += -rhs; }

LogScalar& LogScalar::operator*=(const LogScalar& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) return *this = zero();
  sign_ *= rhs.sign_;
  log_mag_ += rhs.log_mag_;
  return *this;
}

LogScalar& LogScalar::operator/=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) throw DomainError("LogScalar: division by zero");
  if (sign_ == 0) return *this;
  sign_ *= rhs.sign_;
  log_mag_ -= rhs.log_mag_;
  return *this;
}

LogScalar LogScalar::pow(double p) const {
  if (sign_ == 0) {
    if (p <= 0) throw DomainError("LogScalar: 0 raised to a nonpositive power");
    return zero();
  }
  if (sign_ < 0 && p != 1.0) throw DomainError("LogScalar: negative base with non-unit power");
  return from_log(log_mag_ * p, sign_);
}

std::partial_ordering operator<=>(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::partial_ordering::equivalent;
  return a.sign_ > 0 ? a.log_mag_ <=> b.log_mag_ : b.log_mag_ <=> a.log_mag_;
}

bool operator==(const LogScalar& a, const LogScalar& b) {
  return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_mag_ == b.log_mag_);
}

}  // namespace deltabound
