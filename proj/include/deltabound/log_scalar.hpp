#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace deltabound {

/// Real number stored as sign and natural log of the magnitude.
///
/// Bound expressions such as g * exp(8 pi g / l) leave the binary64 range for
/// moderate genus; carrying log|x| keeps every intermediate finite. Products
/// and quotients are exact in log space (a single addition of logs); sums use
/// the usual log-sum-exp rewrite.
class LogScalar {
 public:
  constexpr LogScalar() = default;

  static LogScalar from_double(double x);
  /// sign * exp(log_magnitude); sign 0 yields zero regardless of the magnitude.
  static LogScalar from_log(double log_magnitude, int sign = 1);
  /// exp(x) without ever forming it in floating point.
  static LogScalar exp(double x) { return from_log(x, 1); }
  static LogScalar zero() { return LogScalar{}; }

  int sign() const { return sign_; }
  double log_magnitude() const { return log_mag_; }
  bool is_zero() const { return sign_ == 0; }

  /// Natural log of the value; requires a positive value.
  double log() const;
  double log10() const;
  /// Conversion to binary64; overflows to +/-inf and underflows to 0 like std::exp.
  double to_double() const;

  /// Scientific notation with `significant` digits, e.g. "3.95121e+221".
  std::string to_decimal(int significant = 6) const;
  static LogScalar parse_decimal(std::string_view text);

  LogScalar operator-() const;
  LogScalar& operator+=(const LogScalar& rhs);
  LogScalar& operator-=(const LogScalar& rhs);
  LogScalar& operator*=(const LogScalar& rhs);
  LogScalar& operator/=(const LogScalar& rhs);

  friend LogScalar operator+(LogScalar a, const LogScalar& b) { return a += b; }
  friend LogScalar operator-(LogScalar a, const LogScalar& b) { return a -= b; }
  friend LogScalar operator*(LogScalar a, const LogScalar& b) { return a *= b; }
  friend LogScalar operator/(LogScalar a, const LogScalar& b) { return a /= b; }

  friend LogScalar operator*(LogScalar a, double b) { return a *= from_double(b); }
  friend LogScalar operator*(double a, LogScalar b) { return b *= from_double(a); }
  friend LogScalar operator/(LogScalar a, double b) { return a /= from_double(b); }
  friend LogScalar operator+(LogScalar a, double b) { return a += from_double(b); }
  friend LogScalar operator+(double a, const LogScalar& b) { return from_double(a) += b; }

  /// |x|^p carrying the sign of x only for p == 1; requires x >= 0 otherwise.
  LogScalar pow(double p) const;

  friend std::partial_ordering operator<=>(const LogScalar& a, const LogScalar& b);
  friend bool operator==(const LogScalar& a, const LogScalar& b);

 private:
  int sign_ = 0;
  double log_mag_ = 0.0;
};

}  // namespace deltabound
