#pragma once

#include <vector>

namespace deltabound {

/// Lengths of primitive closed geodesics, with multiplicity, ascending.
class GeodesicLengthSpectrum {
 public:
  GeodesicLengthSpectrum() = default;
  /// Sorts the input; throws DomainError on a nonpositive or non-finite length.
  explicit GeodesicLengthSpectrum(std::vector<double> lengths);

  const std::vector<double>& lengths() const { return lengths_; }
  bool empty() const { return lengths_.empty(); }
  std::size_t size() const { return lengths_.size(); }
  /// Shortest length; throws DomainError when empty.
  double systole() const;

 private:
  std::vector<double> lengths_;
};

/// A truncated series or product together with a certified bound on what was dropped.
struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms = 0;
};

/// prod_{n >= 0} (1 - e^{-(s+n) l}), truncated once the dropped factors move
/// the product by less than `tol`.
TruncatedValue z_gamma(double ell_gamma, double s, double tol = 1e-15);

/// Z'_gamma / Z_gamma at s = 1: sum_{n >= 0} l e^{-(1+n) l} / (1 - e^{-(1+n) l}).
TruncatedValue z_log_deriv_at_1(double ell_gamma, double tol = 1e-15);

/// #{l in spectrum : e^l < u}; requires u > 1.
int pi_x(const GeodesicLengthSpectrum& spectrum, double u);

/// 2 arcosh(|tr| / 2) for |tr| >= 2.
double trace_to_length(double abs_trace);

/// Number of lengths in the open window (lo, hi); requires 0 <= lo < hi.
int n_geo_window(const GeodesicLengthSpectrum& spectrum, double lo, double hi);

}  // namespace deltabound
