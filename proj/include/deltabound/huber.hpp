#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltabound/invariants.hpp"
#include "deltabound/log_scalar.hpp"

namespace deltabound {

/// 8 pi g / l, the diameter bound obtained from Chang's estimate and sinh(x) >= x.
double diameter_bound(int g, double ell);
/// 2 pi (g - 1) / sinh(l/4), Chang's sharper form.
double chang_diameter_bound(int g, double ell);
/// 4g - 2, Buser's bound for the number of eigenvalues in [0, 1/4).
int n_ev_bound(int g);

struct HuberOverrides {
  std::optional<int> n_ev;
  std::optional<double> diameter;
};

/// Every intermediate constant of the Huber chain. In paper_faithful mode the
/// fields hold the displayed upper bounds (A = 4g, C1 <= 4, C10 <= 5578, ...);
/// in tight mode they hold the exact defining expressions.
struct HuberBreakdown {
  Mode mode = Mode::paper_faithful;
  int genus = 2;
  double ell = 1.0;
  double s1 = 0.5;
  double diameter = 0.0;
  LogScalar a, b, c;
  double c1 = 0.0, c10 = 0.0;
  LogScalar c12, c13, c16, c17, c18;
  double c_mult = 0.0;  ///< c = e^{l/2}
  double mu = 0.0;      ///< l / 2
  LogScalar c19, c20, c21;
  double c22 = 0.0;
  LogScalar c_u;
  /// paper_faithful: 39512073856 g e^{8 pi g/l + l/2} / ((1-s1)(1-e^{-l/2})^2); tight: c_u.
  LogScalar final_bound;
};

HuberBreakdown huber_chain(int g, double ell, double lambda1, Mode mode,
                           const HuberOverrides& overrides = {});

/// D3 g e^{8 pi g/l + l/2} / ((1 - s1)(1 - e^{-l/2})^2).
LogScalar huber_closed(int g, double ell, double lambda1, double d3);

inline constexpr double kD3Exact = 39512073856.0;
inline constexpr double kD3Rounded = 1e11;

/// 1 / (1 + 1/log 2)
double c22_constant();
/// C22 r / log r - li(r), for r >= 2.
double c22_margin(double r);

/// One displayed inequality lhs <= rhs of the chain, evaluated at a grid point.
struct LinkCheck {
  std::string label;
  LogScalar lhs;
  LogScalar rhs;
  /// lhs <= rhs up to a relative slack.
  bool holds(double rel_slack = 1e-12) const;
  /// log(rhs) - log(lhs); nonnegative when the link holds.
  double log_margin() const;
};

/// Every link of the chain from exact definitions down to the final integer.
std::vector<LinkCheck> huber_link_audit(int g, double ell, double lambda1);

}  // namespace deltabound
