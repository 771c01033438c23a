#pragma once

#include <string>
#include <vector>

namespace deltabound {

inline constexpr double kD1Exact = 876.0;
inline constexpr double kD1Rounded = 1e3;
inline constexpr double kD4Exact = 553802490730872.0;
inline constexpr double kD4Rounded = 1e15;

/// One exact-arithmetic re-derivation of a published constant.
struct ConstantCheck {
  std::string label;
  std::string derived;    ///< exact value (integer or reduced fraction) produced by the derivation
  std::string relation;   ///< "==" or "<="
  std::string published;  ///< the value it is compared against
  bool holds = false;
};

/// Re-derives every integer of the bound chain with arbitrary-precision
/// integers and rationals. Irrational inputs (pi, e, sqrt) enter only through
/// rational enclosures, so each "<=" below is a proof, not a float comparison.
std::vector<ConstantCheck> constant_ledger();

/// 6*144 + 2*6, the largest coefficient collected from the four term bounds.
long long derive_d1();
/// 924 * 42761980 + 4336.
long long derive_d3();
/// 876 * (1201^2 + 5 + 20 + 16 * D3).
long long derive_d4();

}  // namespace deltabound
