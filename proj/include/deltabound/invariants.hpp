#pragma once

#include <optional>
#include <string>
#include <variant>

namespace deltabound {

/// paper_faithful replays the published crude constants; tight keeps exact
/// intermediate values and the sharpest substitutions available.
enum class Mode { paper_faithful, tight };

std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

/// Basic hyperbolic invariants of a compact Riemann surface of genus >= 2.
struct SurfaceInvariants {
  int genus = 2;
  double systole = 1.0;   ///< length of the shortest closed geodesic
  double lambda1 = 0.1;   ///< smallest nonzero Laplace eigenvalue
  std::optional<int> n_ev;        ///< #{eigenvalues in [0, 1/4)}
  std::optional<int> n_geo5;      ///< #{primitive geodesics with length < 5}
  std::optional<double> diameter;

  /// Throws DomainError naming the violated precondition.
  void validate() const;
  double volume() const;  ///< 4 pi (g - 1)
};

struct TrivialCover {};
struct UnramifiedCover {};
/// Ramification distances: r0 = min(systole, min pairwise distance),
/// R0 = max(systole, max pairwise distance) over the ramification locus.
struct RamifiedCover {
  double r0;
  double big_r0;
};

using CoveringKind = std::variant<TrivialCover, UnramifiedCover, RamifiedCover>;

std::string kind_name(const CoveringKind& k);

struct CoveringScenario {
  SurfaceInvariants base;
  SurfaceInvariants cover;
  CoveringKind kind = TrivialCover{};

  void validate() const;
};

/// (1/2) min(lambda1, 7/64)
double lambda_x(double lambda1);

/// 1/2 + sqrt(1/4 - lambda1) for lambda1 < 1/4; clamped to 1/2 above.
double s_small(double lambda1);

}  // namespace deltabound
