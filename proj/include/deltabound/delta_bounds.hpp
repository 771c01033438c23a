#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltabound/invariants.hpp"
#include "deltabound/log_scalar.hpp"
#include "deltabound/numerics.hpp"

namespace deltabound {

/// zeta'(-1) = 1/12 - log A, A the Glaisher-Kinkelin constant.
inline constexpr long double kGlaisherA = 1.28242712910062263687534256886979172776768892732500L;
long double zeta_prime_minus_one();

struct AbcConstants {
  double a;
  double b;
  double c;
  double c_upper;  ///< 11 g + 10
};

AbcConstants abc_constants(int g);
/// c(g) written out as 2g(...) + 6 log vol + (...), for cross-checking the definition.
double c_expanded(int g);

struct EvalOptions {
  Mode mode = Mode::paper_faithful;
  /// Use the statement constants (1e3, 1.2e3, 1e11, 1e15) instead of the proof-exact ones.
  bool rounded = false;
  /// Heat time and quadrature used for the sup-norm bound in tight mode.
  double t0 = 10.0;
  QuadratureSpec supnorm_spec{1e-10, 1e-8, 2000, 0.1};
};

struct BoundTerm {
  std::string label;
  std::string source;
  LogScalar value;
};

struct BoundReport {
  std::string operation;
  LogScalar final;
  std::string decimal;
  std::vector<BoundTerm> terms;
  Mode mode = Mode::paper_faithful;
  bool rounded = false;
  std::optional<CoveringScenario> inputs;

  /// Returns the first term with this label; throws std::out_of_range if absent.
  const BoundTerm& term(const std::string& label) const;
};

double d1_constant(bool rounded);
double d4_constant(bool rounded);

/// Resolved inputs of the combined four-term bound.
struct Cor34Inputs {
  int genus;
  double systole;
  double lambda1;
  double s_x;
  LogScalar c_hub;
  LogScalar n_ev;
  LogScalar n_geo;
};

/// D1 (g + (g (S+1)^2 + C_Hub + N_ev)/lambda_X + (1 + 1/l) N_geo).
/// Missing n_ev falls back to 4g - 2; missing n_geo5 to n_ev + 3 C_Hub.
BoundReport cor_3_4(const SurfaceInvariants& inv, double s_x, LogScalar c_hub,
                    const EvalOptions& opts = {});
BoundReport cor_3_4(const Cor34Inputs& in, const EvalOptions& opts = {});
/// 2 pi (1 - 1/g) T5 + 6 T6 + 2 T7 + T8 for the four term bounds, before collecting into D1.
LogScalar cor_3_4_term_sum(const Cor34Inputs& in);

/// D4 g0 e^{8 pi g0/l0 + l0} / ((1 - e^{-l0/4})^5 (1 - s0)) * g / lambda_X.
BoundReport thm_6_1(const CoveringScenario& scenario, const EvalOptions& opts = {});
/// thm_6_1 for the trivial covering.
BoundReport cor_6_3(const SurfaceInvariants& inv, const EvalOptions& opts = {});
/// D4 g e^{8 pi g/r0 + g R0} / ((1 - e^{-r0/4})^5 lambda_X (1 - s)).
BoundReport cor_6_4(const CoveringScenario& scenario, const EvalOptions& opts = {});

enum class BelyiCase { belyi, belyi_and_congruence };
BelyiCase parse_belyi_case(const std::string& text);

/// 2 arcosh 2, the systole floor for surfaces defined over a number field.
double belyi_floor();
/// Base-surface factor simplified with l0 >= 2 arcosh 2 (and lambda1 >= 5/36 in the congruence case).
BoundReport remark_6_2(const SurfaceInvariants& inv0, BelyiCase which, const EvalOptions& opts = {});

struct ParshinInputs {
  double ell_xv;
  int g_xp;
  double lambda1_cover;
  /// Minimum of lambda (1 - s) over the moduli region; defaults to the value at lambda1_cover.
  std::optional<double> lambda_min;
  /// Request the simplified 1e17 form; requires ell_xv >= 2 arcosh 2.
  bool simplified = false;
};

/// Ramified bound with a one-point ramification locus: r0 = R0 = l.
BoundReport parshin_bound(const ParshinInputs& in, const EvalOptions& opts = {});

}  // namespace deltabound
