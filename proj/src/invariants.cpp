#include "deltabound/invariants.hpp"

#include <cmath>
#include <numbers>

#include "deltabound/errors.hpp"

namespace deltabound {

std::string to_string(Mode m) { return m == Mode::tight ? "tight" : "paper_faithful"; }

Mode parse_mode(const std::string& text) {
  if (text == "paper" || text == "paper_faithful") return Mode::paper_faithful;
  if (text == "tight") return Mode::tight;
  throw UsageError("unknown mode '" + text + "' (expected paper or tight)");
}

void SurfaceInvariants::validate() const {
  if (genus < 2) throw DomainError("genus must be >= 2 (got " + std::to_string(genus) + ")");
  if (!(systole > 0.0)) throw DomainError("systole must be > 0");
  if (!(lambda1 > 0.0)) throw DomainError("lambda1 must be > 0");
  if (n_ev && (*n_ev < 1 || *n_ev > 4 * genus - 2))
    throw DomainError("n_ev must satisfy 1 <= n_ev <= 4 genus - 2");
  if (n_geo5 && *n_geo5 < 0) throw DomainError("n_geo5 must be >= 0");
  if (n_geo5 && systole >= 5.0 && *n_geo5 != 0)
    throw DomainError("n_geo5 must be 0 when the systole is >= 5");
  if (diameter && !(*diameter > 0.0)) throw DomainError("diameter must be > 0");
}

double SurfaceInvariants::volume() const { return 4.0 * std::numbers::pi * (genus - 1); }

std::string kind_name(const CoveringKind& k) {
  if (std::holds_alternative<TrivialCover>(k)) return "trivial";
  if (std::holds_alternative<UnramifiedCover>(k)) return "unramified";
  return "ramified";
}

void CoveringScenario::validate() const {
  base.validate();
  cover.validate();
  if (std::holds_alternative<UnramifiedCover>(kind)) {
    if (cover.genus < base.genus) throw DomainError("unramified cover: cover genus below base genus");
    if ((cover.genus - 1) % (base.genus - 1) != 0)
      throw DomainError("unramified cover: (g - 1) must be a multiple of (g0 - 1)");
    if (cover.systole < base.systole)
      throw DomainError("unramified cover: cover systole below base systole");
  }
  if (const auto* ram = std::get_if<RamifiedCover>(&kind)) {
    if (!(ram->r0 > 0.0) || !(ram->big_r0 > 0.0)) throw DomainError("ramified cover: r0, R0 must be > 0");
    if (ram->r0 > ram->big_r0) throw DomainError("ramified cover: requires r0 <= R0");
    if (ram->r0 > base.systole || base.systole > ram->big_r0)
      throw DomainError("ramified cover: requires r0 <= base systole <= R0");
    if (cover.genus <= base.genus) throw DomainError("ramified cover: cover genus must exceed base genus");
  }
}

double lambda_x(double lambda1) {
  if (!(lambda1 > 0.0)) throw DomainError("lambda1 must be > 0");
  return 0.5 * std::min(lambda1, 7.0 / 64.0);
}

double s_small(double lambda1) {
  if (!(lambda1 > 0.0)) throw DomainError("lambda1 must be > 0");
  if (lambda1 >= 0.25) return 0.5;
  return 0.5 + std::sqrt(0.25 - lambda1);
}

}  // namespace deltabound
