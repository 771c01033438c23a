#include "deltabound/delta_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "deltabound/errors.hpp"
#include "deltabound/exact_constants.hpp"
#include "deltabound/huber.hpp"
#include "deltabound/supnorm.hpp"

namespace deltabound {

namespace {

using std::numbers::pi;
using L = LogScalar;

L lit(double x) { return L::from_double(x); }
L min(const L& a, const L& b) { return b < a ? b : a; }

// 1 / (1 - e^{-x})
L inv_one_minus_exp(double x) { return L::from_log(-std::log(-std::expm1(-x))); }

// log(5)^{3/4} / log(log 5)^{1/2}: the Huber-constant coefficient when counting
// geodesics of length below 5.
double geodesic_window_ratio() {
  const double l5 = std::log(5.0);
  return std::pow(l5, 0.75) / std::sqrt(std::log(l5));
}

void check_surface(const SurfaceInvariants& inv) { inv.validate(); }

BoundReport make_report(std::string op, const L& final, const EvalOptions& opts) {
  BoundReport r;
  r.operation = std::move(op);
  r.final = final;
  r.decimal = final.to_decimal(6);
  r.mode = opts.mode;
  r.rounded = opts.rounded;
  return r;
}

// D4 g e^{8 pi g/l + l} / ((1 - e^{-l/4})^5 (1 - s)) for one surface.
L base_factor(int g, double ell, double lambda1, double d4) {
  return lit(d4) * lit(g) * L::exp(8.0 * pi * g / ell + ell) * inv_one_minus_exp(ell / 4.0).pow(5.0) /
         (1.0 - s_small(lambda1));
}

// Sup-norm bound used by tight mode: the kernel quadrature when it succeeds,
// never worse than the closed form.
double tight_supnorm(double ell0, const EvalOptions& opts) {
  const double closed = s_x_closed(ell0, false);
  try {
    const auto q = s_x_quadrature_bound(ell0, opts.t0, opts.supnorm_spec);
    const double upper = q.value + q.error_estimate;
    if (std::isfinite(upper) && upper > 0.0) return std::min(upper, closed);
  } catch (const ConvergenceError&) {
  } catch (const DomainError&) {
  }
  return closed;
}

L tight_huber(const SurfaceInvariants& inv) {
  HuberOverrides o;
  o.n_ev = inv.n_ev;
  o.diameter = inv.diameter;
  return huber_chain(inv.genus, inv.systole, inv.lambda1, Mode::tight, o).final_bound;
}

L paper_huber(const SurfaceInvariants& inv, bool rounded) {
  return huber_closed(inv.genus, inv.systole, inv.lambda1, rounded ? kD3Rounded : kD3Exact);
}

L default_n_geo(double systole, const L& n_ev, const L& c_hub, Mode mode) {
  if (systole >= 5.0) return L::zero();
  const double coeff = mode == Mode::tight ? geodesic_window_ratio() : 3.0;
  return n_ev + lit(coeff) * c_hub;
}

}  // namespace

long double zeta_prime_minus_one() { return 1.0L / 12.0L - std::log(kGlaisherA); }

AbcConstants abc_constants(int g) {
  if (g < 2) throw DomainError("genus must be >= 2 (got " + std::to_string(g) + ")");
  const double z = static_cast<double>(zeta_prime_minus_one());
  const double a = -2.0 * g * std::log(pi) + 4.0 * g * std::log(2.0) + (g - 1) * (-24.0 * z + 1.0);
  const double b = (g - 1) * (4.0 * z - 0.5 + std::log(2.0 * pi));
  const double vol = 4.0 * pi * (g - 1);
  const double c = a - 6.0 * b + 2.0 * (g - 1) * std::log(4.0) + 6.0 * std::log(vol) - 2.0;
  return {a, b, c, 11.0 * g + 10.0};
}

double c_expanded(int g) {
  if (g < 2) throw DomainError("genus must be >= 2 (got " + std::to_string(g) + ")");
  const double z = static_cast<double>(zeta_prime_minus_one());
  const double vol = 4.0 * pi * (g - 1);
  return 2.0 * g * (-24.0 * z - 4.0 * std::log(pi) + std::log(2.0) + 2.0) + 6.0 * std::log(vol) +
         (48.0 * z + 6.0 * std::log(2.0 * pi) - 2.0 * std::log(4.0) - 6.0);
}

const BoundTerm& BoundReport::term(const std::string& label) const {
  for (const auto& t : terms)
    if (t.label == label) return t;
  throw std::out_of_range("no term labelled '" + label + "'");
}

double d1_constant(bool rounded) { return rounded ? kD1Rounded : kD1Exact; }
double d4_constant(bool rounded) { return rounded ? kD4Rounded : kD4Exact; }

LogScalar cor_3_4_term_sum(const Cor34Inputs& in) {
  const double lam = lambda_x(in.lambda1);
  const L g = lit(in.genus);
  const double ell = in.systole;
  const L hub_ev = in.c_hub + in.n_ev;
  const L t5 = lit(4.0 * pi) * g * lit((in.s_x + 1.0) * (in.s_x + 1.0)) / lam;
  const L t6 = lit(pi * pi / (6.0 * ell)) * in.n_geo + lit(144.0) * hub_ev / lam;
  const L t7 = lit(3.0 + 1.0 / ell) * in.n_geo + lit(6.0) * hub_ev / lam + lit(2.0);
  const L t8 = lit(11.0 * in.genus + 10.0);
  return lit(2.0 * pi * (1.0 - 1.0 / in.genus)) * t5 + lit(6.0) * t6 + lit(2.0) * t7 + t8;
}

BoundReport cor_3_4(const Cor34Inputs& in, const EvalOptions& opts) {
  if (in.genus < 2) throw DomainError("genus must be >= 2 (got " + std::to_string(in.genus) + ")");
  if (!(in.systole > 0.0)) throw DomainError("systole must be > 0");
  if (!(in.s_x > 0.0)) throw DomainError("sup-norm bound must be > 0");
  if (in.c_hub.sign() < 0 || in.n_ev.sign() < 0 || in.n_geo.sign() < 0)
    throw DomainError("C_Hub, N_ev and N_geo must be >= 0");
  const double lam = lambda_x(in.lambda1);
  const double ell = in.systole;
  const L g = lit(in.genus);
  const L hub_ev = in.c_hub + in.n_ev;
  const double s1 = in.s_x + 1.0;

  const L t5 = lit(4.0 * pi) * g * lit(s1 * s1) / lam;
  const L t6 = lit(pi * pi / (6.0 * ell)) * in.n_geo + lit(144.0) * hub_ev / lam;
  const L t7 = lit(3.0 + 1.0 / ell) * in.n_geo + lit(6.0) * hub_ev / lam + lit(2.0);
  const L t8 = lit(11.0 * in.genus + 10.0);
  const L arg = g + (g * lit(s1 * s1) + hub_ev) / lam + lit(1.0 + 1.0 / ell) * in.n_geo;
  const double d1 = d1_constant(opts.rounded);

  BoundReport r = make_report("cor_3_4", lit(d1) * arg, opts);
  r.terms = {
      {"integral_term", "Dirichlet integral bound 4 pi g (S+1)^2/lambda_X", t5},
      {"log_zeta_term", "log Z'(1) bound pi^2 N_geo/(6l) + 144 (C_Hub+N_ev)/lambda_X", t6},
      {"limit_term", "regularised limit bound (3+1/l) N_geo + 6 (C_Hub+N_ev)/lambda_X + 2", t7},
      {"c_term", "c(g) <= 11 g + 10", t8},
      {"weighted_sum", "2 pi (1-1/g) integral + 6 log_zeta + 2 limit + c", cor_3_4_term_sum(in)},
      {"argument", "g + (g (S+1)^2 + C_Hub + N_ev)/lambda_X + (1 + 1/l) N_geo", arg},
      {"D1", opts.rounded ? "rounded collected constant" : "exact collected constant", lit(d1)},
      {"S_X", "sup-norm bound", lit(in.s_x)},
      {"C_Hub", "Huber constant bound", in.c_hub},
      {"N_ev", "small eigenvalue count", in.n_ev},
      {"N_geo", "short geodesic count", in.n_geo},
  };
  return r;
}

BoundReport cor_3_4(const SurfaceInvariants& inv, double s_x, LogScalar c_hub, const EvalOptions& opts) {
  check_surface(inv);
  Cor34Inputs in{inv.genus, inv.systole, inv.lambda1, s_x, c_hub, lit(0.0), lit(0.0)};
  in.n_ev = lit(inv.n_ev ? *inv.n_ev : n_ev_bound(inv.genus));
  in.n_geo = inv.n_geo5 ? lit(*inv.n_geo5) : default_n_geo(inv.systole, in.n_ev, c_hub, opts.mode);
  return cor_3_4(in, opts);
}

BoundReport thm_6_1(const CoveringScenario& scenario, const EvalOptions& opts) {
  if (!std::holds_alternative<UnramifiedCover>(scenario.kind))
    throw UsageError("thm_6_1 requires an unramified covering (got " + kind_name(scenario.kind) + ")");
  scenario.validate();
  const auto& x0 = scenario.base;
  const auto& x = scenario.cover;
  const double d4 = d4_constant(opts.rounded);
  const double lam = lambda_x(x.lambda1);
  const L factor0 = base_factor(x0.genus, x0.systole, x0.lambda1, d4);
  const L paper = factor0 * lit(x.genus) / lam;

  // Proof-step inputs, each bounded in terms of the base surface.
  const L c_hub0 = paper_huber(x0, opts.rounded);
  const L n_geo0 = lit(4.0 * x0.genus) + lit(3.0) * c_hub0;
  std::vector<BoundTerm> steps = {
      {"systole_lower", "l_X >= l_X0", lit(x0.systole)},
      {"n_ev_upper", "N_ev,X <= 4 g_X", lit(4.0 * x.genus)},
      {"supnorm_upper", "S_X <= D2 e^{l0/2}/(1 - e^{-l0/4})^{5/2}", lit(s_x_closed(x0.systole, opts.rounded))},
      {"huber_base", "C_Hub,X0 <= D3 g0 e^{8 pi g0/l0 + l0/2}/((1-s0)(1-e^{-l0/2})^2)", c_hub0},
      {"huber_cover", "C_Hub,X <= g_X C_Hub,X0", lit(x.genus) * c_hub0},
      {"n_geo_base", "N_geo,X0 <= 4 g0 + 3 C_Hub,X0", n_geo0},
      {"n_geo_cover", "N_geo,X <= (5 g_X / l0) N_geo,X0", lit(5.0 * x.genus / x0.systole) * n_geo0},
      {"base_factor", "D4 g0 e^{8 pi g0/l0 + l0}/((1 - e^{-l0/4})^5 (1 - s0))", factor0},
      {"cover_factor", "g_X / lambda_X", lit(x.genus / lam)},
  };

  if (opts.mode == Mode::paper_faithful) {
    BoundReport r = make_report("thm_6_1", paper, opts);
    r.terms = std::move(steps);
    r.inputs = scenario;
    return r;
  }

  const double deg = static_cast<double>(x.genus - 1) / (x0.genus - 1);
  const double s_x = tight_supnorm(x0.systole, opts);
  const L hub0 = tight_huber(x0);
  const L hub = min(tight_huber(x), lit(deg) * hub0);
  const L n_ev = lit(x.n_ev ? *x.n_ev : n_ev_bound(x.genus));
  L n_geo;
  if (x.n_geo5) {
    n_geo = lit(*x.n_geo5);
  } else if (x.systole >= 5.0) {
    n_geo = L::zero();
  } else {
    const L n_ev0 = lit(x0.n_ev ? *x0.n_ev : n_ev_bound(x0.genus));
    const L geo0 = x0.n_geo5 ? lit(*x0.n_geo5) : default_n_geo(x0.systole, n_ev0, hub0, Mode::tight);
    n_geo = lit(5.0 * deg / x0.systole) * geo0;
  }
  BoundReport composite =
      cor_3_4(Cor34Inputs{x.genus, x.systole, x.lambda1, s_x, hub, n_ev, n_geo}, opts);
  BoundReport r = make_report("thm_6_1", min(composite.final, paper), opts);
  r.terms = std::move(composite.terms);
  r.terms.push_back({"composite", "four-term bound with tight inputs", composite.final});
  r.terms.push_back({"closed_form", "D4 base factor times g_X / lambda_X", paper});
  r.inputs = scenario;
  return r;
}

BoundReport cor_6_3(const SurfaceInvariants& inv, const EvalOptions& opts) {
  check_surface(inv);
  const double d4 = d4_constant(opts.rounded);
  const double lam = lambda_x(inv.lambda1);
  const L paper = base_factor(inv.genus, inv.systole, inv.lambda1, d4) / lam;
  CoveringScenario echo{inv, inv, TrivialCover{}};

  if (opts.mode == Mode::paper_faithful) {
    BoundReport r = make_report("cor_6_3", paper, opts);
    r.terms = {
        {"supnorm_upper", "S_X <= D2 e^{l/2}/(1 - e^{-l/4})^{5/2}", lit(s_x_closed(inv.systole, opts.rounded))},
        {"huber", "C_Hub,X <= D3 g e^{8 pi g/l + l/2}/((1-s)(1-e^{-l/2})^2)", paper_huber(inv, opts.rounded)},
        {"lambda_X", "(1/2) min(lambda1, 7/64)", lit(lam)},
        {"one_minus_s", "1 - s_1", lit(1.0 - s_small(inv.lambda1))},
    };
    r.inputs = echo;
    return r;
  }

  const double s_x = tight_supnorm(inv.systole, opts);
  const L hub = tight_huber(inv);
  BoundReport composite = cor_3_4(inv, s_x, hub, opts);
  BoundReport r = make_report("cor_6_3", min(composite.final, paper), opts);
  r.terms = std::move(composite.terms);
  r.terms.push_back({"composite", "four-term bound with tight inputs", composite.final});
  r.terms.push_back({"closed_form", "D4 g e^{8 pi g/l + l}/((1 - e^{-l/4})^5 lambda_X (1 - s))", paper});
  r.inputs = echo;
  return r;
}

BoundReport cor_6_4(const CoveringScenario& scenario, const EvalOptions& opts) {
  const auto* ram = std::get_if<RamifiedCover>(&scenario.kind);
  if (!ram) throw UsageError("cor_6_4 requires a ramified covering (got " + kind_name(scenario.kind) + ")");
  scenario.validate();
  const auto& x = scenario.cover;
  const int g = x.genus;
  const double r0 = ram->r0;
  const double big_r0 = ram->big_r0;
  const double lam = lambda_x(x.lambda1);
  const L paper = lit(d4_constant(opts.rounded)) * lit(g) * L::exp(8.0 * pi * g / r0 + g * big_r0) *
                  inv_one_minus_exp(r0 / 4.0).pow(5.0) / (lam * (1.0 - s_small(x.lambda1)));
  std::vector<BoundTerm> steps = {
      {"systole_lower", "l_X >= r0", lit(r0)},
      {"systole_upper", "l_X <= deg R0 <= g_X R0", lit(g * big_r0)},
      {"lambda_X", "(1/2) min(lambda1, 7/64)", lit(lam)},
      {"one_minus_s", "1 - s_1", lit(1.0 - s_small(x.lambda1))},
  };

  if (opts.mode == Mode::paper_faithful) {
    BoundReport r = make_report("cor_6_4", paper, opts);
    r.terms = std::move(steps);
    r.inputs = scenario;
    return r;
  }

  if (x.systole < r0 || x.systole > g * big_r0)
    throw DomainError("cover systole must lie in [r0, g_X R0]");
  BoundReport inner = cor_6_3(x, opts);
  BoundReport r = make_report("cor_6_4", min(inner.final, paper), opts);
  r.terms = std::move(steps);
  r.terms.push_back({"cover_bound", "single-surface bound on the cover", inner.final});
  r.terms.push_back({"closed_form", "D4 g e^{8 pi g/r0 + g R0}/((1 - e^{-r0/4})^5 lambda_X (1 - s))", paper});
  r.inputs = scenario;
  return r;
}

BelyiCase parse_belyi_case(const std::string& text) {
  if (text == "belyi") return BelyiCase::belyi;
  if (text == "belyi_and_congruence") return BelyiCase::belyi_and_congruence;
  throw UsageError("unknown case '" + text + "' (expected belyi or belyi_and_congruence)");
}

double belyi_floor() { return 2.0 * std::acosh(2.0); }

namespace {

void check_belyi_floor(double ell) {
  const double floor = belyi_floor();
  if (ell < floor * (1.0 - 1e-12)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "systole %.10g is below the Belyi floor 2 arcosh 2 = %.10g", ell, floor);
    throw DomainError(buf);
  }
}

}  // namespace

BoundReport remark_6_2(const SurfaceInvariants& inv0, BelyiCase which, const EvalOptions& opts) {
  check_surface(inv0);
  check_belyi_floor(inv0.systole);
  const int g0 = inv0.genus;
  const double ell0 = inv0.systole;
  const L exact = base_factor(g0, ell0, inv0.lambda1, kD4Exact);
  const L shape = lit(g0) * L::exp(10.0 * g0 + ell0);
  std::vector<BoundTerm> terms = {{"base_factor", "D4 g0 e^{8 pi g0/l0 + l0}/((1 - e^{-l0/4})^5 (1 - s0))", exact}};
  L simplified;
  if (which == BelyiCase::belyi) {
    const L inv_s = lit(1.0 / (1.0 - s_small(inv0.lambda1)));
    const L forty = lit(40.0 * kD4Exact) * shape * inv_s;
    const L rounded = lit(1e17) * shape * inv_s;
    terms.push_back({"forty_d4", "40 D4 g0 e^{10 g0 + l0}/(1 - s0)", forty});
    terms.push_back({"rounded", "1e17 g0 e^{10 g0 + l0}/(1 - s0)", rounded});
    simplified = opts.rounded ? rounded : forty;
  } else {
    if (inv0.lambda1 < 5.0 / 36.0 * (1.0 - 1e-12))
      throw DomainError("congruence case requires lambda1 >= 5/36");
    const L exact240 = lit(240.0 * kD4Exact) * shape;
    const L rounded = lit(1e18) * shape;
    terms.push_back({"two_forty_d4", "6 * 40 D4 g0 e^{10 g0 + l0}", exact240});
    terms.push_back({"rounded", "1e18 g0 e^{10 g0 + l0}", rounded});
    simplified = opts.rounded ? rounded : exact240;
  }
  const L final = opts.mode == Mode::tight ? min(exact, simplified) : simplified;
  BoundReport r = make_report("remark_6_2", final, opts);
  r.terms = std::move(terms);
  r.inputs = CoveringScenario{inv0, inv0, TrivialCover{}};
  return r;
}

BoundReport parshin_bound(const ParshinInputs& in, const EvalOptions& opts) {
  if (!(in.ell_xv > 0.0)) throw DomainError("ell_Xv must be > 0");
  if (in.g_xp < 2) throw DomainError("g_XP must be >= 2 (got " + std::to_string(in.g_xp) + ")");
  const double lam = lambda_x(in.lambda1_cover);
  const double lam_s = lam * (1.0 - s_small(in.lambda1_cover));
  if (in.lambda_min && !(*in.lambda_min > 0.0)) throw DomainError("lambda_min must be > 0");
  if (in.lambda_min && *in.lambda_min > lam_s * (1.0 + 1e-12))
    throw DomainError("lambda_min exceeds lambda_X (1 - s) of the given cover");
  const int g = in.g_xp;
  const double ell = in.ell_xv;
  const L main = lit(d4_constant(opts.rounded)) * lit(g) * L::exp(8.0 * pi * g / ell + g * ell) *
                 inv_one_minus_exp(ell / 4.0).pow(5.0) / lam_s;
  std::vector<BoundTerm> terms = {{"ramified_one_point", "D4 g e^{8 pi g/l + g l}/((1 - e^{-l/4})^5 lambda (1 - s))", main}};
  L final = main;
  if (in.simplified) {
    check_belyi_floor(ell);
    const double lmin = in.lambda_min ? *in.lambda_min : lam_s;
    const L simple = lit(1e17) * lit(g) * L::exp(10.0 * g + g * ell) / lmin;
    terms.push_back({"belyi_simplified", "1e17 g e^{10 g + g l}/lambda_min", simple});
    final = simple;
  }
  BoundReport r = make_report("parshin_bound", final, opts);
  r.terms = std::move(terms);
  return r;
}

}  // namespace deltabound
