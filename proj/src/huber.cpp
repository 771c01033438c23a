#include "deltabound/huber.hpp"

#include <cmath>
#include <numbers>

#include "deltabound/errors.hpp"
#include "deltabound/numerics.hpp"

namespace deltabound {

namespace {

using std::numbers::pi;
using L = LogScalar;

L lit(double x) { return L::from_double(x); }
L abs(const L& x) { return x.sign() < 0 ? -x : x; }

void check_genus(int g) {
  if (g < 2) throw DomainError("genus must be >= 2 (got " + std::to_string(g) + ")");
}

void check_inputs(int g, double ell, double lambda1) {
  check_genus(g);
  if (!(ell > 0.0)) throw DomainError("systole must be > 0");
  if (!(lambda1 > 0.0)) throw DomainError("lambda1 must be > 0");
}

// 1 / (1 - e^{-l/2}) as a LogScalar, safe for tiny l.
L inv_one_minus_exp_half(double ell) { return L::from_log(-std::log(-std::expm1(-ell / 2.0))); }

double c1_exact() { return 2.0 * std::numbers::e - 2.0; }
double c10_exact() { return 8480.0 * std::sqrt(std::numbers::e / (2.0 * pi)); }

// Published coefficient integers.
constexpr double kC12 = 102.0;
constexpr double kC13g = 114349.0;
constexpr double kC13e = 42614061.0;
constexpr double kC16g = 147919.0;
constexpr double kC16 = 42761980.0;

}  // namespace

double diameter_bound(int g, double ell) {
  check_genus(g);
  if (!(ell > 0.0)) throw DomainError("systole must be > 0");
  return 8.0 * pi * g / ell;
}

double chang_diameter_bound(int g, double ell) {
  check_genus(g);
  if (!(ell > 0.0)) throw DomainError("systole must be > 0");
  return 2.0 * pi * (g - 1) / std::sinh(ell / 4.0);
}

int n_ev_bound(int g) {
  check_genus(g);
  return 4 * g - 2;
}

double c22_constant() { return 1.0 / (1.0 + 1.0 / std::numbers::ln2); }

double c22_margin(double r) {
  if (!(r >= 2.0)) throw DomainError("c22_margin requires r >= 2");
  return c22_constant() * r / std::log(r) - li(r);
}

LogScalar huber_closed(int g, double ell, double lambda1, double d3) {
  check_inputs(g, ell, lambda1);
  const double inv_s = 1.0 / (1.0 - s_small(lambda1));
  return lit(d3) * lit(g) * L::exp(8.0 * pi * g / ell + ell / 2.0) * lit(inv_s) *
         inv_one_minus_exp_half(ell).pow(2.0);
}

HuberBreakdown huber_chain(int g, double ell, double lambda1, Mode mode,
                           const HuberOverrides& overrides) {
  check_inputs(g, ell, lambda1);
  if (overrides.n_ev && (*overrides.n_ev < 1 || *overrides.n_ev > 4 * g - 2))
    throw DomainError("n_ev must satisfy 1 <= n_ev <= 4g - 2");
  if (overrides.diameter && !(*overrides.diameter > 0.0)) throw DomainError("diameter must be > 0");

  HuberBreakdown h;
  h.mode = mode;
  h.genus = g;
  h.ell = ell;
  h.s1 = s_small(lambda1);
  h.c_mult = std::exp(ell / 2.0);
  h.mu = ell / 2.0;
  h.c22 = c22_constant();

  const L gg = lit(g);
  const L inv_s = lit(1.0 / (1.0 - h.s1));
  const L q = inv_one_minus_exp_half(ell);
  const L e_half = L::exp(ell / 2.0);

  if (mode == Mode::paper_faithful) {
    const L big_e = L::exp(8.0 * pi * g / ell);
    h.diameter = diameter_bound(g, ell);
    h.a = lit(4.0 * g);
    h.b = big_e / 2.0;
    h.c = lit(3.0 * g) + lit(1118.0) * big_e;
    h.c1 = 4.0;
    h.c10 = 5578.0;
    h.c12 = lit(kC12) * gg * inv_s;
    h.c13 = lit(kC13g) * gg + lit(kC13e) * big_e;
    h.c16 = lit(kC16) * gg * big_e * inv_s;
    h.c17 = lit(16.0) * gg + lit(4.0) * h.c16;
    h.c18 = lit(16.0) * gg + lit(5.0) * h.c16;
    h.c19 = (lit(112.0) * gg + lit(25.0) * h.c16) * q;
    h.c20 = (lit(208.0) * gg + lit(45.0) * h.c16) * q;
    h.c21 = lit(18.0) * e_half * q;
    h.c_u = lit(384.0) * gg * e_half * q + lit(69.0) * h.c16 * q +
            (lit(3952.0) * gg + lit(855.0) * h.c16) * e_half * q.pow(2.0);
    h.final_bound = huber_closed(g, ell, lambda1, kD3Exact);
    return h;
  }

  const double a = overrides.n_ev ? *overrides.n_ev : n_ev_bound(g);
  h.diameter = overrides.diameter ? *overrides.diameter : chang_diameter_bound(g, ell);
  h.a = lit(a);
  h.b = L::exp(h.diameter) / (2.0 * (g - 1));
  h.c = 3.0 * (lit(g - 1.0) + lit(745.0) * h.b);
  h.c1 = c1_exact();
  h.c10 = c10_exact();
  const double c1 = h.c1;
  h.c12 = lit(a - 1.0) * (lit(1.0 + 3.0 * c1) + lit(2.0 * (1.0 + c1)) * inv_s) + lit(2.0 * c1 + 2.0);
  h.c13 = lit(41.0 / 6.0) * h.c * lit(h.c10);
  h.c16 = h.c12 + h.c13 + lit(6.0 * (g - 1) * h.c10);
  h.c17 = lit(4.0 * a) + lit(4.0) * h.c16;
  h.c18 = lit(4.0 * a) + lit(5.0) * h.c16;
  const L spread = lit(8.0 * a) + lit(4.0) * h.c18;
  h.c19 = h.c18 + spread * q;
  h.c20 = h.c19 + spread / h.mu;
  const L c = e_half;
  const L log_c = lit(h.mu);
  h.c21 = abs(c - lit(2.0)) / std::numbers::ln2 + lit(2.0) * abs(lit(2.0) - c.pow(0.5)) / log_c;
  h.c_u = h.c21 * h.a + h.c20 * c.pow(0.75) / log_c + h.c20 * (1.0 + h.c22) +
          lit(0.75) * h.c20 * h.c21;
  h.final_bound = h.c_u;
  return h;
}

bool LinkCheck::holds(double rel_slack) const {
  if (lhs.sign() <= 0) return rhs.sign() >= 0 || lhs <= rhs;
  if (rhs.sign() <= 0) return false;
  return lhs.log() <= rhs.log() + std::log1p(rel_slack);
}

double LinkCheck::log_margin() const {
  if (lhs.sign() <= 0) return rhs.sign() > 0 ? INFINITY : 0.0;
  if (rhs.sign() <= 0) return -INFINITY;
  return rhs.log() - lhs.log();
}

std::vector<LinkCheck> huber_link_audit(int g, double ell, double lambda1) {
  check_inputs(g, ell, lambda1);
  std::vector<LinkCheck> out;
  auto add = [&](std::string label, L lhs, L rhs) {
    out.push_back({std::move(label), lhs, rhs});
  };

  const double s1 = s_small(lambda1);
  const L gg = lit(g);
  const L inv_s = lit(1.0 / (1.0 - s1));
  const L q = inv_one_minus_exp_half(ell);
  const L e_half = L::exp(ell / 2.0);
  const L big_e = L::exp(8.0 * pi * g / ell);
  const double a_true = n_ev_bound(g);
  const L a = lit(4.0 * g);

  // Diameter and eigenvalue count.
  add("N_ev <= 4g", lit(a_true), a);
  add("ell/2 <= 2 sinh(ell/4)", lit(ell / 2.0), lit(2.0 * std::sinh(ell / 4.0)));
  add("Chang diameter <= 8 pi g/ell", lit(chang_diameter_bound(g, ell)), lit(diameter_bound(g, ell)));

  // B and C.
  const L b_chang = L::exp(chang_diameter_bound(g, ell)) / (2.0 * (g - 1));
  const L b_def = big_e / (2.0 * (g - 1));
  add("B(d_Chang) <= B(8 pi g/ell)", b_chang, b_def);
  add("B <= e^{8 pi g/ell}/2", b_def, big_e / 2.0);
  const L c_def = 3.0 * (lit(g - 1.0) + lit(745.0) * big_e / 2.0);
  const L c_disp = lit(3.0 * g) + lit(1118.0) * big_e;
  add("C <= 3g + 1118 e^{8 pi g/ell}", c_def, c_disp);

  add("C1 = 2e - 2 <= 4", lit(c1_exact()), lit(4.0));
  add("C10 = 8480 sqrt(e/2pi) <= 5578", lit(c10_exact()), lit(5578.0));

  // C12 with the exact C1 and the displayed A = 4g, then each display.
  const double c1 = c1_exact();
  const L c12_def =
      (a - lit(1.0)) * (lit(1.0 + 3.0 * c1) + lit(2.0 * (1.0 + c1)) * inv_s) + lit(2.0 * c1 + 2.0);
  const L c12_d1 = lit(4.0) * gg * (lit(13.0) + lit(10.0) * inv_s) + lit(10.0);
  const L c12_d2 = lit(92.0) * gg * inv_s + lit(10.0);
  const L c12_d3 = lit(kC12) * gg * inv_s;
  add("C12 <= 4g(13 + 10/(1-s1)) + 10", c12_def, c12_d1);
  add("4g(13 + 10/(1-s1)) + 10 <= 92g/(1-s1) + 10", c12_d1, c12_d2);
  add("92g/(1-s1) + 10 <= 102g/(1-s1)", c12_d2, c12_d3);

  const L c13_def = lit(41.0 / 6.0) * c_disp * lit(c10_exact());
  const L c13_d1 = lit(41.0 * 5578.0 / 6.0) * c_disp;
  const L c13_d2 = lit(kC13g) * gg + lit(kC13e) * big_e;
  add("41 C C10/6 <= 41*5578/6 (3g + 1118 E)", c13_def, c13_d1);
  add("41*5578/6 (3g + 1118 E) <= 114349 g + 42614061 E", c13_d1, c13_d2);

  const L c16_def = c12_d3 + c13_d2 + lit(6.0 * (g - 1) * c10_exact());
  const L c16_d1 = c12_d3 + c13_d2 + lit(6.0 * 5578.0) * gg;
  const L c16_d2 = lit(kC16g) * gg * inv_s + lit(kC13e) * big_e;
  const L c16 = lit(kC16) * gg * big_e * inv_s;
  add("C16 <= 102g/(1-s1) + 114349 g + 42614061 E + 6*5578 g", c16_def, c16_d1);
  add("... <= 147919 g/(1-s1) + 42614061 E", c16_d1, c16_d2);
  add("... <= 42761980 g E/(1-s1)", c16_d2, c16);

  // The C16 symbol is kept from here on, as in the displayed chain.
  const L a_def = lit(a_true);
  add("C17 = 4A + 4 C16 <= 16g + 4 C16", lit(4.0) * a_def + lit(4.0) * c16, lit(16.0) * gg + lit(4.0) * c16);
  const L c18 = lit(16.0) * gg + lit(5.0) * c16;
  add("C18 = 4A + 5 C16 <= 16g + 5 C16", lit(4.0) * a_def + lit(5.0) * c16, c18);

  const L spread = lit(8.0) * a + lit(4.0) * c18;
  const L c19_def = c18 + spread * q;
  const L c19_d1 = c18 + (lit(96.0) * gg + lit(20.0) * c16) * q;
  const L c19 = (lit(112.0) * gg + lit(25.0) * c16) * q;
  add("C19 <= 16g + 5 C16 + (96g + 20 C16)/(1-e^{-l/2})", c19_def, c19_d1);
  add("... <= (112g + 25 C16)/(1-e^{-l/2})", c19_d1, c19);

  add("1/mu = 2/ell <= 1/(1-e^{-l/2})", lit(2.0 / ell), q);
  const L c20_def = c19 + spread / (ell / 2.0);
  const L c20_d1 = c19 + spread * q;
  const L c20 = (lit(208.0) * gg + lit(45.0) * c16) * q;
  add("C20 <= C19 + (8A + 4 C18)/(1-e^{-l/2})", c20_def, c20_d1);
  add("... <= (208g + 45 C16)/(1-e^{-l/2})", c20_d1, c20);

  const L c = e_half;
  const double ln2 = std::numbers::ln2;
  const L c21_def = abs(c - lit(2.0)) / ln2 + lit(2.0) * abs(lit(2.0) - c.pow(0.5)) / (ell / 2.0);
  const L c21_d1 = (c + lit(2.0)) / ln2 + lit(2.0) * (c.pow(0.5) + lit(2.0)) / (ell / 2.0);
  const L c21_d2 = (e_half + lit(2.0)) / ln2 + lit(4.0) * (L::exp(ell / 4.0) + lit(2.0)) / ell;
  const L c21_d3 = lit(3.0) * e_half / 0.5 + lit(12.0) * e_half / ell;
  const L c21_d4 = lit(12.0) * e_half * lit(1.0 + 1.0 / ell);
  const L c21 = lit(18.0) * e_half * q;
  add("C21 <= (c+2)/log 2 + 2(sqrt c + 2)/log c", c21_def, c21_d1);
  add("... <= (e^{l/2}+2)/log 2 + 4(e^{l/4}+2)/ell", c21_d1, c21_d2);
  add("... <= 3 e^{l/2}/(1/2) + 4*3 e^{l/2}/ell", c21_d2, c21_d3);
  add("... <= 12 e^{l/2}(1 + 1/ell)", c21_d3, c21_d4);
  add("... <= 18 e^{l/2}/(1-e^{-l/2})", c21_d4, c21);

  add("C22 <= 1/2", lit(c22_constant()), lit(0.5));

  const L cu_def = c21 * a + c20 * c.pow(0.75) / (ell / 2.0) + c20 * (1.0 + c22_constant()) +
                   lit(0.75) * c20 * c21;
  const L cu_d1 = lit(72.0) * gg * e_half * q + (lit(208.0) * gg + lit(45.0) * c16) * e_half * q.pow(2.0) +
                  (lit(312.0) * gg + lit(69.0) * c16) * q +
                  (lit(3744.0) * gg + lit(810.0) * c16) * e_half * q.pow(2.0);
  const L cu_d2 = lit(384.0) * gg * e_half * q + lit(69.0) * c16 * q +
                  (lit(3952.0) * gg + lit(855.0) * c16) * e_half * q.pow(2.0);
  const L cu_final = huber_closed(g, ell, lambda1, kD3Exact);
  add("C_u <= first aggregated display", cu_def, cu_d1);
  add("... <= 384 g e^{l/2} q + 69 C16 q + (3952 g + 855 C16) e^{l/2} q^2", cu_d1, cu_d2);
  add("... <= 39512073856 g e^{8 pi g/l + l/2}/((1-s1)(1-e^{-l/2})^2)", cu_d2, cu_final);
  add("39512073856 <= 1e11", lit(kD3Exact), lit(kD3Rounded));

  const auto tight = huber_chain(g, ell, lambda1, Mode::tight);
  add("tight C_u <= paper-faithful bound", tight.final_bound, cu_final);
  return out;
}

}  // namespace deltabound
