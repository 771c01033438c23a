#include "deltabound/exact_constants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace deltabound {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Rational enclosures: pi in (333/106, 355/113), e in (2718281/1000000, 2718282/1000000).
const cpp_rational kPiLo(333, 106);
const cpp_rational kPiHi(355, 113);
const cpp_rational kELo(2718281, 1000000);
const cpp_rational kEHi(2718282, 1000000);

std::string str(const cpp_rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

cpp_int ceil_div(const cpp_rational& x) {
  cpp_int q = numerator(x) / denominator(x);
  if (q * denominator(x) < numerator(x)) ++q;
  return q;
}

struct Ledger {
  std::vector<ConstantCheck> items;
  void eq(std::string label, const cpp_rational& derived, const cpp_rational& published) {
    items.push_back({std::move(label), str(derived), "==", str(published), derived == published});
  }
  void le(std::string label, const cpp_rational& derived, const cpp_rational& published) {
    items.push_back({std::move(label), str(derived), "<=", str(published), derived <= published});
  }
};

// Term-ledger coefficients of the four sub-bounds, keyed by what they multiply.
// Multipliers: 2 pi (1 - 1/g) <= 2 pi, 6, 2, 1.
struct D1Groups {
  cpp_rational hub_plus_ev;     // (C_Hub + N_ev)/lambda: 6*144 + 2*6
  cpp_rational supnorm_upper;   // g (S+1)^2 / lambda: 2 pi * 4 pi, upper enclosure
  cpp_rational genus;           // g: 11 + (10 + 2*2)/2 using g >= 2
  cpp_rational geo_over_ell_upper;  // N/ell: 6 pi^2/6 + 2*1, upper enclosure
  cpp_rational geo;             // N: 2*3
};

D1Groups d1_groups() {
  D1Groups d;
  d.hub_plus_ev = cpp_rational(6 * 144 + 2 * 6);
  d.supnorm_upper = 8 * kPiHi * kPiHi;
  d.genus = cpp_rational(11) + cpp_rational(10 + 2 * 2, 2);
  d.geo_over_ell_upper = kPiHi * kPiHi + 2;
  d.geo = cpp_rational(2 * 3);
  return d;
}

}  // namespace

long long derive_d1() { return static_cast<long long>(numerator(d1_groups().hub_plus_ev)); }

long long derive_d3() {
  const cpp_int coeff = cpp_int(69) + 855;
  const cpp_int free_g = cpp_int(384) + 3952;
  return static_cast<long long>(coeff * 42761980 + free_g);
}

long long derive_d4() {
  const cpp_int bracket = cpp_int(1201) * 1201 + 5 + 20 + cpp_int(16) * derive_d3();
  return static_cast<long long>(bracket * 876);
}

std::vector<ConstantCheck> constant_ledger() {
  Ledger L;

  // Collected coefficient of the combined term bound.
  const D1Groups d = d1_groups();
  L.eq("D1: 6*144 + 2*6", d.hub_plus_ev, 876);
  L.le("D1 dominates 8 pi^2 (g (S+1)^2/lambda coefficient)", d.supnorm_upper, d.hub_plus_ev);
  L.le("D1 dominates 11 + 14/2 (g coefficient)", d.genus, d.hub_plus_ev);
  L.le("D1 dominates pi^2 + 2 (N_geo/ell coefficient)", d.geo_over_ell_upper, d.hub_plus_ev);
  L.le("D1 dominates 2*3 (N_geo coefficient)", d.geo, d.hub_plus_ev);
  L.le("876 <= 1e3", 876, 1000);

  // Sup-norm aggregation: 4 (3 + 1 + 3 + 15) pi, then a factor 4 from 1/sinh^2(l/8).
  const cpp_int agg = cpp_int(4) * (3 + 1 + 3 + 15);
  L.eq("sup-norm aggregate 4*(3+1+3+15) = 88", agg, 88);
  L.eq("88*4 = 352", agg * 4, 352);
  L.le("352 pi <= 1.2e3 (pi < 355/113)", 352 * kPiHi, 1200);

  // Huber chain.
  L.le("3*745/2 <= 1118", cpp_rational(3 * 745, 2), 1118);
  L.le("C1 = 2e - 2 <= 4", 2 * kEHi - 2, 4);
  // 8480 sqrt(e/2pi) <= 5578  <=>  8480^2 e <= 5578^2 * 2 pi.
  L.le("C10^2 = 8480^2 e/(2 pi) <= 5578^2", cpp_rational(cpp_int(8480) * 8480) * kEHi / (2 * kPiLo),
       cpp_int(5578) * 5578);
  L.eq("C12: 4*13 + 4*10 = 92", cpp_int(4 * 13 + 4 * 10), 92);
  L.eq("C12: 92 + 10 = 102", cpp_int(92 + 10), 102);
  L.eq("C13: 41*5578*3/6 = 114349", cpp_rational(cpp_int(41) * 5578 * 3, 6), 114349);
  const cpp_rational c13e = cpp_rational(cpp_int(41) * 5578 * 1118, 6);
  L.le("C13: 41*5578*1118/6 <= 42614061", c13e, 42614061);
  L.eq("C13: ceil(41*5578*1118/6) = 42614061", ceil_div(c13e), 42614061);
  L.eq("C16: 102 + 114349 + 6*5578 = 147919", cpp_int(102) + 114349 + 6 * 5578, 147919);
  L.eq("C16: 147919 + 42614061 = 42761980", cpp_int(147919) + 42614061, 42761980);
  L.eq("C19: 8*4 + 4*16 = 96", cpp_int(8 * 4 + 4 * 16), 96);
  L.eq("C19: 4*5 = 20", cpp_int(4 * 5), 20);
  L.eq("C19: 16 + 96 = 112", cpp_int(16 + 96), 112);
  L.eq("C19: 5 + 20 = 25", cpp_int(5 + 20), 25);
  L.eq("C20: 112 + 96 = 208", cpp_int(112 + 96), 208);
  L.eq("C20: 25 + 20 = 45", cpp_int(25 + 20), 45);
  L.eq("C21: 12 * 3/2 = 18", cpp_rational(12 * 3, 2), 18);
  L.le("C22 = 1/(1 + 1/log 2) <= 1/2 (2 <= e)", 2, kELo);
  L.eq("C_u: 18*4 = 72", cpp_int(18 * 4), 72);
  L.eq("C_u: 208 * 3/2 = 312", cpp_rational(208 * 3, 2), 312);
  L.le("C_u: 45 * 3/2 <= 69", cpp_rational(45 * 3, 2), 69);
  L.eq("C_u: 208*18 = 3744", cpp_int(208 * 18), 3744);
  L.eq("C_u: 45*18 = 810", cpp_int(45 * 18), 810);
  L.eq("C_u: 72 + 312 = 384", cpp_int(72 + 312), 384);
  L.eq("C_u: 208 + 3744 = 3952", cpp_int(208 + 3744), 3952);
  L.eq("C_u: 45 + 810 = 855", cpp_int(45 + 810), 855);
  L.eq("C_u: 69 + 855 = 924", cpp_int(69 + 855), 924);
  L.eq("C_u: 384 + 3952 = 4336", cpp_int(384 + 3952), 4336);
  L.eq("D3: 924*42761980 + 4336 = 39512073856", cpp_int(derive_d3()), cpp_int(39512073856LL));
  L.le("D3 <= 1e11", cpp_int(derive_d3()), cpp_int(100000000000LL));

  // Combined covering bound.
  L.eq("1201^2 = 1442401", cpp_int(1201) * 1201, 1442401);
  L.eq("1201^2 + 5 + 20 = 1442426", cpp_int(1201) * 1201 + 5 + 20, 1442426);
  L.eq("16*39512073856 = 632193181696", cpp_int(16) * 39512073856LL, cpp_int(632193181696LL));
  L.eq("D4: 876*(1442426 + 632193181696) = 553802490730872", cpp_int(derive_d4()),
       cpp_int(553802490730872LL));
  L.le("D4 <= 1e15", cpp_int(derive_d4()), cpp_int(1000000000000000LL));

  // Belyi and congruence simplifications.
  const cpp_int d4 = derive_d4();
  L.le("40*553802490730872 <= 1e17", 40 * d4, cpp_int(100000000000000000LL));
  L.le("40*1e15 <= 1e17", cpp_int(40) * cpp_int(1000000000000000LL), cpp_int(100000000000000000LL));
  L.le("6*1e17 <= 1e18", cpp_int(6) * cpp_int(100000000000000000LL), cpp_int(1000000000000000000LL));
  L.le("6*40*553802490730872 <= 1e18", 240 * d4, cpp_int(1000000000000000000LL));
  return L.items;
}

}  // namespace deltabound
