#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsze/errors.hpp"
#include "hsze/ring_expr.hpp"

using namespace hsze;

namespace {

const Constants& cst() {
  static Constants C = make_constants(PrecisionConfig::make(256));
  return C;
}

HPReal tol_bits(long b) { return ldexp2(HPReal::of(1, cst().wp()), -b); }

RingExpr sym(RingSymbol s, long e = 1) { return RingExpr::symbol(s, e); }

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational a(rat(1, 2), rat(-3, 4));
  GaussianRational b(rat(2), rat(1));
  CHECK((a + b) == GaussianRational(rat(5, 2), rat(1, 4)));
  CHECK((a * b) == GaussianRational(rat(7, 4), rat(-1)));
  CHECK((a - a).is_zero());
  CHECK(a.conj() == GaussianRational(rat(1, 2), rat(3, 4)));
  // i^2 = -1
  GaussianRational i = GaussianRational::of(0, 1);
  CHECK((i * i) == GaussianRational::of(-1));
  CHECK(a.to_string() == "(1/2-3/4i)");
  CHECK(b.to_string() == "(2+1i)");
}

TEST_CASE("sqrt3 powers reduce to rational factors") {
  RingExpr s3 = sym(RingSymbol::s3);
  CHECK(s3 * s3 == RingExpr::constant(rat(3)));
  RingExpr s5 = sym(RingSymbol::s3, 5);
  CHECK(s5 == s3.scaled(rat(9)));
  CHECK((s3 * s3 * s3) == s3.scaled(rat(3)));
  CHECK(s5.degree_in(RingSymbol::s3) == 1);
}

TEST_CASE("rho powers") {
  RingExpr rho = rho_power_expr(1);
  RingExpr one = RingExpr::constant(rat(1));
  CHECK(rho * rho == rho_power_expr(2));
  CHECK(rho * rho * rho == one);
  CHECK(rho_power_expr(3) == one);
  CHECK(rho_power_expr(-1) == rho_power_expr(2));
  CHECK((rho_power_expr(2) + rho + one).is_zero());
  // numeric agreement with the certified constant
  HPComplex num = eval_ring(rho, cst());
  CHECK(abs(num - cst().rho) <= tol_bits(250));
}

TEST_CASE("polynomial calculus in z") {
  RingExpr one = RingExpr::constant(rat(1));
  RingExpr piz = sym(RingSymbol::pi) * sym(RingSymbol::z);
  RingExpr p = (one + piz) * (one + piz);
  RingExpr expanded = one + piz.scaled(rat(2)) + sym(RingSymbol::pi, 2) * sym(RingSymbol::z, 2);
  CHECK(p == expanded);
  CHECK(p.degree_in(RingSymbol::z) == 2);
  CHECK(p.degree_in(RingSymbol::pi) == 2);
  CHECK(p.degree_in(RingSymbol::wt) == 0);

  RingExpr dp = p.differentiate_z();
  RingExpr expect_dp =
      sym(RingSymbol::pi).scaled(rat(2)) + (sym(RingSymbol::pi, 2) * sym(RingSymbol::z)).scaled(rat(2));
  CHECK(dp == expect_dp);
  CHECK(RingExpr::constant(rat(5)).differentiate_z().is_zero());

  RingExpr at_half = p.substitute_z(rat(1, 2));
  RingExpr expect_half = one + sym(RingSymbol::pi) + sym(RingSymbol::pi, 2).scaled(rat(1, 4));
  CHECK(at_half == expect_half);
  CHECK(at_half.degree_in(RingSymbol::z) == 0);
}

TEST_CASE("string rendering is canonical") {
  CHECK(RingExpr::zero().to_string() == "(0+0i)");
  RingExpr e = sym(RingSymbol::pi, 3).scaled(rat(2, 3));
  CHECK(e.to_string() == "(2/3+0i) * pi^3");
  RingExpr f = RingExpr::constant(rat(-1)) + sym(RingSymbol::w, 4).scaled(rat(1, 15)) +
               sym(RingSymbol::pi, -1) * sym(RingSymbol::z, 2);
  CHECK(f.to_string() ==
        "(1+0i) * pi^-1 * z^2 + (-1+0i) + (1/15+0i) * w^4");
}

TEST_CASE("numeric evaluation") {
  const Constants& C = cst();
  mpfr_prec_t wp = C.wp();
  // w^4/(15 pi) - 7 pi^3/90 + pi^2/6
  RingExpr e = sym(RingSymbol::w, 4) * sym(RingSymbol::pi, -1).scaled(rat(1, 15)) +
               sym(RingSymbol::pi, 3).scaled(rat(-7, 90)) +
               sym(RingSymbol::pi, 2).scaled(rat(1, 6));
  HPReal direct = pow_si(C.lemniscate, 4) / (HPReal::of(15, wp) * C.pi) -
                  HPReal::of(7, wp) * pow_si(C.pi, 3) / HPReal::of(90, wp) +
                  C.pi * C.pi / HPReal::of(6, wp);
  CHECK(abs(eval_ring(e, C) - HPComplex::real(direct)) <= tol_bits(245));

  RingExpr with_z = e + sym(RingSymbol::z, 1);
  CHECK_THROWS_AS(eval_ring(with_z, C), SymbolRemains);
  HPComplex at_half = eval_ring(with_z, C, rat(1, 2));
  CHECK(abs(at_half - HPComplex::real(direct + HPReal::of(rat(1, 2), wp))) <= tol_bits(245));

  // wt and s3 evaluate against their certified constants
  RingExpr g = sym(RingSymbol::wt, 6).scaled(rat(1, 35)) +
               sym(RingSymbol::s3).scaled(GaussianRational(rat(0), rat(2)));
  HPComplex expect(pow_si(C.lemniscate6, 6) / HPReal::of(35, wp), ldexp2(C.sqrt3, 1));
  CHECK(abs(eval_ring(g, C) - expect) <= tol_bits(245));
}

TEST_CASE("cancellation and equality") {
  RingExpr a = sym(RingSymbol::pi, 2).scaled(rat(5, 7)) + sym(RingSymbol::z, 3);
  RingExpr b = sym(RingSymbol::z, 3) + sym(RingSymbol::pi, 2).scaled(rat(5, 7));
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK((a - b) == RingExpr::zero());
  CHECK((a * RingExpr::zero()).is_zero());
}
