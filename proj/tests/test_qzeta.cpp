#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsze/errors.hpp"
#include "hsze/qzeta.hpp"

using namespace hsze;

namespace {

const Constants& cst() {
  static Constants C = make_constants(PrecisionConfig::make(256));
  return C;
}

TruncationPolicy default_policy() { return TruncationPolicy::defaults(cst().cfg); }

HPReal dec(const char* s) { return HPReal::of_string(s, cst().wp()); }

HPReal q2pi() { return exp(-ldexp2(cst().pi, 1)); }

RingExpr pi_term(long e, const Rational& c) {
  return RingExpr::symbol(RingSymbol::pi, e).scaled(c);
}

RingExpr w4pi_term(long e, const Rational& c) {
  return (RingExpr::symbol(RingSymbol::w, 4) * RingExpr::symbol(RingSymbol::pi, e))
      .scaled(c);
}

}  // namespace

TEST_CASE("direct summation against independent values") {
  const Constants& C = cst();
  HPReal tol = C.tol10(40);
  HPReal half = ldexp2(HPReal::of(1, C.wp()), -1);
  CHECK(approx_equal(f_q(QParams::make(half, 2, 1), C).re,
                     dec("0.686008472189872090120053722873068041077857"), tol));
  CHECK(approx_equal(f_q(QParams::make(HPReal::of(1, C.wp()) / 3, 3, 2), C).re,
                     dec("0.116827195459939459013773633074235138225594"), tol));
  CHECK(approx_equal(f_q(QParams::make(HPReal::of(rat(9, 10), C.wp()), 5, 4), C).re,
                     dec("0.675967796869600927421388853416814174847555"), tol));
}

TEST_CASE("zeta_q is the t = s - 1 slice") {
  const Constants& C = cst();
  HPReal q = HPReal::of(3, C.wp()) / 7;
  HPComplex a = zeta_q(q, 4, C);
  HPComplex b = f_q(QParams::make(q, 4, 3), C);
  CHECK(a.re == b.re);
  CHECK(a.im.is_zero());
}

TEST_CASE("q factor identity against the sinh power sum") {
  // with q = e^{-2 pi}: q^{mk}/(1-q^m)^{2k} = (2 sinh(m pi))^{-2k}
  const Constants& C = cst();
  HPReal q = q2pi();
  HPReal tol = C.tol10(35);
  TruncationPolicy policy = default_policy();
  for (long k = 1; k <= 4; ++k) {
    CAPTURE(k);
    HPComplex lhs = f_q(QParams::make(q, 2 * k, k), C);
    SinhPowerPair pair = sinh_power_identity(k, C, policy);
    HPReal rhs = pow_si(ldexp2(HPReal::of(1, C.wp()) - q, -1), 2 * k) *
                 ldexp2(pair.direct, -1);
    CHECK(approx_equal(lhs.re, rhs, tol));
  }
}

TEST_CASE("both routes of the sinh power identity agree") {
  const Constants& C = cst();
  TruncationPolicy policy = default_policy();
  for (long k = 1; k <= 4; ++k) {
    CAPTURE(k);
    SinhPowerPair pair = sinh_power_identity(k, C, policy);
    CHECK(approx_equal(HPComplex::real(pair.direct), pair.lattice, C.tol10(30)));
  }
}

TEST_CASE("catalogued q-zeta evaluations") {
  const Constants& C = cst();
  mpfr_prec_t wp = C.wp();
  HPReal q = q2pi();
  HPReal one = HPReal::of(1, wp);
  HPReal tol = C.tol10(35);

  HPReal lhs1 = zeta_q(q, 2, C).re;
  HPReal rhs1 = pow_si(one - q, 2) / 8 *
                (one / 3 - HPReal::of(1, wp) / C.pi);
  CHECK(approx_equal(lhs1, rhs1, tol));

  HPReal w4 = pow_si(C.lemniscate, 4);
  HPReal lhs2 = f_q(QParams::make(q, 4, 2), C).re;
  HPReal rhs2 = pow_si(one - q, 4) / 32 *
                (w4 / (pow_si(C.pi, 4) * 15) - HPReal::of(11, wp) / 45 +
                 HPReal::of(2, wp) / (C.pi * 3));
  CHECK(approx_equal(lhs2, rhs2, tol));

  HPReal lhs3 = f_q(QParams::make(q, 6, 3), C).re;
  HPReal rhs3 = -pow_si(one - q, 6) / 128 *
                (w4 / (pow_si(C.pi, 4) * 15) - HPReal::of(191, wp) / 945 +
                 HPReal::of(8, wp) / (C.pi * 15));
  CHECK(approx_equal(lhs3, rhs3, tol));

  for (long k = 1; k <= 3; ++k) {
    CAPTURE(k);
    QClosedForm f = f_q_closed(k, C);
    CHECK(approx_equal(f_q_closed_value(f, C),
                       f_q(QParams::make(q, 2 * k, k), C), tol));
  }
}

TEST_CASE("closed form ring pieces are exact") {
  const Constants& C = cst();
  // k = 1: (1/(2 pi)) (pi/3 - 1) = 1/6 - pi^{-1}/2
  CHECK(f_q_closed(1, C).ring ==
        RingExpr::constant(rat(1, 6)) + pi_term(-1, rat(-1, 2)));
  // k = 2: (1/(2 pi)) (w^4/(15 pi^3) - 11 pi/45 + 2/3)
  CHECK(f_q_closed(2, C).ring ==
        w4pi_term(-4, rat(1, 30)) + pi_term(0, rat(-11, 90)) + pi_term(-1, rat(1, 3)));
  // k = 3: (1/(2 pi)) (-w^4/(15 pi^3) + 191 pi/945 - 8/15)
  CHECK(f_q_closed(3, C).ring ==
        w4pi_term(-4, rat(-1, 30)) + pi_term(0, rat(191, 1890)) +
            pi_term(-1, rat(-4, 15)));
}

TEST_CASE("rejected parameters") {
  const Constants& C = cst();
  mpfr_prec_t wp = C.wp();
  CHECK_THROWS_AS(QParams::make(HPReal::of(1, wp), 2, 1), NonconvergentQSeries);
  CHECK_THROWS_AS(QParams::make(HPReal::of(0, wp), 2, 1), NonconvergentQSeries);
  CHECK_THROWS_AS(QParams::make(HPReal::of(-1, wp) / 2, 2, 1), NonconvergentQSeries);
  CHECK_THROWS_AS(QParams::make(HPReal::of(1, wp) / 2, 0, 1), ConfigError);
  CHECK_THROWS_AS(QParams::make(HPReal::of(1, wp) / 2, 2, 0), ConfigError);
  CHECK_THROWS_AS(f_q_closed(4, C), NotCatalogued);
  CHECK_THROWS_AS(f_q_closed(0, C), ConfigError);
  CHECK_THROWS_AS(sinh_power_identity(0, C, default_policy()), ConfigError);
}
