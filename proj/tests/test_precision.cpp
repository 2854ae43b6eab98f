#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsze/errors.hpp"
#include "hsze/precision.hpp"
#include "oracles.hpp"

using namespace hsze;

static bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

TEST_CASE("certified constants match frozen decimal prefixes") {
  auto C = make_constants(PrecisionConfig::make(256));
  CHECK(starts_with(C.pi.str(20), "3.14159265358979"));
  CHECK(starts_with(C.lemniscate.str(20), "2.62205755429211"));
  CHECK(starts_with(C.lemniscate6.str(20), "2.42865064788758"));
  CHECK(starts_with(C.sqrt3.str(20), "1.73205080756887"));
}

TEST_CASE("constants agree when recomputed with extra precision") {
  auto lo = make_constants(PrecisionConfig::make(192));
  auto hi = make_constants(PrecisionConfig::make(320));
  HPReal bound = ldexp2(HPReal::of(1, 64), -192 + 4);
  CHECK(abs(lo.pi - hi.pi) <= bound);
  CHECK(abs(lo.lemniscate - hi.lemniscate) <= bound);
  CHECK(abs(lo.lemniscate6 - hi.lemniscate6) <= bound);
  CHECK(abs(lo.sqrt3 - hi.sqrt3) <= bound);
}

TEST_CASE("lemniscate constant against independent arclength quadrature") {
  // 2*integral_0^1 dx/sqrt(1-x^4), evaluated by tanh-sinh quadrature.
  auto C = make_constants(PrecisionConfig::make(256));
  mpfr_prec_t wp = C.wp();
  HPReal target = ldexp2(HPReal::of(1, wp), -(256 - 16));
  HPReal one = HPReal::of(1, wp);
  HPReal quad = oracles::tanh_sinh_01(
      [&](const HPReal& x, const HPReal& omx) {
        // 1-x^4 = (1-x)(1+x)(1+x^2), with 1-x passed in exactly
        HPReal g = omx * (one + x) * (one + x * x);
        return one / sqrt(g);
      },
      wp, target);
  CHECK(abs(ldexp2(quad, 1) - C.lemniscate) <= ldexp2(target, 8));

  // hexagonal analogue: 2*integral_0^1 dx/sqrt(1-x^6)
  HPReal quad6 = oracles::tanh_sinh_01(
      [&](const HPReal& x, const HPReal& omx) {
        HPReal p = one + x;
        HPReal x2 = x * x;
        p += x2 + x2 * x + x2 * x2 + x2 * x2 * x;
        return one / sqrt(omx * p);
      },
      wp, target);
  CHECK(abs(ldexp2(quad6, 1) - C.lemniscate6) <= ldexp2(target, 8));
}

TEST_CASE("lemniscate via arithmetic-geometric mean") {
  auto C = make_constants(PrecisionConfig::make(256));
  mpfr_prec_t wp = C.wp();
  HPReal sqrt2 = sqrt(HPReal::of(2, wp));
  HPReal alt = C.pi / agm(HPReal::of(1, wp), sqrt2);
  CHECK(abs(alt - C.lemniscate) <= ldexp2(HPReal::of(1, wp), -250));
}

TEST_CASE("rho is a primitive cube root of unity") {
  auto C = make_constants(PrecisionConfig::make(256));
  HPComplex rho = C.rho;
  HPComplex rho2 = rho * rho;
  HPComplex rho3 = rho2 * rho;
  HPReal eps = ldexp2(HPReal::of(1, C.wp()), -250);
  CHECK(abs(rho3 - HPComplex::real(HPReal::of(1, C.wp()))) <= eps);
  HPComplex s = rho2 + rho + HPComplex::real(HPReal::of(1, C.wp()));
  CHECK(abs(s) <= eps);
}

TEST_CASE("integer powers of complex numbers") {
  auto C = make_constants(PrecisionConfig::make(128));
  mpfr_prec_t wp = C.wp();
  HPComplex i = HPComplex::i_unit(wp);
  HPComplex one_plus_i = HPComplex::of(1, 1, wp);
  HPReal eps = ldexp2(HPReal::of(1, wp), -120);

  HPComplex p = complex_pow_int(one_plus_i, 2);  // 2i
  CHECK(abs(p - HPComplex::of(0, 2, wp)) <= eps);

  CHECK(abs(complex_pow_int(i, 4) - HPComplex::real(HPReal::of(1, wp))) <= eps);

  // (1+i)^-2 = -i/2
  HPComplex q = complex_pow_int(one_plus_i, -2);
  CHECK(abs(q - HPComplex(HPReal::of(0, wp), ldexp2(HPReal::of(-1, wp), -1))) <= eps);

  CHECK(abs(complex_pow_int(one_plus_i, 0) - HPComplex::real(HPReal::of(1, wp))) <= eps);

  CHECK_THROWS_AS(complex_pow_int(HPComplex::zero(wp), -1), ZeroToNegativePower);
}

TEST_CASE("approx_equal uses max(1,|lhs|,|rhs|) scaling") {
  mpfr_prec_t wp = 128;
  HPReal tol = HPReal::of_string("1e-10", wp);

  // small values: absolute comparison
  HPReal a = HPReal::of_string("1e-12", wp);
  HPReal b = HPReal::of(0, wp);
  CHECK(approx_equal(a, b, tol));

  // large values: relative comparison kicks in
  HPReal big = HPReal::of_string("1e12", wp);
  HPReal big2 = big + HPReal::of(50, wp);
  CHECK(approx_equal(big, big2, tol));
  HPReal big3 = big + HPReal::of_string("1e3", wp);
  CHECK(!approx_equal(big, big3, tol));

  // just over the absolute tolerance near zero
  HPReal c = HPReal::of_string("2e-10", wp);
  CHECK(!approx_equal(c, b, tol));
}

TEST_CASE("precision config validation") {
  CHECK_THROWS_AS(PrecisionConfig::make(32), ConfigError);
  CHECK_THROWS_AS(PrecisionConfig::make(256, 8), ConfigError);
  auto cfg = PrecisionConfig::make(64, 16);
  CHECK(cfg.working() == 80);
}

TEST_CASE("decimal round trip") {
  mpfr_prec_t wp = 256;
  HPReal x = HPReal::pi(wp);
  HPReal y = HPReal::of_string(x.str(), wp);
  CHECK(x == y);
}
