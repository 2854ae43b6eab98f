#include "hsze/precision.hpp"

#include <cstdio>
#include <cstdlib>

namespace hsze {

namespace {

std::string mpfr_decimal(mpfr_srcptr v, int digits) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v) < 0) return "nan";
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

int roundtrip_digits(mpfr_prec_t prec) {
  // ceil(prec * log10(2)) + 2 decimal digits reproduce the binary value
  return static_cast<int>(static_cast<double>(prec) * 0.30103) + 3;
}

}  // namespace

std::string HPReal::str() const { return mpfr_decimal(v_, roundtrip_digits(prec())); }

std::string HPReal::str(int digits) const { return mpfr_decimal(v_, digits); }

std::string HPComplex::str() const { return re.str() + " + " + im.str() + "*I"; }

std::string HPComplex::str(int digits) const {
  return re.str(digits) + " + " + im.str(digits) + "*I";
}

bool approx_equal(const HPReal& a, const HPReal& b, const HPReal& tol) {
  if (a.is_nan() || b.is_nan()) return false;
  HPReal scale = max(HPReal::of(1, tol.prec()), max(abs(a), abs(b)));
  return abs(a - b) <= tol * scale;
}

bool approx_equal(const HPComplex& a, const HPComplex& b, const HPReal& tol) {
  if (a.is_nan() || b.is_nan()) return false;
  HPReal scale = max(HPReal::of(1, tol.prec()), max(abs(a), abs(b)));
  return abs(a - b) <= tol * scale;
}

HPComplex complex_pow_int(const HPComplex& base, long n) {
  mpfr_prec_t p = base.prec();
  if (n == 0) return HPComplex::of(1, 0, p);
  if (n < 0 && base.is_zero()) throw ZeroToNegativePower("complex_pow_int: 0^negative");
  HPComplex acc = HPComplex::of(1, 0, p);
  HPComplex sq = base;
  unsigned long m = static_cast<unsigned long>(n > 0 ? n : -n);
  while (m) {
    if (m & 1) acc = acc * sq;
    if (m >>= 1) sq = sq * sq;
  }
  if (n < 0) acc = reciprocal(acc);
  return acc;
}

namespace {

struct RealConstants {
  HPReal pi, lem, lem6, s3;
};

RealConstants compute_reals(mpfr_prec_t wp) {
  RealConstants c{HPReal(wp), HPReal(wp), HPReal(wp), HPReal(wp)};
  c.pi = HPReal::pi(wp);
  HPReal g14 = gamma(HPReal::of(rat(1, 4), wp));
  c.lem = g14 * g14 / (sqrt(ldexp2(c.pi, 1)) * 2);
  HPReal g13 = gamma(HPReal::of(rat(1, 3), wp));
  HPReal cbrt2(wp);
  mpfr_rootn_ui(cbrt2.raw(), HPReal::of(2, wp).raw(), 3, MPFR_RNDN);
  c.lem6 = g13 * g13 * g13 / (ldexp2(cbrt2, 1) * c.pi);  // 2^(4/3) = 2*cbrt(2)
  c.s3 = sqrt(HPReal::of(3, wp));
  return c;
}

void certify(const HPReal& a, const HPReal& b, long bits, const char* what) {
  HPReal bound = ldexp2(max(HPReal::of(1, a.prec()), abs(a)), -bits + 4);
  if (!(abs(a - b) <= bound))
    throw ConfigError(std::string("constant certification failed for ") + what);
}

}  // namespace

HPReal Constants::tol10(int digits) const {
  return pow_si(HPReal::of(10, wp()), -digits);
}

Constants make_constants(const PrecisionConfig& cfg) {
  if (cfg.bits < 64 || cfg.guard_bits < 16)
    throw ConfigError("make_constants: invalid PrecisionConfig");
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(cfg.working());
  RealConstants lo = compute_reals(wp);
  RealConstants hi = compute_reals(wp + 64);
  certify(lo.pi, hi.pi, cfg.bits, "pi");
  certify(lo.lem, hi.lem, cfg.bits, "lemniscate");
  certify(lo.lem6, hi.lem6, cfg.bits, "lemniscate6");
  certify(lo.s3, hi.s3, cfg.bits, "sqrt3");
  // independent route: lemniscate = pi / AGM(1, sqrt 2)
  HPReal via_agm = lo.pi / agm(HPReal::of(1, wp), sqrt(HPReal::of(2, wp)));
  certify(lo.lem, via_agm, cfg.bits, "lemniscate (AGM cross-check)");

  Constants C{cfg,
              lo.pi,
              lo.lem,
              lo.lem6,
              lo.s3,
              HPComplex(HPReal::of(rat(-1, 2), wp), lo.s3 / 2),
              HPComplex::i_unit(wp)};
  return C;
}

}  // namespace hsze
