#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "hsze/errors.hpp"
#include "hsze/rational.hpp"

namespace hsze {

// Working-precision policy shared by every analytic evaluator. All internal
// arithmetic runs at bits + guard_bits; series terms below trunc_threshold()
// relative to the accumulated magnitude are discarded.
struct PrecisionConfig {
  long bits = 256;
  long guard_bits = 32;

  static PrecisionConfig make(long bits, long guard_bits = 32) {
    if (bits < 64) throw ConfigError("PrecisionConfig: bits must be >= 64");
    if (guard_bits < 16) throw ConfigError("PrecisionConfig: guard_bits must be >= 16");
    return PrecisionConfig{bits, guard_bits};
  }
  long working() const { return bits + guard_bits; }
};

// Thin RAII wrapper over one mpfr_t. Every value carries its own precision;
// binary operations compute at the larger operand precision, round-to-nearest.
class HPReal {
 public:
  HPReal() {
    mpfr_init2(v_, 64);
    mpfr_set_nan(v_);
  }
  explicit HPReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }
  HPReal(const HPReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HPReal() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static HPReal of(long value, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
  }
  static HPReal of(const Rational& q, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static HPReal of(const Integer& z, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static HPReal of_double(double d, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static HPReal of_string(const std::string& s, mpfr_prec_t prec) {
    HPReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw ConfigError("bad numeric literal: '" + s + "'");
    return r;
  }
  // 2^e, exact
  static HPReal pow2(long e, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }
  static HPReal pi(mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static HPReal nan(mpfr_prec_t prec) { return HPReal(prec); }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // binary exponent of the magnitude; very negative for zero
  long exponent() const { return is_zero() || is_nan() ? mpfr_get_emin() : mpfr_get_exp(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  friend HPReal operator+(const HPReal& a, const HPReal& b) { return bin(mpfr_add, a, b); }
  friend HPReal operator-(const HPReal& a, const HPReal& b) { return bin(mpfr_sub, a, b); }
  friend HPReal operator*(const HPReal& a, const HPReal& b) { return bin(mpfr_mul, a, b); }
  friend HPReal operator/(const HPReal& a, const HPReal& b) { return bin(mpfr_div, a, b); }
  friend HPReal operator+(const HPReal& a, long b) { return bin_si(mpfr_add_si, a, b); }
  friend HPReal operator-(const HPReal& a, long b) { return bin_si(mpfr_sub_si, a, b); }
  friend HPReal operator*(const HPReal& a, long b) { return bin_si(mpfr_mul_si, a, b); }
  friend HPReal operator/(const HPReal& a, long b) { return bin_si(mpfr_div_si, a, b); }
  friend HPReal operator-(const HPReal& a) {
    HPReal r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  HPReal& operator+=(const HPReal& o) {
    grow(o.prec());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  HPReal& operator-=(const HPReal& o) {
    grow(o.prec());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  HPReal& operator*=(const HPReal& o) {
    grow(o.prec());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  HPReal& operator/=(const HPReal& o) {
    grow(o.prec());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const HPReal& a, const HPReal& b) { return !(a == b); }
  friend bool operator<(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator==(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  // Full-precision decimal string (round-trippable at this precision).
  std::string str() const;
  // Shorter display form with the given significant digit count.
  std::string str(int digits) const;

 private:
  template <typename F>
  static HPReal bin(F f, const HPReal& a, const HPReal& b) {
    HPReal r(std::max(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <typename F>
  static HPReal bin_si(F f, const HPReal& a, long b) {
    HPReal r(a.prec());
    f(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  void grow(mpfr_prec_t p) {
    if (prec() < p) mpfr_prec_round(v_, p, MPFR_RNDN);
  }
  mpfr_t v_;
};

inline HPReal abs(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal sqrt(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal exp(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal log(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal sin(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal cos(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal sinh(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal cosh(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal gamma(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline HPReal agm(const HPReal& a, const HPReal& b) {
  HPReal r(std::max(a.prec(), b.prec()));
  mpfr_agm(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline HPReal pow_si(const HPReal& a, long e) {
  HPReal r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline HPReal ldexp2(const HPReal& a, long e) {
  HPReal r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline HPReal floor(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}
inline HPReal round_nearest(const HPReal& a) {
  HPReal r(a.prec());
  mpfr_round(r.raw(), a.raw());
  return r;
}
inline HPReal max(const HPReal& a, const HPReal& b) { return a >= b ? a : b; }

// Caller-supplied tolerance comparison used everywhere a numeric identity is
// checked: |a-b| <= tol * max(1, |a|, |b|).
bool approx_equal(const HPReal& a, const HPReal& b, const HPReal& tol);

struct HPComplex {
  HPReal re, im;

  HPComplex() = default;
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit HPComplex(mpfr_prec_t prec) : re(prec), im(prec) {}

  static HPComplex of(long r, long i, mpfr_prec_t prec) {
    return HPComplex(HPReal::of(r, prec), HPReal::of(i, prec));
  }
  static HPComplex of(const Rational& r, const Rational& i, mpfr_prec_t prec) {
    return HPComplex(HPReal::of(r, prec), HPReal::of(i, prec));
  }
  static HPComplex real(HPReal r) {
    HPReal z(r.prec());
    mpfr_set_zero(z.raw(), 1);
    return HPComplex(std::move(r), std::move(z));
  }
  static HPComplex zero(mpfr_prec_t prec) { return of(0, 0, prec); }
  static HPComplex i_unit(mpfr_prec_t prec) { return of(0, 1, prec); }

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_nan() const { return re.is_nan() || im.is_nan(); }

  HPComplex conj() const { return HPComplex(re, -im); }

  friend HPComplex operator+(const HPComplex& a, const HPComplex& b) {
    return HPComplex(a.re + b.re, a.im + b.im);
  }
  friend HPComplex operator-(const HPComplex& a, const HPComplex& b) {
    return HPComplex(a.re - b.re, a.im - b.im);
  }
  friend HPComplex operator-(const HPComplex& a) { return HPComplex(-a.re, -a.im); }
  friend HPComplex operator*(const HPComplex& a, const HPComplex& b) {
    return HPComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend HPComplex operator*(const HPComplex& a, const HPReal& s) {
    return HPComplex(a.re * s, a.im * s);
  }
  friend HPComplex operator*(const HPReal& s, const HPComplex& a) { return a * s; }
  friend HPComplex operator/(const HPComplex& a, const HPComplex& b) {
    HPReal d = b.re * b.re + b.im * b.im;
    return HPComplex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
  friend HPComplex operator/(const HPComplex& a, const HPReal& s) {
    return HPComplex(a.re / s, a.im / s);
  }
  HPComplex& operator+=(const HPComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  HPComplex& operator-=(const HPComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  HPComplex& operator*=(const HPComplex& o) {
    *this = *this * o;
    return *this;
  }

  std::string str() const;
  std::string str(int digits) const;
};

inline HPComplex reciprocal(const HPComplex& a) {
  HPReal d = a.re * a.re + a.im * a.im;
  return HPComplex(a.re / d, -a.im / d);
}
inline HPReal abs(const HPComplex& a) {
  HPReal r(a.prec());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return r;
}
// cheap magnitude bound |re| + |im| (within sqrt(2) of |a|); fine for
// truncation decisions.
inline HPReal abs1(const HPComplex& a) { return abs(a.re) + abs(a.im); }

inline HPComplex ldexp2(const HPComplex& a, long e) {
  return HPComplex(ldexp2(a.re, e), ldexp2(a.im, e));
}
inline HPComplex exp(const HPComplex& a) {
  HPReal m = exp(a.re);
  return HPComplex(m * cos(a.im), m * sin(a.im));
}
inline HPComplex sin(const HPComplex& a) {
  return HPComplex(sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im));
}
inline HPComplex sinh(const HPComplex& a) {
  return HPComplex(sinh(a.re) * cos(a.im), cosh(a.re) * sin(a.im));
}
inline HPComplex cosh(const HPComplex& a) {
  return HPComplex(cosh(a.re) * cos(a.im), sinh(a.re) * sin(a.im));
}

// Exact integer power by repeated squaring; n=0 gives 1. Negative n on a zero
// base raises ZeroToNegativePower.
HPComplex complex_pow_int(const HPComplex& base, long n);

bool approx_equal(const HPComplex& a, const HPComplex& b, const HPReal& tol);

// Certified constants. make_constants computes each value at the working
// precision, recomputes at +64 bits, and cross-checks the lemniscate constant
// against the independent pi/AGM(1, sqrt 2) route; disagreement beyond
// 2^(-bits+4) raises ConfigError.
struct Constants {
  PrecisionConfig cfg;
  HPReal pi;
  HPReal lemniscate;   // Gamma(1/4)^2 / (2 sqrt(2 pi)) = 2.622057...
  HPReal lemniscate6;  // Gamma(1/3)^3 / (2^(4/3) pi)   = 2.428650648...
  HPReal sqrt3;
  HPComplex rho;  // (-1 + i sqrt 3)/2
  HPComplex imag_unit;

  mpfr_prec_t wp() const { return static_cast<mpfr_prec_t>(cfg.working()); }
  HPReal trunc_threshold() const { return HPReal::pow2(-cfg.working(), wp()); }
  HPReal tol10(int digits) const;  // 10^-digits at working precision
};

Constants make_constants(const PrecisionConfig& cfg);

}  // namespace hsze
