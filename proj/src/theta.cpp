#include "hsze/theta.hpp"

#include <cmath>
#include <cstdlib>

#include "hsze/bernoulli.hpp"
#include "hsze/errors.hpp"

namespace hsze {

namespace {

constexpr long kThetaTermCap = 200000;

HPComplex mul_i(const HPComplex& c) { return HPComplex(-c.im, c.re); }

// i^p c, p >= 0
HPComplex mul_ipow(const HPComplex& c, long p) {
  switch (p % 4) {
    case 0: return c;
    case 1: return mul_i(c);
    case 2: return -c;
    default: return HPComplex(c.im, -c.re);
  }
}

// sum of exp(a (n+1/2)^2 + b (n+1/2)) (-1)^n (2 pi i (n+1/2))^d over n,
// a = pi i tau, b = 2 pi i z; window centred at the magnitude peak
HPComplex theta_sum(const HPComplex& a, const HPComplex& b, long n0, long d,
                    mpfr_prec_t wp, const HPReal& pi) {
  HPComplex q2 = exp(ldexp2(a, 1));
  HPReal nu0 = ldexp2(HPReal::of(2 * n0 + 1, wp), -1);
  HPComplex g0 = exp(a * (nu0 * nu0) + b * nu0);
  if (n0 & 1) g0 = -g0;
  HPComplex rho0 = -exp(ldexp2(a, 1) * HPReal::of(n0 + 1, wp) + b);

  HPReal two_pi = ldexp2(pi, 1);
  auto term_of = [&](const HPComplex& g, long n) {
    if (d == 0) return g;
    HPReal p = two_pi * ldexp2(HPReal::of(2 * n + 1, wp), -1);
    HPReal f = p;
    for (long j = 1; j < d; ++j) f = f * p;
    return mul_ipow(g * f, d);
  };

  HPComplex sum = term_of(g0, n0);
  HPReal maxmag = abs1(sum);

  for (int dir = 0; dir < 2; ++dir) {
    HPComplex g = g0, rho = rho0;
    long small = 0, steps = 0;
    bool done = false;
    for (long n = dir == 0 ? n0 + 1 : n0 - 1; std::abs(n - n0) <= kThetaTermCap;
         n += dir == 0 ? 1 : -1) {
      if (dir == 0) {
        g = g * rho;
        rho = rho * q2;
      } else {
        rho = rho / q2;
        g = g / rho;
      }
      HPComplex t = term_of(g, n);
      sum += t;
      ++steps;
      HPReal m = abs1(t);
      if (m > maxmag) maxmag = m;
      if (m < ldexp2(maxmag, -(long)(wp + 10))) {
        if (++small >= 3 && steps >= 4) {
          done = true;
          break;
        }
      } else {
        small = 0;
      }
    }
    if (!done) throw NonconvergentTau("theta: series did not converge");
  }
  // overall -i
  return HPComplex(sum.im, -sum.re);
}

HPComplex theta_series(const HPComplex& z, const HPComplex& tau, long d,
                       mpfr_prec_t wp, const HPReal& pi) {
  HPComplex a(-(pi * tau.im), pi * tau.re);
  HPComplex b(-(ldexp2(pi, 1) * z.im), ldexp2(pi, 1) * z.re);
  double peak = -z.im.to_double() / tau.im.to_double() - 0.5;
  long n0 = std::lround(peak);
  return theta_sum(a, b, n0, d, wp, pi);
}

bool near_int(const HPReal& v, mpfr_prec_t wp) {
  return abs(v - round_nearest(v)) < HPReal::pow2(-(long)(wp / 2), wp);
}

}  // namespace

HPComplex theta(const HPComplex& z, const HPComplex& tau, long deriv,
                const Constants& C) {
  if (deriv < 0 || deriv > 3) throw ConfigError("theta: derivative order must be 0..3");
  mpfr_prec_t wp = C.wp() + 64;
  if (!(tau.im > HPReal::of(0, wp)))
    throw NonconvergentTau("theta: Im tau must be positive");
  HPReal pi = HPReal::pi(wp);

  double bd = z.im.to_double() / tau.im.to_double();
  if (std::abs(bd) <= 1.25) return theta_series(z, tau, deriv, wp, pi);

  // shift z by -k tau so the series window is short again
  long k = std::lround(bd);
  HPReal kr = HPReal::of(k, wp);
  HPComplex zr = z - tau * kr;
  HPComplex a(-(pi * tau.im), pi * tau.re);
  HPComplex b(-(ldexp2(pi, 1) * z.im), ldexp2(pi, 1) * z.re);
  HPComplex pref = exp(a * (kr * kr) - b * kr);  // e^{pi i k^2 tau - 2 pi i k z}
  if (k & 1) pref = -pref;

  HPReal two_pi_k = ldexp2(pi, 1) * kr;
  HPComplex acc = HPComplex::zero(wp);
  for (long j = 0; j <= deriv; ++j) {
    // (-2 pi i k)^{deriv-j} = (2 pi k)^{deriv-j} (-i)^{deriv-j}
    long p = deriv - j;
    HPReal f = HPReal::of(binomial(deriv, j), wp);
    for (long q = 0; q < p; ++q) f = f * two_pi_k;
    acc += mul_ipow(theta_series(zr, tau, j, wp, pi) * f, 3 * p);
  }
  return pref * acc;
}

HPComplex theta_prime0_product(const HPComplex& tau, const Constants& C) {
  mpfr_prec_t wp = C.wp() + 64;
  if (!(tau.im > HPReal::of(0, wp)))
    throw NonconvergentTau("theta_prime0_product: Im tau must be positive");
  HPReal pi = HPReal::pi(wp);
  HPComplex a(-(pi * tau.im), pi * tau.re);  // pi i tau
  HPComplex q = exp(ldexp2(a, 1));           // e^{2 pi i tau}
  HPComplex one = HPComplex::of(1, 0, wp);
  HPComplex prod = one;
  HPComplex qp = q;
  HPReal floorv = HPReal::pow2(-(long)(wp + 16), wp);
  for (long n = 1; n <= kThetaTermCap; ++n) {
    HPComplex factor = one - qp;
    prod = prod * (factor * factor * factor);
    qp = qp * q;
    if (abs1(qp) < floorv) break;
    if (n == kThetaTermCap)
      throw NonconvergentTau("theta_prime0_product: product did not converge");
  }
  return exp(ldexp2(a, -2)) * prod * ldexp2(pi, 1);
}

HPComplex gen_E(const HPComplex& xi, const TwistParams& t, const LatticeBasis& basis,
                const Constants& C) {
  mpfr_prec_t wp = C.wp();
  // real lattice coordinates of xi
  HPReal det = basis.w1.re * basis.w2.im - basis.w1.im * basis.w2.re;
  HPReal al = (xi.re * basis.w2.im - xi.im * basis.w2.re) / det;
  HPReal be = (basis.w1.re * xi.im - basis.w1.im * xi.re) / det;
  if (near_int(al, wp) && near_int(be, wp))
    throw PoleHit("gen_E: xi lies on the period lattice");

  HPComplex u = xi / basis.w1;
  if (t.origin_xy()) {
    HPComplex ratio = theta(u, basis.tau, 1, C) / theta(u, basis.tau, 0, C);
    HPComplex extra = mul_i(xi) * ldexp2(C.pi, 1) / (basis.w1 * basis.w2);
    return ratio / basis.w1 + extra;
  }

  HPReal xr = HPReal::of(t.x, wp);
  HPComplex v = basis.tau * xr - HPComplex::real(HPReal::of(t.y, wp));
  HPComplex pref = exp(mul_i(u) * (ldexp2(C.pi, 1) * xr));  // e^{2 pi i x xi / w1}
  HPComplex tp0 = theta(HPComplex::zero(wp), basis.tau, 1, C);
  HPComplex num = theta(u + v, basis.tau, 0, C);
  HPComplex den = theta(u, basis.tau, 0, C) * theta(v, basis.tau, 0, C);
  return (pref / basis.w1) * tp0 * num / den;
}

HPComplex gen_F(const HPComplex& xi, const Rational& z, const HPComplex& omega2,
                long deriv, const Constants& C) {
  if (deriv < 0) throw ConfigError("gen_F: negative derivative order");
  mpfr_prec_t wp = C.wp();
  HPComplex ratio = xi / omega2;
  if (near_int(ratio.re, wp) && abs(ratio.im) < HPReal::pow2(-(long)(wp / 2), wp))
    throw PoleHit("gen_F: xi lies on w2 Z");

  HPComplex w = mul_i(HPComplex::real(ldexp2(C.pi, 1))) / omega2;
  HPComplex wxi = w * xi;
  HPComplex one = HPComplex::of(1, 0, wp);
  HPComplex h = one / (exp(wxi) - one);
  auto P = kernel_deriv_poly(deriv, z);
  HPComplex val = HPComplex::real(HPReal::of(P.back(), wp));
  for (long i = (long)P.size() - 2; i >= 0; --i)
    val = val * h + HPComplex::real(HPReal::of(P[i], wp));
  return complex_pow_int(w, deriv + 1) * exp(wxi * HPReal::of(z, wp)) * val;
}

LaurentExpansion laurent_coeffs(const std::function<HPComplex(const HPComplex&)>& f,
                                long pole_order, long count, const HPReal& radius,
                                const Constants& C) {
  if (pole_order < 0) throw ConfigError("laurent_coeffs: negative pole order");
  if (count < 1) throw ConfigError("laurent_coeffs: count must be positive");
  mpfr_prec_t wp = C.wp();
  if (!(radius > HPReal::of(0, wp)))
    throw ConfigError("laurent_coeffs: radius must be positive");

  HPReal tol = HPReal::pow2(-(C.cfg.bits + C.cfg.guard_bits / 2), wp);
  HPReal two_pi = ldexp2(C.pi, 1);
  std::vector<HPComplex> acc(count, HPComplex::zero(wp));
  HPReal max_f = HPReal::of(0, wp);

  auto add_sample = [&](long num, long den) {
    HPReal ang = two_pi * HPReal::of(num, wp) / HPReal::of(den, wp);
    HPComplex xi(radius * cos(ang), radius * sin(ang));
    HPComplex val = f(xi);
    HPReal m = abs1(val);
    if (m > max_f) max_f = m;
    HPComplex p = complex_pow_int(xi, pole_order);
    HPComplex inv = HPComplex::of(1, 0, wp) / xi;
    for (long t = 0; t < count; ++t) {
      acc[t] += val * p;
      p = p * inv;
    }
  };

  long N = 64;
  for (long j = 0; j < N; ++j) add_sample(j, N);
  std::vector<HPComplex> prev;
  for (int pass = 0; pass <= 12; ++pass) {
    std::vector<HPComplex> cur(count, HPComplex::zero(wp));
    HPReal nr = HPReal::of(1, wp) / HPReal::of(N, wp);
    for (long t = 0; t < count; ++t) cur[t] = acc[t] * nr;
    if (!prev.empty()) {
      bool ok = true;
      for (long t = 0; t < count && ok; ++t) {
        HPReal diff = abs1(cur[t] - prev[t]);
        // the arithmetic noise floor for this coefficient never shrinks
        // under doubling, so accept once the change is at that level
        HPReal noise = max_f * pow_si(radius, pole_order - t);
        HPReal bound = max(tol * max(HPReal::of(1, wp), abs1(cur[t])), ldexp2(noise * tol, 24));
        if (diff > bound) ok = false;
      }
      if (ok) return LaurentExpansion{-pole_order, std::move(cur), radius};
    }
    if (pass == 12) break;
    for (long j = 0; j < N; ++j) add_sample(2 * j + 1, 2 * N);
    prev = std::move(cur);
    N *= 2;
  }
  throw QuadratureNonconvergence("laurent_coeffs: trapezoid sums did not stabilise");
}

HPComplex hurwitz_function(long k, const Rational& x, const Rational& y,
                           const LatticeBasis& basis, const Constants& C) {
  if (k < 0) throw ConfigError("hurwitz_function: negative order");
  if (k < 3) return hurwitz_upto(2, x, y, basis, C)[k];
  return hurwitz_upto(k, x, y, basis, C)[k];
}

std::vector<HPComplex> hurwitz_upto(long kmax, const Rational& x, const Rational& y,
                                    const LatticeBasis& basis, const Constants& C) {
  if (kmax < 0) throw ConfigError("hurwitz_upto: negative order");
  TwistParams t = TwistParams::make(x, y, rat(0));
  mpfr_prec_t wp = C.wp();
  std::vector<HPComplex> out(kmax + 1, HPComplex::zero(wp));
  out[0] = HPComplex::of(1, 0, wp);
  if (kmax == 0) return out;

  bool origin = t.origin_xy();
  HPComplex w1sq = basis.w1 * basis.w1;
  if (origin) {
    if (kmax >= 2) {
      // 4 pi i w1/w2 + 2 theta'''(0)/(3 theta'(0)), all over w1^2
      HPComplex t3 = theta(HPComplex::zero(wp), basis.tau, 3, C);
      HPComplex t1 = theta(HPComplex::zero(wp), basis.tau, 1, C);
      HPComplex lead = mul_i(basis.w1 / basis.w2) * ldexp2(C.pi, 2);
      HPComplex corr = (t3 / t1) * HPReal::of(rat(2, 3), wp);
      out[2] = (lead + corr) / w1sq;
    }
  } else {
    HPReal xr = HPReal::of(t.x, wp);
    HPComplex v = basis.tau * xr - HPComplex::real(HPReal::of(t.y, wp));
    HPComplex th0 = theta(v, basis.tau, 0, C);
    HPComplex logd = theta(v, basis.tau, 1, C) / th0;
    HPComplex two_pi_ix = mul_i(HPComplex::real(ldexp2(C.pi, 1) * xr));
    out[1] = (two_pi_ix + logd) / basis.w1;
    if (kmax >= 2) {
      HPComplex t1 = theta(HPComplex::zero(wp), basis.tau, 1, C);
      HPComplex t3 = theta(HPComplex::zero(wp), basis.tau, 3, C);
      HPComplex acc = two_pi_ix * two_pi_ix;
      acc += ldexp2(two_pi_ix, 1) * logd;
      acc += theta(v, basis.tau, 2, C) / th0;
      acc -= (t3 / t1) * HPReal::of(rat(1, 3), wp);
      out[2] = acc / w1sq;
    }
  }
  if (kmax < 3) return out;

  HPReal radius = ldexp2(basis.min_distance(), -2);
  auto E = [&](const HPComplex& xi) { return gen_E(xi, t, basis, C); };
  auto L = laurent_coeffs(E, 1, kmax + 1, radius, C);
  for (long k = 3; k <= kmax; ++k)
    out[k] = L.coeff(k - 1) * HPReal::of(factorial(k), wp);
  return out;
}

HPComplex hurwitz_number(long k, const LatticeBasis& basis, const Constants& C) {
  if (k < 2) throw ConfigError("hurwitz_number: order must be >= 2");
  return hurwitz_function(k, rat(0), rat(0), basis, C);
}

namespace {

struct KParts {
  long r;
  TwistParams t;
  Rational alpha;  // fractional part of y + r z
  HPReal radius;
  std::vector<HPComplex> D_low;  // orders -r-1 .. -1
};

KParts make_k_parts(long r, const TwistParams& t, const LatticeBasis& basis,
                    const Constants& C) {
  if (r < 1) throw ConfigError("gen_K: r must be >= 1");
  KParts P;
  P.r = r;
  P.t = t;
  P.alpha = frac_int_parts(t.y + Rational(r) * t.z).frac_part;
  HPReal rad = basis.min_distance();
  HPReal aw2 = abs(basis.w2);
  if (aw2 < rad) rad = aw2;
  P.radius = ldexp2(rad, -2);
  auto D = [&](const HPComplex& xi) {
    return gen_E(xi, t, basis, C) *
           complex_pow_int(gen_F(xi, t.z, basis.w2, 0, C), r);
  };
  auto L = laurent_coeffs(D, r + 1, r + 1, P.radius, C);
  for (long l = 0; l <= r; ++l) P.D_low.push_back(L.coeff(l - r - 1));
  return P;
}

HPComplex k_value(const KParts& P, const LatticeBasis& basis, const HPComplex& xi,
                  const Constants& C) {
  HPComplex val = gen_E(xi, P.t, basis, C) *
                  complex_pow_int(gen_F(xi, P.t.z, basis.w2, 0, C), P.r);
  for (long j = 0; j <= P.r; ++j) {
    HPComplex corr = P.D_low[P.r - j] * gen_F(xi, P.alpha, basis.w2, j, C);
    corr = corr / HPReal::of(factorial(j), C.wp());
    if (j & 1)
      val += corr;
    else
      val -= corr;
  }
  return val;
}

}  // namespace

HPComplex gen_K(const HPComplex& xi, long r, const TwistParams& t,
                const LatticeBasis& basis, const Constants& C) {
  if (t.origin_xy() && t.z == 1) {
    TwistParams t0 = TwistParams::make(rat(0), rat(0), rat(0));
    HPComplex v = gen_K(-xi, r, t0, basis, C);
    return (r % 2 == 0) ? -v : v;  // (-1)^{r+1}
  }
  if (xi.is_zero()) return K_coeffs_upto(1, r, t, basis, C)[1];
  auto P = make_k_parts(r, t, basis, C);
  return k_value(P, basis, xi, C);
}

std::vector<HPComplex> K_coeffs_upto(long kmax, long r, const TwistParams& t,
                                     const LatticeBasis& basis, const Constants& C) {
  if (kmax < 1) throw ConfigError("K_coeffs_upto: kmax must be >= 1");
  if (t.origin_xy() && t.z == 1) {
    TwistParams t0 = TwistParams::make(rat(0), rat(0), rat(0));
    auto out = K_coeffs_upto(kmax, r, t0, basis, C);
    for (long k = 1; k <= kmax; ++k)
      if ((k + r) % 2 != 0) out[k] = -out[k];
    return out;
  }
  auto P = make_k_parts(r, t, basis, C);
  auto fK = [&](const HPComplex& xi) { return k_value(P, basis, xi, C); };
  auto L = laurent_coeffs(fK, 0, kmax, P.radius, C);
  std::vector<HPComplex> out(kmax + 1, HPComplex::zero(C.wp()));
  for (long k = 1; k <= kmax; ++k)
    out[k] = L.coeff(k - 1) * HPReal::of(factorial(k), C.wp());
  return out;
}

HPComplex K_coeff(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                  const Constants& C) {
  return K_coeffs_upto(k, r, t, basis, C)[k];
}

}  // namespace hsze
