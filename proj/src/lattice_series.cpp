#include "hsze/lattice_series.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "hsze/bernoulli.hpp"
#include "hsze/errors.hpp"

namespace hsze {

namespace {

constexpr long kRowPairQuietNeeded = 2;

HPComplex mul_i(const HPComplex& a) { return HPComplex(-a.im, a.re); }

bool near_integer(const HPReal& v, mpfr_prec_t wp) {
  return abs(v - round_nearest(v)) < HPReal::pow2(-static_cast<long>(wp) / 2, v.prec());
}

bool is_real_integer_point(const HPComplex& b, mpfr_prec_t wp) {
  HPReal thr = HPReal::pow2(-static_cast<long>(wp) / 2, b.prec());
  return abs(b.im) < thr && near_integer(b.re, wp);
}

// shared kernel of Phi and its beta-derivatives:
//   d^j Phi / d beta^j = c^{j+1} e^{c beta u} P_j(h),
// c = 2 pi i, h = 1/(e^{c beta} - 1), u = 1 - {alpha}.
struct PhiKernel {
  HPComplex c, h, eu;
  Rational u;
};

PhiKernel phi_kernel(const Rational& alpha, const HPComplex& beta, const Constants& C) {
  mpfr_prec_t wp = C.wp();
  if (is_real_integer_point(beta, wp))
    throw IllegalLerchPoint("lerch_phi: beta is an integer (row pole)");
  PhiKernel k;
  k.u = Rational(1) - frac_int_parts(alpha).frac_part;
  k.c = mul_i(HPComplex::real(ldexp2(C.pi, 1)));
  HPComplex cb = k.c * beta;
  k.h = reciprocal(exp(cb) - HPComplex::of(1, 0, wp));
  k.eu = exp(cb * HPReal::of(k.u, wp));
  return k;
}

// evaluates P_j(h) with the exact coefficient vector of kernel_deriv_poly
HPComplex eval_kernel_poly(long j, const Rational& u, const HPComplex& h, mpfr_prec_t wp) {
  std::vector<Rational> p = kernel_deriv_poly(j, u);
  HPComplex acc = HPComplex::zero(wp);
  for (std::size_t t = p.size(); t-- > 0;) {
    acc = acc * h;
    if (!(p[t] == 0)) acc += HPComplex::of(p[t], Rational(0), wp);
  }
  return acc;
}

// Euler-Maclaurin tail: sum over n >= N of (beta + n)^{-k}, k >= 2. thr is the
// absolute magnitude at which correction terms may be dropped.
HPComplex em_tail(const HPComplex& beta, long N, long k, const HPReal& thr, mpfr_prec_t wp,
                  long* terms) {
  HPComplex bp = beta + HPComplex::of(N, 0, wp);
  HPComplex inv = reciprocal(bp);
  HPComplex f0 = complex_pow_int(bp, -k);
  HPComplex total = complex_pow_int(bp, 1 - k) / HPReal::of(k - 1, wp) + ldexp2(f0, -1);
  HPComplex pw = f0 * inv;  // bp^{-(k+1)}
  Integer rising = k;       // (k)_{2j-1} at j = 1
  HPReal prev = abs1(total) + HPReal::of(1, wp);
  for (long j = 1; j <= 400; ++j) {
    Rational coef = bernoulli_number(2 * j) * Rational(rising) / Rational(factorial(2 * j));
    HPComplex term = pw * HPReal::of(coef, wp);
    HPReal mag = abs1(term);
    // asymptotic series: stop at the smallest term
    if (j > 1 && mag >= prev) break;
    total += term;
    if (terms) ++*terms;
    if (mag < thr) break;
    prev = mag;
    pw = pw * inv * inv;
    rising *= Integer(k + 2 * j - 1) * Integer(k + 2 * j);
  }
  return total;
}

HPComplex inner_row_integral_alpha(long k, const HPComplex& beta, const Constants& C,
                                   const HPReal* abs_floor, long* terms) {
  mpfr_prec_t wp = C.wp();
  if (is_real_integer_point(beta, wp))
    throw IllegalLerchPoint("inner_row_sum: beta is an integer (row pole)");
  if (k == 1) {
    // symmetric limit of the harmonic row: pi cot(pi beta)
    HPComplex pb = beta * C.pi;
    if (terms) *terms += 1;
    return HPComplex::real(C.pi) * (cosh(mul_i(pb)) / sin(pb));
  }
  double reb = std::abs(beta.re.to_double());
  long N = static_cast<long>(std::ceil(0.1103 * static_cast<double>(wp))) + 16 +
           static_cast<long>(std::ceil(reb));
  HPComplex direct = HPComplex::zero(wp);
  HPReal maxdir = HPReal::of(0, wp);
  HPComplex w = beta - HPComplex::of(N - 1, 0, wp);
  for (long n = -(N - 1); n <= N - 1; ++n) {
    HPComplex t = complex_pow_int(w, -k);
    direct += t;
    maxdir = max(maxdir, abs1(t));
    w += HPComplex::of(1, 0, wp);
    if (terms) ++*terms;
  }
  HPReal thr = ldexp2(maxdir, -static_cast<long>(wp) - 8);
  if (abs_floor) thr = max(thr, *abs_floor);
  HPComplex tail_hi = em_tail(beta, N, k, thr, wp, terms);
  HPComplex tail_lo = em_tail(-beta, N, k, thr, wp, terms);
  if (k % 2) tail_lo = -tail_lo;
  return direct + tail_hi + tail_lo;
}

// row-sum machinery shared by the Eisenstein-type accelerated sums: accumulate
// weight(m) * w2^{-k} * inner_row_sum(k, alpha, m * w1/w2) over m = 1, 2, ...
// in +/- pairs until two consecutive pairs fall below the relative threshold.
struct RowAccum {
  HPComplex total;
  HPReal last_pair;
  long terms = 0;
  long rows = 0;
  bool converged = false;
};

template <typename RowFn>
RowAccum accumulate_rows(HPComplex seed, long max_m, const HPReal& stop_rel, mpfr_prec_t wp,
                         RowFn&& row) {
  RowAccum acc;
  acc.total = std::move(seed);
  acc.last_pair = HPReal::of(0, wp);
  long quiet = 0;
  for (long m = 1; m <= max_m; ++m) {
    HPComplex pair = row(m, acc) + row(-m, acc);
    acc.total += pair;
    acc.rows += 2;
    acc.last_pair = abs1(pair);
    HPReal thr = stop_rel * max(HPReal::of(1, wp), abs1(acc.total));
    if (acc.last_pair <= thr) {
      if (++quiet >= kRowPairQuietNeeded) {
        acc.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  return acc;
}

}  // namespace

HPComplex lerch_phi(const Rational& alpha, const HPComplex& beta, const Constants& C) {
  PhiKernel k = phi_kernel(alpha, beta, C);
  return k.c * k.eu * k.h;
}

HPComplex inner_row_sum(long k, const Rational& alpha, const HPComplex& beta,
                        const Constants& C, const HPReal* abs_floor, long* terms) {
  if (k < 1) throw ConfigError("inner_row_sum: order k must be >= 1");
  mpfr_prec_t wp = C.wp();
  if (is_integer(alpha)) return inner_row_integral_alpha(k, beta, C, abs_floor, terms);
  PhiKernel kern = phi_kernel(alpha, beta, C);
  HPComplex val =
      complex_pow_int(kern.c, k) * kern.eu * eval_kernel_poly(k - 1, kern.u, kern.h, wp);
  Rational fac(factorial(static_cast<unsigned long>(k - 1)));
  if (k % 2 == 0) fac = -fac;  // (-1)^{k-1}
  if (terms) *terms += k;
  return val / HPReal::of(fac, wp);
}

SeriesResult eisenstein_G(long k, const LatticeBasis& basis, const Constants& C,
                          const TruncationPolicy& policy) {
  if (k < 2) throw ConfigError("eisenstein_G: order must be >= 2");
  mpfr_prec_t wp = C.wp();
  HPComplex w2k = complex_pow_int(basis.w2, -k);
  HPComplex seed = HPComplex::zero(wp);
  if (k % 2 == 0) {
    HPReal z = HPReal::of(zeta_even_rational(k / 2), wp) * pow_si(C.pi, k);
    seed = ldexp2(w2k * z, 1);  // the m = 0 row, 2 zeta(k) w2^{-k}
  }
  HPComplex ratio = basis.w1 / basis.w2;
  RowAccum acc = accumulate_rows(
      seed, policy.max_m, policy.stop_rel, wp, [&](long m, RowAccum& st) -> HPComplex {
        HPReal floor_abs =
            ldexp2(policy.stop_rel * max(HPReal::of(1, wp), abs1(st.total)), -16);
        return w2k * inner_row_sum(k, Rational(0), ratio * HPReal::of(m, wp), C, &floor_abs,
                                   &st.terms);
      });
  if (!acc.converged)
    throw NonconvergenceAtPolicyCap("eisenstein_G: row budget exhausted before the stop "
                                    "threshold was reached");
  SeriesResult r;
  r.value = acc.total;
  r.est_error = acc.last_pair + policy.stop_rel * max(HPReal::of(1, wp), abs1(acc.total));
  r.terms_used = acc.terms + acc.rows + 1;
  r.route = SeriesRoute::row_accelerated;
  return r;
}

namespace {

void check_sinh_case(long k, long r, const TwistParams& t) {
  if (r < 1) throw ConfigError("sinh_eisenstein_G: weight r must be >= 1");
  if (k < 1) throw ConfigError("sinh_eisenstein_G: order k must be >= 1");
  bool z_interior = t.z > 0 && t.z < 1;
  bool abs_ok = k >= 3 || (k == 2 && z_interior);
  Rational alpha = t.y + Rational(r) * t.z;
  bool lim_ok = (k == 1 && z_interior && !is_integer(alpha)) ||
                (k == 2 && !z_interior && !t.origin_xy());
  if (!abs_ok && !lim_ok) {
    if (k == 1)
      throw CasePreconditionViolated(
          "sinh_eisenstein_G: k = 1 requires 0 < z < 1 and y + r z not an integer");
    throw CasePreconditionViolated(
        "sinh_eisenstein_G: k = 2 with z in {0, 1} requires (x, y) != (0, 0)");
  }
}

SeriesResult sinh_G_rows(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                         const Constants& C, const TruncationPolicy& policy) {
  mpfr_prec_t wp = C.wp();
  HPComplex inv_tau = HPComplex::of(1, 0, wp) / basis.tau;
  HPComplex tk = complex_pow_int(basis.tau, -k);
  HPComplex sh1 = mul_i(inv_tau) * C.pi;  // pi i / tau
  bool real_sinh = sh1.im.is_zero();
  Rational alpha = t.y + Rational(r) * t.z;
  Rational zm = t.z - Rational(1, 2);
  // 2 pi i (x + r (z - 1/2) / tau), the per-m phase exponent
  HPComplex ph1 = ldexp2(
      mul_i(HPComplex::of(t.x, Rational(0), wp) + HPReal::of(Rational(r) * zm, wp) * inv_tau) *
          C.pi,
      1);
  RowAccum acc = accumulate_rows(
      HPComplex::zero(wp), policy.max_m, policy.stop_rel, wp,
      [&](long m, RowAccum& st) -> HPComplex {
        HPReal mm = HPReal::of(m, wp);
        HPComplex srow = real_sinh
                             ? HPComplex::real(pow_si(sinh(mm * sh1.re), -r))
                             : complex_pow_int(sinh(sh1 * mm), -r);
        HPReal floor_abs =
            ldexp2(policy.stop_rel * max(HPReal::of(1, wp), abs1(st.total)), -16);
        HPComplex inner = inner_row_sum(k, alpha, inv_tau * mm, C, &floor_abs, &st.terms);
        return srow * exp(ph1 * mm) * tk * inner;
      });
  if (!acc.converged)
    throw NonconvergenceAtPolicyCap("sinh_eisenstein_G: row budget exhausted before the "
                                    "stop threshold was reached");
  HPComplex scale = complex_pow_int(basis.w1, -k);
  SeriesResult res;
  res.value = scale * acc.total;
  res.est_error =
      abs1(scale) * (acc.last_pair + policy.stop_rel * max(HPReal::of(1, wp), abs1(acc.total)));
  res.terms_used = acc.terms + acc.rows;
  res.route = SeriesRoute::row_accelerated;
  return res;
}

// literal symmetric-box evaluation; boxes grow by doubling until the policy
// caps, and the value at the cap is returned with the last box-to-box change
// as the error estimate
SeriesResult sinh_G_box(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                        const Constants& C, const TruncationPolicy& policy) {
  mpfr_prec_t wp = C.wp();
  HPComplex inv_tau = HPComplex::of(1, 0, wp) / basis.tau;
  HPComplex sh1 = mul_i(inv_tau) * C.pi;
  Rational zm = t.z - Rational(1, 2);
  Rational yt = t.y + Rational(r) * zm;
  HPComplex ph1 = ldexp2(
      mul_i(HPComplex::of(t.x, Rational(0), wp) + HPReal::of(Rational(r) * zm, wp) * inv_tau) *
          C.pi,
      1);
  HPComplex nstep = exp(ldexp2(mul_i(HPComplex::of(yt, Rational(0), wp)) * C.pi, 1));
  bool flip = (r % 2) != 0;  // (-1)^{r n} alternates in n only for odd r
  long terms = 0;

  auto row_piece = [&](long m, long n0, long n1) -> HPComplex {
    HPReal mm = HPReal::of(m, wp);
    HPComplex A = complex_pow_int(sinh(sh1 * mm), -r) * exp(ph1 * mm);
    HPComplex w = HPComplex::of(m, 0, wp) + basis.tau * HPReal::of(n0, wp);
    HPComplex e = complex_pow_int(nstep, n0);
    bool neg = flip && (((n0 % 2) + 2) % 2 == 1);
    HPComplex acc = HPComplex::zero(wp);
    for (long n = n0; n <= n1; ++n) {
      HPComplex tt = e * complex_pow_int(w, -k);
      if (neg)
        acc -= tt;
      else
        acc += tt;
      if (flip) neg = !neg;
      e *= nstep;
      w += basis.tau;
      ++terms;
    }
    return A * acc;
  };

  HPComplex total = HPComplex::zero(wp);
  HPReal last_change = HPReal::of(0, wp);
  long curM = 0, curN = 0;
  bool converged = false;
  for (long T = 8; !converged; T *= 2) {
    long newM = std::min(T, policy.max_m);
    long newN = std::min(T, policy.max_n);
    HPComplex before = total;
    if (newN > curN) {
      for (long m = 1; m <= curM; ++m) {
        total += row_piece(m, curN + 1, newN) + row_piece(m, -newN, -curN - 1);
        total += row_piece(-m, curN + 1, newN) + row_piece(-m, -newN, -curN - 1);
      }
    }
    for (long m = curM + 1; m <= newM; ++m)
      total += row_piece(m, -newN, newN) + row_piece(-m, -newN, newN);
    curM = newM;
    curN = newN;
    last_change = abs1(total - before);
    if (last_change <= policy.stop_rel * max(HPReal::of(1, wp), abs1(total))) break;
    if (curM >= policy.max_m && curN >= policy.max_n) break;  // honest partial value
  }
  HPComplex scale = complex_pow_int(basis.w1, -k);
  SeriesResult res;
  res.value = scale * total;
  res.est_error = abs1(scale) * last_change;
  res.terms_used = terms;
  res.route = SeriesRoute::naive_symmetric;
  return res;
}

}  // namespace

SeriesResult sinh_eisenstein_G(long k, long r, const TwistParams& t,
                               const LatticeBasis& basis, const Constants& C,
                               const TruncationPolicy& policy, SeriesRoute route) {
  check_sinh_case(k, r, t);
  switch (route) {
    case SeriesRoute::row_accelerated:
      return sinh_G_rows(k, r, t, basis, C, policy);
    case SeriesRoute::naive_symmetric:
      return sinh_G_box(k, r, t, basis, C, policy);
    default:
      throw ConfigError("sinh_eisenstein_G: route must be a summation route");
  }
}

SeriesResult coth_eisenstein_sum(long k, long p, const LatticeBasis& basis,
                                 const Constants& C, const TruncationPolicy& policy) {
  if (k < 2) throw ConfigError("coth_eisenstein_sum: order must be >= 2");
  if (p < 1) throw ConfigError("coth_eisenstein_sum: weight must be >= 1");
  mpfr_prec_t wp = C.wp();
  HPComplex inv_tau = HPComplex::of(1, 0, wp) / basis.tau;
  HPComplex tk = complex_pow_int(basis.tau, -k);
  HPComplex sh1 = mul_i(inv_tau) * C.pi;
  bool real_arg = sh1.im.is_zero();
  RowAccum acc = accumulate_rows(
      HPComplex::zero(wp), policy.max_m, policy.stop_rel, wp,
      [&](long m, RowAccum& st) -> HPComplex {
        HPReal mm = HPReal::of(m, wp);
        HPComplex cw = real_arg ? HPComplex::real(pow_si(cosh(mm * sh1.re) / sinh(mm * sh1.re), p))
                                : complex_pow_int(cosh(sh1 * mm) / sinh(sh1 * mm), p);
        HPReal floor_abs =
            ldexp2(policy.stop_rel * max(HPReal::of(1, wp), abs1(st.total)), -16);
        return cw * tk *
               inner_row_sum(k, Rational(0), inv_tau * mm, C, &floor_abs, &st.terms);
      });
  if (!acc.converged)
    throw NonconvergenceAtPolicyCap("coth_eisenstein_sum: row budget exhausted before the "
                                    "stop threshold was reached");
  HPComplex scale = complex_pow_int(basis.w1, -k);
  SeriesResult res;
  res.value = scale * acc.total;
  res.est_error =
      abs1(scale) * (acc.last_pair + policy.stop_rel * max(HPReal::of(1, wp), abs1(acc.total)));
  res.terms_used = acc.terms + acc.rows;
  res.route = SeriesRoute::row_accelerated;
  return res;
}

CauchyMellinResult cauchy_mellin_sum(long j, const Constants& C) {
  if (j < 0) throw ConfigError("cauchy_mellin_sum: index must be >= 0");
  mpfr_prec_t wp = C.wp();
  long kexp = 4 * j + 3;
  HPReal lhs = HPReal::of(0, wp);
  HPReal cut = HPReal::pow2(-static_cast<long>(wp) - 8, wp);
  for (long m = 1; m <= 100000; ++m) {
    HPReal mm = HPReal::of(m, wp);
    HPReal term = HPReal::of(1, wp) / (sinh(C.pi * mm) * pow_si(mm, kexp));
    if (m % 2) term = -term;
    lhs += term;
    if (abs(term) < cut * max(HPReal::of(1, wp), abs(lhs))) break;
  }
  lhs = ldexp2(lhs, 1);  // m and -m contribute equally
  Rational acc(0);
  for (long t = 0; t <= 2 * j + 2; ++t) {
    Rational b1 = bernoulli_poly(2 * t).eval(Rational(1, 2));
    Rational b2 = bernoulli_poly(4 * j + 4 - 2 * t).eval(Rational(1, 2));
    Rational piece = b1 * b2 / (Rational(factorial(2 * t)) * Rational(factorial(4 * j + 4 - 2 * t)));
    acc += (t % 2 == 0) ? -piece : piece;  // (-1)^{t+1}
  }
  CauchyMellinResult res{HPReal(wp), HPReal(wp), HPReal(wp)};
  res.lhs = lhs;
  res.rhs = HPReal::of(acc, wp) * pow_si(ldexp2(C.pi, 1), kexp);
  res.diff = abs(res.lhs - res.rhs);
  return res;
}

HPReal sinh_alternating_sum(long j, const Constants& C) {
  mpfr_prec_t wp = C.wp();
  HPReal total = HPReal::of(0, wp);
  HPReal cut = HPReal::pow2(-static_cast<long>(wp) - 8, wp);
  for (long n = 1; n <= 100000; ++n) {
    HPReal nn = HPReal::of(n, wp);
    HPReal term = pow_si(nn, -j) / sinh(C.pi * nn);
    if (n % 2) term = -term;
    total += term;
    if (n > 4 && abs(term) < cut * max(HPReal::of(1, wp), abs(total))) break;
  }
  return total;
}

}  // namespace hsze
