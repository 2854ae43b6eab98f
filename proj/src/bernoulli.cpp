#include "hsze/bernoulli.hpp"

#include <mutex>

#include "hsze/errors.hpp"

namespace hsze {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // guarded by g_bernoulli_mutex
}  // namespace

Rational bernoulli_number(long m) {
  if (m < 0) throw ConfigError("bernoulli_number: negative index");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) {
    g_bernoulli.push_back(rat(1));
    g_bernoulli.push_back(rat(-1, 2));
  }
  while ((long)g_bernoulli.size() <= m) {
    long n = (long)g_bernoulli.size();
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rational s = 0;
    for (long j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-s / Rational(n + 1));
  }
  return g_bernoulli[m];
}

RatPoly bernoulli_poly(long m) {
  std::vector<Rational> c(m + 1);
  for (long j = 0; j <= m; ++j)
    c[m - j] = Rational(binomial(m, j)) * bernoulli_number(j);
  return RatPoly(std::move(c));
}

RatPoly bernoulli_poly_high(long m, long r) {
  if (m < 0 || r < 0) throw ConfigError("bernoulli_poly_high: negative argument");
  // higher-order numbers by repeated exponential convolution
  std::vector<Rational> num(m + 1);
  num[0] = 1;  // order 0: e^{xt} alone
  for (long step = 0; step < r; ++step) {
    std::vector<Rational> next(m + 1);
    for (long n = 0; n <= m; ++n) {
      Rational s = 0;
      for (long j = 0; j <= n; ++j)
        s += Rational(binomial(n, j)) * num[j] * bernoulli_number(n - j);
      next[n] = s;
    }
    num = std::move(next);
  }
  std::vector<Rational> c(m + 1);
  for (long j = 0; j <= m; ++j) c[m - j] = Rational(binomial(m, j)) * num[j];
  return RatPoly(std::move(c));
}

Rational zeta_even_rational(long j) {
  if (j < 1) throw ConfigError("zeta_even_rational: j must be >= 1");
  Rational c = bernoulli_number(2 * j) * rat_pow(rat(2), 2 * j) /
               (Rational(2) * Rational(factorial(2 * j)));
  if (j % 2 == 0) c = -c;
  return c;
}

HPComplex bernoulli_scaled(long m, const Rational& z, const HPComplex& omega2,
                           const Constants& C) {
  if (m < 1) throw ConfigError("bernoulli_scaled: m must be >= 1");
  auto parts = frac_int_parts(z);
  if (m == 1 && parts.frac_part == 0)
    throw IllegalLerchPoint("bernoulli_scaled: m = 1 at integral z");
  mpfr_prec_t wp = C.wp();
  HPComplex two_pi_i(HPReal::of(0, wp), ldexp2(C.pi, 1));
  HPComplex w = complex_pow_int(two_pi_i / omega2, m);
  Rational b = bernoulli_poly(m).eval(parts.frac_part);
  return w * HPReal::of(b, wp);
}

std::vector<Rational> kernel_deriv_poly(long j, const Rational& a) {
  if (j < 0) throw ConfigError("kernel_deriv_poly: negative order");
  std::vector<Rational> p(2);
  p[1] = 1;  // P_0 = h
  for (long step = 0; step < j; ++step) {
    std::vector<Rational> q(p.size() + 1);
    for (size_t i = 1; i < p.size(); ++i) {
      q[i] += a * p[i];
      // (h + h^2) P' contributes i*p[i] at h^i and h^{i+1}
      q[i] -= Rational((long)i) * p[i];
      q[i + 1] -= Rational((long)i) * p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace hsze
