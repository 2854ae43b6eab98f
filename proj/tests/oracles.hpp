#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <functional>

#include "hsze/precision.hpp"

namespace hsze::oracles {

// tanh-sinh quadrature of f over (0,1), doubling the level until two
// successive levels agree to `target` (absolute). The callback receives
// (x, one_minus_x) so integrands singular at 1 can avoid cancellation.
inline HPReal tanh_sinh_01(const std::function<HPReal(const HPReal&, const HPReal&)>& f,
                           mpfr_prec_t wp, const HPReal& target) {
  HPReal pi_half = ldexp2(HPReal::pi(wp), -1);
  HPReal one = HPReal::of(1, wp);
  HPReal cutoff = ldexp2(target, -40);

  auto node = [&](const HPReal& t) {
    HPReal u = pi_half * sinh(t);
    // x = (1+tanh u)/2 = 1/(1+e^{-2u}); 1-x = 1/(1+e^{2u}); dx/dt = 2x(1-x)(pi/2)cosh t
    HPReal e2u = exp(ldexp2(u, 1));
    HPReal x = one / (one + one / e2u);
    HPReal omx = one / (one + e2u);
    HPReal w = ldexp2(x * omx, 1) * pi_half * cosh(t);
    return w * f(x, omx);
  };

  HPReal prev = HPReal::nan(wp);
  for (int level = 3; level <= 12; ++level) {
    HPReal h = ldexp2(one, -level);
    HPReal sum = node(HPReal::of(0, wp));
    for (int dir : {1, -1}) {
      for (long k = dir;; k += dir) {
        HPReal t = h * k;
        HPReal term = node(t);
        sum += term;
        if (abs(term) < cutoff && abs(t) > 2) break;
      }
    }
    sum = sum * h;
    if (!prev.is_nan() && abs(sum - prev) <= target) return sum;
    prev = sum;
  }
  return prev;
}

}  // namespace hsze::oracles
