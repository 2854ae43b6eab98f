#pragma once

#include <vector>

#include "hsze/precision.hpp"
#include "hsze/rational.hpp"

namespace hsze {

// B_m with B_1 = -1/2 (generating function t/(e^t - 1)).
// Cached; safe to call concurrently.
Rational bernoulli_number(long m);

// B_m(x)
RatPoly bernoulli_poly(long m);

// Order-r polynomial with generating function (t/(e^t - 1))^r e^{xt}.
// r = 1 reduces to bernoulli_poly, r = 0 gives x^m.
RatPoly bernoulli_poly_high(long m, long r);

// zeta(2j) = zeta_even_rational(j) * pi^(2j), j >= 1
Rational zeta_even_rational(long j);

// (2 pi i / omega2)^m B_m({z}) for m >= 1. The m = 1 value at integral z
// has no finite limit and is rejected.
HPComplex bernoulli_scaled(long m, const Rational& z, const HPComplex& omega2,
                           const Constants& C);

// Derivatives of the kernel w e^{w a xi} h with h = 1/(e^{w xi} - 1):
// the j-th xi-derivative equals w^{j+1} e^{w a xi} P_j(h), with
// P_0 = h and P_{j+1} = a P_j - (h + h^2) P_j'. Returns the coefficients
// of P_j indexed by the power of h (size j + 2, index 0 always zero).
std::vector<Rational> kernel_deriv_poly(long j, const Rational& a);

}  // namespace hsze
