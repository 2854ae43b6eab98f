#pragma once

#include "hsze/domain.hpp"

namespace hsze {

// 2 pi i e^{2 pi i beta (1 - {alpha})} / (e^{2 pi i beta} - 1); the symmetric
// row sum of e^{2 pi i n alpha}/(beta + n) when alpha is not an integer.
// Integral beta is a pole of the row and is rejected.
HPComplex lerch_phi(const Rational& alpha, const HPComplex& beta, const Constants& C);

// sum over n of e^{2 pi i n alpha} (beta + n)^{-k} (symmetric limit where
// only conditionally convergent). Non-integral alpha goes through the
// closed exponential kernel; integral alpha with k >= 2 is summed directly
// with an Euler-Maclaurin tail. abs_floor, when given, allows the tail to
// stop once terms drop below an absolute target supplied by the caller.
HPComplex inner_row_sum(long k, const Rational& alpha, const HPComplex& beta,
                        const Constants& C, const HPReal* abs_floor = nullptr,
                        long* terms = nullptr);

// classical lattice sum of (m w1 + n w2)^{-k}, k >= 2, in the iterated
// order: n summed first within each row, rows in m. The k = 2 value depends
// on this order.
SeriesResult eisenstein_G(long k, const LatticeBasis& basis, const Constants& C,
                          const TruncationPolicy& policy);

// the hyperbolic-sine weighted lattice sum of order k and weight r at twist
// (x, y, z); route selects row acceleration or the literal symmetric box
SeriesResult sinh_eisenstein_G(long k, long r, const TwistParams& t,
                               const LatticeBasis& basis, const Constants& C,
                               const TruncationPolicy& policy, SeriesRoute route);

// companion sum with coth(m pi i / tau)^p weights, m != 0 rows only
SeriesResult coth_eisenstein_sum(long k, long p, const LatticeBasis& basis,
                                 const Constants& C, const TruncationPolicy& policy);

struct CauchyMellinResult {
  HPReal lhs;   // sum over m != 0 of (-1)^m / (sinh(m pi) m^{4j+3})
  HPReal rhs;   // the finite Bernoulli combination times (2 pi)^{4j+3}
  HPReal diff;  // |lhs - rhs|
};

CauchyMellinResult cauchy_mellin_sum(long j, const Constants& C);

// sum over n >= 1 of (-1)^n / (sinh(n pi) n^j); j may be negative
HPReal sinh_alternating_sum(long j, const Constants& C);

}  // namespace hsze
