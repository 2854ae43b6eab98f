#pragma once

#include <functional>
#include <vector>

#include "hsze/domain.hpp"

namespace hsze {

// Odd Jacobi theta value or z-derivative of order deriv (0..3). Throws
// NonconvergentTau when Im tau <= 0.
HPComplex theta(const HPComplex& z, const HPComplex& tau, long deriv,
                const Constants& C);

// theta'(0; tau) as the cube-product form; independent of the series path,
// used for cross-checks.
HPComplex theta_prime0_product(const HPComplex& tau, const Constants& C);

// Twisted lattice kernel in xi with simple poles on w1 Z + w2 Z, residue 1
// at 0. Throws PoleHit on the lattice.
HPComplex gen_E(const HPComplex& xi, const TwistParams& t, const LatticeBasis& basis,
                const Constants& C);

// Exponential kernel in xi with simple poles on w2 Z; deriv-th xi-derivative.
HPComplex gen_F(const HPComplex& xi, const Rational& z, const HPComplex& omega2,
                long deriv, const Constants& C);

// Laurent coefficients of f around 0: orders -pole_order .. -pole_order+count-1,
// by trapezoid sums on |xi| = radius with doubling until stable.
LaurentExpansion laurent_coeffs(const std::function<HPComplex(const HPComplex&)>& f,
                                long pole_order, long count, const HPReal& radius,
                                const Constants& C);

// Taylor-side coefficients of gen_E: closed forms for k <= 2, contour
// extraction for k >= 3.
HPComplex hurwitz_function(long k, const Rational& x, const Rational& y,
                           const LatticeBasis& basis, const Constants& C);

// all orders 0..kmax, sharing one contour for the k >= 3 block
std::vector<HPComplex> hurwitz_upto(long kmax, const Rational& x, const Rational& y,
                                    const LatticeBasis& basis, const Constants& C);

// k >= 2 at the untwisted point
HPComplex hurwitz_number(long k, const LatticeBasis& basis, const Constants& C);

// Pole-corrected product kernel: the product gen_E * gen_F^r minus the
// singular backward sum that cancels its pole at 0. The (0,0,1) twist is
// served by reflection through the (0,0,0) evaluator.
HPComplex gen_K(const HPComplex& xi, long r, const TwistParams& t,
                const LatticeBasis& basis, const Constants& C);

// K_{k,r} = k! [xi^{k-1}] gen_K for k = 1..kmax; index 0 of the result is unused
std::vector<HPComplex> K_coeffs_upto(long kmax, long r, const TwistParams& t,
                                     const LatticeBasis& basis, const Constants& C);

HPComplex K_coeff(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                  const Constants& C);

}  // namespace hsze
