#pragma once

#include "hsze/closed_form.hpp"
#include "hsze/domain.hpp"

namespace hsze {

struct QParams {
  HPReal q;   // deformation parameter, 0 < q < 1
  long s, t;  // integer exponents, both >= 1

  static QParams make(HPReal q, long s, long t);
};

// (1-q)^s sum_{m>=1} q^{mt} / (1-q^m)^s by direct summation with a geometric
// tail stop. Every term is positive, so the partial sums must be monotone;
// the evaluator asserts this while summing.
HPComplex f_q(const QParams& p, const Constants& C);

// the q-zeta specialization t = s - 1 (needs s >= 2)
inline HPComplex zeta_q(const HPReal& q, long s, const Constants& C) {
  return f_q(QParams::make(q, s, s - 1), C);
}

struct SinhPowerPair {
  HPReal direct;      // sum over m != 0 of sinh(m pi)^{-2k}
  HPComplex lattice;  // the same value through the order-1 lattice series
};

// both routes of the sinh-power identity; the two members must agree
SinhPowerPair sinh_power_identity(long k, const Constants& C,
                                  const TruncationPolicy& policy);

struct QClosedForm {
  long k;
  HPReal q_factor;  // ((1 - e^{-2 pi})/2)^{2k}, carried numerically
  RingExpr ring;    // exact remainder: half the catalogued order-1 value over pi
};

// catalogued exact evaluations of f_q(2k, k) at q = e^{-2 pi}, k in {1, 2, 3};
// larger k has no catalogued form and reports NotCatalogued
QClosedForm f_q_closed(long k, const Constants& C);

HPComplex f_q_closed_value(const QClosedForm& f, const Constants& C);

}  // namespace hsze
