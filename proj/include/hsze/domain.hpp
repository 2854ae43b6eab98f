#pragma once

#include <string>
#include <vector>

#include "hsze/precision.hpp"
#include "hsze/rational.hpp"

namespace hsze {

// Oriented period pair: tau = w2/w1 must lie in the upper half plane.
struct LatticeBasis {
  HPComplex w1, w2, tau;

  static LatticeBasis make(HPComplex w1, HPComplex w2);

  mpfr_prec_t prec() const { return std::max(w1.prec(), w2.prec()); }

  // shortest nonzero lattice vector, by scanning small coefficients;
  // adequate for the near-reduced bases this library works with
  HPReal min_distance() const;
};

struct TwistParams {
  Rational x, y, z;

  // x, y in (-1, 1); z in [0, 1]
  static TwistParams make(Rational x, Rational y, Rational z);

  bool origin_xy() const { return x == 0 && y == 0; }
};

enum class SeriesRoute { naive_symmetric, row_accelerated, closed_form };

std::string route_name(SeriesRoute r);

struct SeriesResult {
  HPComplex value;
  HPReal est_error;
  long terms_used = 0;
  SeriesRoute route = SeriesRoute::naive_symmetric;
};

struct TruncationPolicy {
  long max_m = 100000;
  long max_n = 1000000;
  HPReal stop_rel;

  static TruncationPolicy defaults(const PrecisionConfig& cfg);
  static TruncationPolicy make(long max_m, long max_n, HPReal stop_rel,
                               const PrecisionConfig& cfg);
};

struct LaurentExpansion {
  long base_order = 0;
  std::vector<HPComplex> coefficients;  // orders base_order, base_order+1, ...
  HPReal radius;

  const HPComplex& coeff(long order) const;
};

}  // namespace hsze
