#include "hsze/domain.hpp"

#include "hsze/errors.hpp"

namespace hsze {

LatticeBasis LatticeBasis::make(HPComplex w1, HPComplex w2) {
  if (w1.is_zero() || w2.is_zero())
    throw ConfigError("LatticeBasis: zero period");
  HPComplex tau = w2 / w1;
  if (!(tau.im > HPReal::of(0, tau.prec())))
    throw ConfigError("LatticeBasis: w2/w1 must have positive imaginary part");
  return LatticeBasis{std::move(w1), std::move(w2), std::move(tau)};
}

HPReal LatticeBasis::min_distance() const {
  HPReal best = abs(w1);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      if (m == 0 && n == 0) continue;
      HPReal d = abs(w1 * HPReal::of(m, prec()) + w2 * HPReal::of(n, prec()));
      if (d < best) best = d;
    }
  return best;
}

TwistParams TwistParams::make(Rational x, Rational y, Rational z) {
  if (!(x > rat(-1) && x < rat(1) && y > rat(-1) && y < rat(1)))
    throw ConfigError("TwistParams: x and y must lie in (-1, 1)");
  if (!(z >= rat(0) && z <= rat(1)))
    throw ConfigError("TwistParams: z must lie in [0, 1]");
  return TwistParams{std::move(x), std::move(y), std::move(z)};
}

std::string route_name(SeriesRoute r) {
  switch (r) {
    case SeriesRoute::naive_symmetric: return "naive_symmetric";
    case SeriesRoute::row_accelerated: return "row_accelerated";
    case SeriesRoute::closed_form: return "closed_form";
  }
  return "unknown";
}

TruncationPolicy TruncationPolicy::defaults(const PrecisionConfig& cfg) {
  TruncationPolicy p;
  p.stop_rel = HPReal::pow2(-cfg.bits, 64);
  return p;
}

TruncationPolicy TruncationPolicy::make(long max_m, long max_n, HPReal stop_rel,
                                        const PrecisionConfig& cfg) {
  if (max_m < 8 || max_n < 8)
    throw ConfigError("TruncationPolicy: box bounds must be at least 8");
  HPReal limit = HPReal::pow2(-cfg.bits / 2, 64);
  if (!(stop_rel > HPReal::of(0, 64)) || stop_rel > limit)
    throw ConfigError("TruncationPolicy: stop_rel must be in (0, 2^(-bits/2)]");
  TruncationPolicy p;
  p.max_m = max_m;
  p.max_n = max_n;
  p.stop_rel = std::move(stop_rel);
  return p;
}

const HPComplex& LaurentExpansion::coeff(long order) const {
  long idx = order - base_order;
  if (idx < 0 || idx >= (long)coefficients.size())
    throw ConfigError("LaurentExpansion: coefficient order out of range");
  return coefficients[idx];
}

}  // namespace hsze
