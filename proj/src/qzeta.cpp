#include "hsze/qzeta.hpp"

#include "hsze/errors.hpp"
#include "hsze/lattice_series.hpp"

namespace hsze {

namespace {
constexpr long kQSeriesCap = 1000000;
}

QParams QParams::make(HPReal q, long s, long t) {
  if (s < 1 || t < 1) throw ConfigError("QParams: s and t must be >= 1");
  if (!(q > 0) || !(q < 1))
    throw NonconvergentQSeries("QParams: the series branch needs 0 < q < 1");
  return QParams{std::move(q), s, t};
}

HPComplex f_q(const QParams& p, const Constants& C) {
  mpfr_prec_t wp = C.wp();
  HPReal one = HPReal::of(1, wp);
  HPReal thr = C.trunc_threshold();
  HPReal qt = pow_si(p.q, p.t);
  HPReal qm = one, qmt = one;
  HPReal total = HPReal::of(0, wp);
  for (long m = 1;; ++m) {
    qm *= p.q;
    qmt *= qt;
    HPReal term = qmt / pow_si(one - qm, p.s);
    if (!(term > 0))
      throw NonconvergentQSeries("f_q: series lost monotonicity at term " +
                                 std::to_string(m));
    total += term;
    if (m >= 8 && term < thr * total) break;
    if (m >= kQSeriesCap)
      throw NonconvergentQSeries("f_q: no tail stop within " +
                                 std::to_string(kQSeriesCap) + " terms");
  }
  return HPComplex::real(pow_si(one - p.q, p.s) * total);
}

SinhPowerPair sinh_power_identity(long k, const Constants& C,
                                  const TruncationPolicy& policy) {
  if (k < 1) throw ConfigError("sinh_power_identity: k must be >= 1");
  mpfr_prec_t wp = C.wp();
  HPReal thr = C.trunc_threshold();
  HPReal direct = HPReal::of(0, wp);
  for (long m = 1; m <= 10000; ++m) {
    HPReal term = pow_si(sinh(C.pi * HPReal::of(m, wp)), -2 * k);
    direct += term;
    if (term < thr * direct) break;
  }
  direct = ldexp2(direct, 1);

  SeriesResult g =
      sinh_eisenstein_G(1, 2 * k - 1, TwistParams::make(rat(0), rat(0), rat(1, 2)),
                        basis_for_tag(BasisTag::square, C), C, policy,
                        SeriesRoute::row_accelerated);
  return SinhPowerPair{std::move(direct), g.value / C.pi};
}

QClosedForm f_q_closed(long k, const Constants& C) {
  if (k < 1) throw ConfigError("f_q_closed: k must be >= 1");
  static const char* ids[] = {"4-4-3", "4-4", "4-4-2"};
  if (k > 3)
    throw NotCatalogued("f_q_closed: no catalogued form for k = " + std::to_string(k));
  RingExpr order1;
  for (const CatalogEntry& e : example_catalog())
    if (e.id == ids[k - 1]) order1 = e.closed;
  if (order1.is_zero())
    throw NotCatalogued(std::string("f_q_closed: catalog lacks id ") + ids[k - 1]);
  mpfr_prec_t wp = C.wp();
  HPReal one = HPReal::of(1, wp);
  HPReal q = exp(-ldexp2(C.pi, 1));
  return QClosedForm{
      k, pow_si(ldexp2(one - q, -1), 2 * k),
      (order1 * RingExpr::symbol(RingSymbol::pi, -1)).scaled(rat(1, 2))};
}

HPComplex f_q_closed_value(const QClosedForm& f, const Constants& C) {
  return eval_ring(f.ring, C) * f.q_factor;
}

}  // namespace hsze
