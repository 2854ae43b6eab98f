#include "hsze/ring_expr.hpp"

#include <sstream>

#include "hsze/errors.hpp"

namespace hsze {

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  os << '(' << rat_to_string(re);
  os << (im < 0 ? '-' : '+') << rat_to_string(im < 0 ? Rational(-im) : im) << "i)";
  return os.str();
}

RingExpr RingExpr::from(GaussianRational c) {
  RingExpr e;
  e.add_term(Mono{}, std::move(c));
  return e;
}

RingExpr RingExpr::symbol(RingSymbol s, long e) {
  if (e < 0 && s != RingSymbol::pi)
    throw ConfigError("RingExpr: only pi admits negative exponents");
  RingExpr r;
  Mono m;
  switch (s) {
    case RingSymbol::pi: m.pi_e = e; break;
    case RingSymbol::w: m.w_e = e; break;
    case RingSymbol::wt: m.wt_e = e; break;
    case RingSymbol::s3: m.s3_e = e; break;
    case RingSymbol::z: m.z_e = e; break;
  }
  r.add_term(m, GaussianRational::of(1));
  return r;
}

void RingExpr::add_term(Mono m, GaussianRational c) {
  if (m.s3_e >= 2) {
    // sqrt3^2 = 3
    c = c.scaled(rat_pow(rat(3), m.s3_e / 2));
    m.s3_e %= 2;
  }
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, std::move(c));
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

RingExpr RingExpr::operator+(const RingExpr& o) const {
  RingExpr r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

RingExpr RingExpr::operator-(const RingExpr& o) const {
  RingExpr r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

RingExpr RingExpr::operator-() const {
  RingExpr r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

RingExpr RingExpr::operator*(const RingExpr& o) const {
  RingExpr r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) {
      Mono m{ma.pi_e + mb.pi_e, ma.w_e + mb.w_e, ma.wt_e + mb.wt_e, ma.s3_e + mb.s3_e,
             ma.z_e + mb.z_e};
      r.add_term(m, ca * cb);
    }
  return r;
}

RingExpr RingExpr::scaled(const GaussianRational& c) const {
  RingExpr r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : t_) r.t_.emplace(m, co * c);
  return r;
}

RingExpr RingExpr::substitute_z(const Rational& value) const {
  RingExpr r;
  for (const auto& [m, c] : t_) {
    Mono n = m;
    n.z_e = 0;
    r.add_term(n, m.z_e == 0 ? c : c.scaled(rat_pow(value, m.z_e)));
  }
  return r;
}

RingExpr RingExpr::differentiate_z() const {
  RingExpr r;
  for (const auto& [m, c] : t_) {
    if (m.z_e == 0) continue;
    Mono n = m;
    n.z_e = m.z_e - 1;
    r.add_term(n, c.scaled(rat(m.z_e)));
  }
  return r;
}

long RingExpr::degree_in(RingSymbol s) const {
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : t_) {
    long e = 0;
    switch (s) {
      case RingSymbol::pi: e = m.pi_e; break;
      case RingSymbol::w: e = m.w_e; break;
      case RingSymbol::wt: e = m.wt_e; break;
      case RingSymbol::s3: e = m.s3_e; break;
      case RingSymbol::z: e = m.z_e; break;
    }
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

std::string RingExpr::to_string() const {
  if (t_.empty()) return "(0+0i)";
  std::ostringstream os;
  bool head = true;
  for (const auto& [m, c] : t_) {
    if (!head) os << " + ";
    head = false;
    os << c.to_string();
    if (m.pi_e) os << " * pi^" << m.pi_e;
    if (m.w_e) os << " * w^" << m.w_e;
    if (m.wt_e) os << " * wt^" << m.wt_e;
    if (m.s3_e) os << " * s3^" << m.s3_e;
    if (m.z_e) os << " * z^" << m.z_e;
  }
  return os.str();
}

RingExpr rho_power_expr(long m) {
  long k = ((m % 3) + 3) % 3;
  if (k == 0) return RingExpr::constant(rat(1));
  RingExpr half_i_s3 =
      RingExpr::symbol(RingSymbol::s3).scaled(GaussianRational(rat(0), rat(1, 2)));
  RingExpr base = RingExpr::constant(rat(-1, 2));
  // rho = -1/2 + (i/2) sqrt3, rho^2 = conj
  if (k == 1) return base + half_i_s3;
  return base - half_i_s3;
}

namespace {

HPComplex eval_term(const Mono& m, const GaussianRational& c, const Constants& C) {
  mpfr_prec_t wp = C.wp();
  HPReal mag = HPReal::of(1, wp);
  if (m.pi_e) mag *= pow_si(C.pi, m.pi_e);
  if (m.w_e) mag *= pow_si(C.lemniscate, m.w_e);
  if (m.wt_e) mag *= pow_si(C.lemniscate6, m.wt_e);
  if (m.s3_e) mag *= pow_si(C.sqrt3, m.s3_e);
  return HPComplex::of(c.re, c.im, wp) * mag;
}

}  // namespace

HPComplex eval_ring(const RingExpr& e, const Constants& C) {
  HPComplex total = HPComplex::zero(C.wp());
  for (const auto& [m, c] : e.terms()) {
    if (m.z_e > 0)
      throw SymbolRemains("eval_ring: expression still carries a formal z power");
    total += eval_term(m, c, C);
  }
  return total;
}

HPComplex eval_ring(const RingExpr& e, const Constants& C, const Rational& z) {
  return eval_ring(e.substitute_z(z), C);
}

}  // namespace hsze
