#include "hsze/rational.hpp"

#include <cstddef>
#include <sstream>

namespace hsze {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal: '" + s + "' (expected p or p/q)");
  }
}

std::string rat_to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

FracIntParts frac_int_parts(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rational frac = x - Rational(fl);
  frac.canonicalize();
  return {fl, frac};
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return Integer(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational rat_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw ZeroToNegativePower("0 raised to negative power");
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  acc.canonicalize();
  return acc;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RatPoly(std::move(v));
}

Rational RatPoly::coeff(std::size_t j) const {
  if (j >= coeffs_.size()) return Rational(0);
  return coeffs_[j];
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = coeff(j) + o.coeff(j);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = coeff(j) - o.coeff(j);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) v[a + b] += coeffs_[a] * o.coeffs_[b];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) v[j - 1] = coeffs_[j] * Rational(static_cast<long>(j));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the substituted variable keeps everything exact.
  RatPoly lin(std::vector<Rational>{b, a});
  RatPoly acc;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    acc = acc * lin + RatPoly::constant(coeffs_[j]);
  }
  return acc;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
  acc.canonicalize();
  return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[j].get_str() << ")";
    if (j >= 1) os << "*" << var;
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

}  // namespace hsze
