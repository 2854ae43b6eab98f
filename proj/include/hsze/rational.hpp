#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hsze/errors.hpp"

namespace hsze {

// Exact scalars are plain GMP rationals; gmpxx already gives us canonical
// (reduced, positive-denominator) form and full operator coverage.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q", or a plain decimal integer with optional sign.
Rational rat_from_string(const std::string& s);

std::string rat_to_string(const Rational& q);

bool is_integer(const Rational& q);

// floor/fractional split with {x} in [0,1): x = [x] + {x}.
struct FracIntParts {
  Integer int_part;
  Rational frac_part;
};
FracIntParts frac_int_parts(const Rational& x);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Rational rat_pow(const Rational& q, long e);  // e<0 requires q != 0

// Dense univariate polynomial with exact rational coefficients,
// coefficients[j] multiplying x^j. Zero polynomial has empty coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t degree);

  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t j) const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rational& c) const;
  RatPoly derivative() const;
  // substitution x -> a*x + b, exact
  RatPoly compose_affine(const Rational& a, const Rational& b) const;

  Rational eval(const Rational& x) const;

  bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hsze
