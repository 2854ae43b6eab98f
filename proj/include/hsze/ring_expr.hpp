#pragma once

#include <map>
#include <string>

#include "hsze/precision.hpp"
#include "hsze/rational.hpp"

namespace hsze {

struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational of(long r, long i = 0) { return {rat(r), rat(i)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational scaled(const Rational& q) const { return {re * q, im * q}; }
  GaussianRational conj() const { return {re, -im}; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  std::string to_string() const;  // "(a+bi)" with explicit sign on b
};

enum class RingSymbol { pi, w, wt, s3, z };

// monomial exponents; pi may be negative, s3 is kept reduced to {0, 1}
// (s3^2 folds to the rational factor 3), z is a formal nonnegative power
struct Mono {
  long pi_e = 0, w_e = 0, wt_e = 0, s3_e = 0, z_e = 0;
  auto operator<=>(const Mono&) const = default;
};

// Exact elements of Q(i)[pi^{+-1}, w, wt, sqrt3, z] as coefficient maps on
// monomials. All arithmetic is exact; nothing here rounds.
class RingExpr {
 public:
  RingExpr() = default;

  static RingExpr zero() { return {}; }
  static RingExpr constant(const Rational& q) { return from(GaussianRational(q, rat(0))); }
  static RingExpr from(GaussianRational c);
  static RingExpr symbol(RingSymbol s, long e = 1);

  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, GaussianRational>& terms() const { return t_; }

  RingExpr operator+(const RingExpr& o) const;
  RingExpr operator-(const RingExpr& o) const;
  RingExpr operator-() const;
  RingExpr operator*(const RingExpr& o) const;
  RingExpr& operator+=(const RingExpr& o) { return *this = *this + o; }
  RingExpr& operator-=(const RingExpr& o) { return *this = *this - o; }

  RingExpr scaled(const GaussianRational& c) const;
  RingExpr scaled(const Rational& q) const { return scaled(GaussianRational(q, rat(0))); }

  RingExpr substitute_z(const Rational& value) const;
  RingExpr differentiate_z() const;

  // largest exponent of the symbol across terms; the zero expression and a
  // symbol that never appears report 0
  long degree_in(RingSymbol s) const;

  bool operator==(const RingExpr& o) const { return t_ == o.t_; }
  bool operator!=(const RingExpr& o) const { return !(*this == o); }

  // canonical text: terms in fixed monomial order joined by " + ", each
  // "(a+bi)" followed by " * pi^e", " * w^e", " * wt^e", " * s3^e", " * z^e"
  // for the nonzero exponents
  std::string to_string() const;

 private:
  void add_term(Mono m, GaussianRational c);
  std::map<Mono, GaussianRational> t_;
};

// rho^m for rho = (-1 + i sqrt3)/2, exact, period three
RingExpr rho_power_expr(long m);

// numeric evaluation; a surviving formal z raises SymbolRemains
HPComplex eval_ring(const RingExpr& e, const Constants& C);
HPComplex eval_ring(const RingExpr& e, const Constants& C, const Rational& z);

}  // namespace hsze
