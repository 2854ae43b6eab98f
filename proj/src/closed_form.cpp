#include "hsze/closed_form.hpp"

#include <mutex>

#include "hsze/bernoulli.hpp"
#include "hsze/errors.hpp"
#include "hsze/theta.hpp"

namespace hsze {

namespace {

HPComplex mul_i(const HPComplex& a) { return HPComplex(-a.im, a.re); }

// quadratic recurrence shared by the two symbolic lattices; only the two
// seeds differ
Rational c_value(long k, bool hexagonal) {
  static std::mutex mx;
  static std::vector<Rational> cache[2];
  if (k < 2) return Rational(0);
  std::lock_guard<std::mutex> lock(mx);
  std::vector<Rational>& c = cache[hexagonal ? 1 : 0];
  if (c.empty()) {
    c.assign(4, Rational(0));
    c[2] = hexagonal ? Rational(0) : Rational(1, 5);
    c[3] = hexagonal ? Rational(1, 7) : Rational(0);
  }
  while (static_cast<long>(c.size()) <= k) {
    long n = static_cast<long>(c.size());
    Rational s(0);
    for (long m = 2; m <= n - 2; ++m) s += c[m] * c[n - m];
    c.push_back(s * Rational(3) / Rational((2 * n + 1) * (n - 3)));
  }
  return c[k];
}

RingExpr sym(RingSymbol s, long e = 1) { return RingExpr::symbol(s, e); }

// order-r polynomials in the normalization with the exponential inside the
// r-th power: the Norlund polynomial taken at r z
RatPoly bh_poly(long m, long r) {
  return bernoulli_poly_high(m, r).compose_affine(rat(r), rat(0));
}

Rational bh_at(long m, long r, const Rational& z) {
  return bernoulli_poly_high(m, r).eval(Rational(r) * z);
}

RingExpr z_lift(const RatPoly& p) {
  RingExpr e;
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!(c[j] == 0)) e += sym(RingSymbol::z, static_cast<long>(j)).scaled(c[j]);
  return e;
}

RingExpr two_pi_pow(long m) { return sym(RingSymbol::pi, m).scaled(rat_pow(rat(2), m)); }

// (i/rho)^m, exact with period twelve; the base is sqrt3/2 - i/2
RingExpr i_over_rho_pow(long m) {
  RingExpr base = sym(RingSymbol::s3).scaled(rat(1, 2)) +
                  RingExpr::from(GaussianRational(rat(0), rat(-1, 2)));
  RingExpr acc = RingExpr::constant(rat(1));
  long mm = ((m % 12) + 12) % 12;
  for (long t = 0; t < mm; ++t) acc = acc * base;
  return acc;
}

// (2 pi i / w2)^m on a symbolic tag, m >= 0
RingExpr omega_pow_sym(long m, BasisTag tag) {
  return tag == BasisTag::square ? two_pi_pow(m) : two_pi_pow(m) * i_over_rho_pow(m);
}

void check_K_case(long k, long r, const TwistParams& t) {
  if (r < 1) throw ConfigError("K_closed: weight r must be >= 1");
  if (k < 1) throw ConfigError("K_closed: order k must be >= 1");
  bool z_interior = t.z > 0 && t.z < 1;
  bool abs_ok = k >= 3 || (k == 2 && z_interior);
  Rational alpha = t.y + Rational(r) * t.z;
  bool lim_ok = (k == 1 && z_interior && !is_integer(alpha)) ||
                (k == 2 && !z_interior && !t.origin_xy());
  if (!abs_ok && !lim_ok) {
    if (k == 1)
      throw CasePreconditionViolated(
          "K_closed: k = 1 requires 0 < z < 1 and y + r z not an integer");
    throw CasePreconditionViolated(
        "K_closed: k = 2 with z in {0, 1} requires (x, y) != (0, 0)");
  }
}

RingExpr K_exact_origin(long k, long r, const Rational& z, BasisTag tag) {
  if (z == 1) {
    RingExpr base = K_exact_origin(k, r, rat(0), tag);
    return (k + r) % 2 ? -base : base;
  }
  Rational rz_frac = frac_int_parts(Rational(r) * z).frac_part;
  RingExpr total;
  for (long l = r + 1; l <= k + r; ++l) {
    RingExpr H = hurwitz_symbolic(l, tag);
    if (H.is_zero()) continue;
    long m = k + r - l;
    Rational pref = bh_at(m, r, z) /
                    (Rational(factorial(l)) * Rational(factorial(m)));
    if (pref == 0) continue;
    total += H * omega_pow_sym(m, tag).scaled(pref);
  }
  for (long l = 0; l <= r; ++l) {
    RingExpr H = hurwitz_symbolic(l, tag);
    if (H.is_zero()) continue;
    long m = k + r - l;
    Rational inner = bh_at(m, r, z) / Rational(factorial(m));
    for (long j = 0; j <= r - l; ++j) {
      long mb = r - j - l;
      Rational coef = bh_at(mb, r, z) / Rational(factorial(mb));
      coef *= Rational(binomial(static_cast<unsigned long>(k + j - 1),
                                static_cast<unsigned long>(j)));
      coef *= bernoulli_poly(k + j).eval(rz_frac) / Rational(factorial(k + j));
      if (j % 2) coef = -coef;
      inner -= coef;
    }
    if (inner == 0) continue;
    total += H * omega_pow_sym(m, tag).scaled(inner / Rational(factorial(l)));
  }
  return total.scaled(Rational(factorial(static_cast<unsigned long>(k))));
}

HPComplex K_numeric(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                    const Constants& C) {
  if (t.origin_xy() && t.z == 1) {
    HPComplex v = K_numeric(k, r, TwistParams::make(rat(0), rat(0), rat(0)), basis, C);
    return (k + r) % 2 ? -v : v;
  }
  mpfr_prec_t wp = C.wp();
  std::vector<HPComplex> H = hurwitz_upto(k + r, t.x, t.y, basis, C);
  HPComplex tpi_w2 = mul_i(HPComplex::real(ldexp2(C.pi, 1))) / basis.w2;
  Rational alpha = t.y + Rational(r) * t.z;
  auto om = [&](long m) { return complex_pow_int(tpi_w2, m); };
  HPComplex total = HPComplex::zero(wp);
  for (long l = r + 1; l <= k + r; ++l) {
    long m = k + r - l;
    Rational pref = bh_at(m, r, t.z) /
                    (Rational(factorial(l)) * Rational(factorial(m)));
    if (pref == 0) continue;
    total += H[l] * om(m) * HPReal::of(pref, wp);
  }
  for (long l = 0; l <= r; ++l) {
    long m = k + r - l;
    HPComplex bracket =
        om(m) * HPReal::of(bh_at(m, r, t.z) / Rational(factorial(m)), wp);
    for (long j = 0; j <= r - l; ++j) {
      long mb = r - j - l;
      Rational coef = bh_at(mb, r, t.z) / Rational(factorial(mb));
      coef *= Rational(binomial(static_cast<unsigned long>(k + j - 1),
                                static_cast<unsigned long>(j)));
      coef /= Rational(factorial(static_cast<unsigned long>(k + j)));
      if (j % 2) coef = -coef;
      if (coef == 0) continue;
      bracket -= om(mb) * bernoulli_scaled(k + j, alpha, basis.w2, C) * HPReal::of(coef, wp);
    }
    total += H[l] * bracket * HPReal::of(Rational(1) / Rational(factorial(l)), wp);
  }
  return total * HPReal::of(Rational(factorial(static_cast<unsigned long>(k))), wp);
}

}  // namespace

Rational square_lattice_H(long l) {
  if (l < 3 || l % 2) return Rational(0);
  return c_value(l / 2, false) * Rational(l) * Rational(factorial(l - 2)) /
         rat_pow(rat(2), l);
}

Rational hex_lattice_c(long k) { return c_value(k, true); }

RingExpr hurwitz_symbolic(long l, BasisTag tag) {
  if (tag == BasisTag::generic)
    throw ConfigError("hurwitz_symbolic: only the square and hexagonal tags are exact");
  if (l < 0) throw ConfigError("hurwitz_symbolic: negative order");
  if (l == 0) return RingExpr::constant(rat(1));
  if (l == 1) return RingExpr::zero();
  if (tag == BasisTag::square) {
    if (l == 2) return sym(RingSymbol::pi).scaled(rat(2));
    Rational h = square_lattice_H(l);
    if (h == 0) return RingExpr::zero();
    return sym(RingSymbol::w, l).scaled(-h * rat_pow(rat(2), l));
  }
  if (l == 2)
    return (rho_power_expr(1) * sym(RingSymbol::pi) * sym(RingSymbol::s3)).scaled(rat(-4, 3));
  if (l % 2) return RingExpr::zero();
  Rational c = hex_lattice_c(l / 2);
  if (c == 0) return RingExpr::zero();
  return sym(RingSymbol::wt, l).scaled(-c * Rational(factorial(l)) / Rational(l - 1));
}

std::vector<Theorem1Piece> theorem1_rhs(long k, long r) {
  if (k < 1 || r < 1)
    throw InadmissibleParameters("theorem1_rhs: k and r must be positive");

  auto wH = [&](long l) {  // (2w)^l H_l as a ring element; zero when H_l is
    Rational h = square_lattice_H(l);
    if (h == 0) return RingExpr::zero();
    return sym(RingSymbol::w, l).scaled(h * rat_pow(rat(2), l));
  };

  if (r == 1) {
    RingExpr e;
    for (long l = 4; l <= k + 1; ++l) {
      RingExpr hl = wH(l);
      if (hl.is_zero()) continue;
      long m = k + 1 - l;
      e += hl * two_pi_pow(m) * z_lift(bernoulli_poly(m))
               .scaled(Rational(1) / (Rational(factorial(l)) * Rational(factorial(m))));
    }
    e -= two_pi_pow(k) * z_lift(bernoulli_poly(k - 1))
             .scaled(Rational(1, 2) / Rational(factorial(k - 1)));
    RatPoly tailp = bernoulli_poly(1) * bernoulli_poly(k) - bernoulli_poly(k + 1);
    e += two_pi_pow(k + 1) * z_lift(tailp).scaled(Rational(1) / Rational(factorial(k)));
    return {Theorem1Piece{rat(0), rat(1), e}};
  }

  std::vector<Theorem1Piece> pieces;
  for (long seg = 0; seg < r; ++seg) {
    // on [seg/r, (seg+1)/r] the sawtooth {r z} is the line r z - seg
    auto b_frac = [&](long m) {
      return z_lift(bernoulli_poly(m).compose_affine(rat(r), rat(-seg)));
    };
    auto bracket = [&](long l) {
      long m = k + r - l;
      RingExpr b = z_lift(bh_poly(m, r))
                       .scaled(Rational(1) / Rational(factorial(m)));
      for (long j = 0; j <= r - l; ++j) {
        long mb = r - j - l;
        Rational c = Rational(binomial(static_cast<unsigned long>(k + j - 1),
                                       static_cast<unsigned long>(j))) /
                     (Rational(factorial(mb)) * Rational(factorial(k + j)));
        if (j % 2) c = -c;
        b -= (z_lift(bh_poly(mb, r)) * b_frac(k + j)).scaled(c);
      }
      return b;
    };

    RingExpr s1;
    for (long l = r + 1; l <= k + r; ++l) {
      RingExpr hl = wH(l);
      if (hl.is_zero()) continue;
      long m = k + r - l;
      s1 += hl * two_pi_pow(m) * z_lift(bh_poly(m, r))
                .scaled(Rational(1) / (Rational(factorial(l)) * Rational(factorial(m))));
    }
    RingExpr s2;
    for (long l = 4; l <= r; ++l) {
      RingExpr hl = wH(l);
      if (hl.is_zero()) continue;
      s2 += hl * two_pi_pow(k + r - l) * bracket(l)
                .scaled(Rational(1) / Rational(factorial(l)));
    }
    RingExpr s3 = two_pi_pow(k + r - 1) * bracket(2).scaled(rat(1, 2));
    RingExpr s4 = two_pi_pow(k + r) * bracket(0);
    pieces.push_back(Theorem1Piece{rat(seg, r), rat(seg + 1, r), s1 + s2 - s3 - s4});
  }
  return pieces;
}

RingExpr theorem1_rhs_at(long k, long r, const Rational& z) {
  if (z < 0 || z > 1)
    throw InadmissibleParameters("theorem1_rhs_at: z must lie in [0, 1]");
  std::vector<Theorem1Piece> pieces = theorem1_rhs(k, r);
  FracIntParts f = frac_int_parts(Rational(r) * z);
  long seg = static_cast<long>(f.int_part.get_si());
  if (seg >= r) seg = r - 1;  // z = 1 closes the last piece
  return pieces[static_cast<std::size_t>(seg)].expr.substitute_z(z);
}

bool theorem1_diff_consistent(long k, long r) {
  if (k < 2 || r < 1)
    throw InadmissibleParameters("theorem1_diff_consistent: needs k >= 2, r >= 1");
  std::vector<Theorem1Piece> hi = theorem1_rhs(k, r);
  std::vector<Theorem1Piece> lo = theorem1_rhs(k - 1, r);
  if (hi.size() != lo.size()) return false;
  RingExpr factor = two_pi_pow(1).scaled(rat(r));
  for (std::size_t j = 0; j < hi.size(); ++j)
    if (hi[j].expr.differentiate_z() != lo[j].expr * factor) return false;
  return true;
}

HPReal diff_relation_residual(long k, long r, const LatticeBasis& basis,
                              const Constants& C) {
  if (k < 2 || r < 1)
    throw ConfigError("diff_relation_residual: needs k >= 2, r >= 1");
  mpfr_prec_t wp = C.wp();
  const Rational z0 = rat(5, 12);
  const Rational h = rat(1, 1L << 20);
  static const long sc[7] = {-1, 9, -45, 0, 45, -9, 1};
  HPComplex acc = HPComplex::zero(wp);
  for (long i = -3; i <= 3; ++i) {
    if (!sc[i + 3]) continue;
    TwistParams t = TwistParams::make(rat(0), rat(0), z0 + Rational(i) * h);
    acc += K_coeff(k, r, t, basis, C) * HPReal::of(rat(sc[i + 3]), wp);
  }
  HPComplex deriv = acc * HPReal::of(Rational(1) / (Rational(60) * h), wp);
  HPComplex lhs =
      basis.w2 * deriv / (mul_i(HPComplex::real(ldexp2(C.pi, 1))) * HPReal::of(r, wp));
  HPComplex rhs = HPReal::of(k, wp) *
                  K_coeff(k - 1, r, TwistParams::make(rat(0), rat(0), z0), basis, C);
  return abs(lhs - rhs);
}

LatticeBasis basis_for_tag(BasisTag tag, const Constants& C) {
  mpfr_prec_t wp = C.wp();
  switch (tag) {
    case BasisTag::square:
      return LatticeBasis::make(HPComplex::of(1, 0, wp), HPComplex::i_unit(wp));
    case BasisTag::hexagonal:
      return LatticeBasis::make(HPComplex::of(1, 0, wp), C.rho);
    default:
      throw ConfigError("basis_for_tag: the generic tag carries no fixed basis");
  }
}

ClosedKResult K_closed(long k, long r, const TwistParams& t, BasisTag tag,
                       const Constants& C) {
  if (tag == BasisTag::generic)
    throw ConfigError("K_closed: the generic tag requires an explicit basis");
  check_K_case(k, r, t);
  if (t.origin_xy()) {
    RingExpr exact = K_exact_origin(k, r, t.z, tag);
    return ClosedKResult{eval_ring(exact, C), std::move(exact)};
  }
  return ClosedKResult{K_numeric(k, r, t, basis_for_tag(tag, C), C), std::nullopt};
}

ClosedKResult K_closed(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                       const Constants& C) {
  check_K_case(k, r, t);
  return ClosedKResult{K_numeric(k, r, t, basis, C), std::nullopt};
}

std::vector<CatalogEntry> example_catalog() {
  auto pi_t = [](long e, Rational c) { return sym(RingSymbol::pi, e).scaled(std::move(c)); };
  auto w4pi = [](long e, Rational c) {
    return (sym(RingSymbol::w, 4) * sym(RingSymbol::pi, e)).scaled(std::move(c));
  };
  auto wt6pi = [](long e, Rational c) {
    return (sym(RingSymbol::wt, 6) * sym(RingSymbol::pi, e)).scaled(std::move(c));
  };
  auto s3pi = [](long e, Rational c) {
    return (sym(RingSymbol::s3) * sym(RingSymbol::pi, e)).scaled(std::move(c));
  };
  auto cnst = [](Rational c) { return RingExpr::constant(std::move(c)); };
  auto times_i = [](const RingExpr& e) {
    return e.scaled(GaussianRational(rat(0), rat(1)));
  };
  RingExpr rho1 = rho_power_expr(1);
  RingExpr rho2 = rho_power_expr(2);  // 1/rho

  std::vector<CatalogEntry> cat;
  auto add = [&](const char* id, CatalogKind kind, long k, long weight, BasisTag tag,
                 RingExpr closed, int tol) {
    cat.push_back(CatalogEntry{id, kind, k, weight, tag, std::move(closed), tol});
  };

  add("1-11", CatalogKind::sinh_sum, 3, 1, BasisTag::square,
      w4pi(-1, rat(1, 15)) + pi_t(3, rat(-7, 90)) + pi_t(2, rat(1, 6)), 30);
  add("1-11-2", CatalogKind::sinh_sum, 5, 1, BasisTag::square,
      w4pi(1, rat(-1, 90)) + pi_t(5, rat(31, 2520)) + pi_t(4, rat(-7, 360)), 30);
  add("4-2", CatalogKind::sinh_sum, 2, 2, BasisTag::square,
      w4pi(-2, rat(1, 15)) + pi_t(2, rat(-11, 45)) + pi_t(1, rat(2, 3)), 30);
  add("4-3", CatalogKind::sinh_sum, 4, 2, BasisTag::square,
      w4pi(0, rat(-1, 45)) + pi_t(4, rat(37, 945)) + pi_t(3, rat(-4, 45)), 30);
  add("4-4", CatalogKind::sinh_sum, 1, 3, BasisTag::square,
      w4pi(-3, rat(1, 15)) + pi_t(1, rat(-11, 45)) + cnst(rat(2, 3)), 30);
  add("4-4-2", CatalogKind::sinh_sum, 1, 5, BasisTag::square,
      w4pi(-3, rat(-1, 15)) + pi_t(1, rat(191, 945)) + cnst(rat(-8, 15)), 30);
  add("4-4-3", CatalogKind::sinh_sum, 1, 1, BasisTag::square,
      pi_t(1, rat(1, 3)) + cnst(rat(-1)), 30);
  add("4-5", CatalogKind::sinh_sum, 3, 3, BasisTag::square,
      w4pi(-1, rat(-1, 30)) + pi_t(3, rat(151, 1890)) + pi_t(2, rat(-1, 5)), 30);
  add("4-6", CatalogKind::sinh_sum, 2, 4, BasisTag::square,
      w4pi(-2, rat(-1, 15)) + pi_t(2, rat(191, 945)) + pi_t(1, rat(-8, 15)), 30);
  add("aust-1", CatalogKind::coth_sum, 3, 1, BasisTag::square,
      w4pi(-1, rat(1, 15)) + pi_t(3, rat(4, 45)) + pi_t(2, rat(-1, 3)), 30);
  add("aust-2", CatalogKind::coth_sum, 4, 2, BasisTag::square,
      w4pi(0, rat(2, 45)) + pi_t(4, rat(16, 945)) + pi_t(3, rat(-4, 45)), 30);

  add("e-16", CatalogKind::sinh_sum, 1, 1, BasisTag::hexagonal,
      rho2 * times_i(pi_t(1, rat(1, 3)) + s3pi(0, rat(-2, 3))), 25);
  add("e-17", CatalogKind::sinh_sum, 3, 1, BasisTag::hexagonal,
      times_i(pi_t(3, rat(7, 90)) + s3pi(2, rat(-1, 9))), 25);
  add("e-18", CatalogKind::sinh_sum, 5, 1, BasisTag::hexagonal,
      rho1 * times_i(wt6pi(-1, rat(-1, 35)) + pi_t(5, rat(31, 2520)) +
                     s3pi(4, rat(-7, 540))),
      25);
  add("e-19", CatalogKind::sinh_sum, 2, 2, BasisTag::hexagonal,
      rho1 * (pi_t(2, rat(11, 45)) + s3pi(1, rat(-4, 9))), 25);
  add("e-20", CatalogKind::sinh_sum, 4, 2, BasisTag::hexagonal,
      rho2 * (wt6pi(-2, rat(-1, 35)) + pi_t(4, rat(37, 945)) + s3pi(3, rat(-8, 135))),
      25);
  add("aust-3", CatalogKind::coth_sum, 4, 2, BasisTag::hexagonal,
      rho2 * (wt6pi(-2, rat(-1, 35)) + pi_t(4, rat(16, 945)) + s3pi(3, rat(-8, 135))),
      25);
  return cat;
}

}  // namespace hsze
