#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hsze/closed_form.hpp"
#include "hsze/errors.hpp"
#include "hsze/lattice_series.hpp"
#include "hsze/theta.hpp"

using namespace hsze;

namespace {

const Constants& cst() {
  static Constants C = make_constants(PrecisionConfig::make(256));
  return C;
}

LatticeBasis square_basis() {
  mpfr_prec_t wp = cst().wp();
  return LatticeBasis::make(HPComplex::of(1, 0, wp), HPComplex::i_unit(wp));
}

LatticeBasis hex_basis() {
  mpfr_prec_t wp = cst().wp();
  return LatticeBasis::make(HPComplex::of(1, 0, wp), cst().rho);
}

HPReal tol_bits(long b) { return ldexp2(HPReal::of(1, cst().wp()), -b); }

TruncationPolicy default_policy() { return TruncationPolicy::defaults(cst().cfg); }

TwistParams twist(Rational x, Rational y, Rational z) {
  return TwistParams::make(std::move(x), std::move(y), std::move(z));
}

TwistParams origin(Rational z) { return twist(rat(0), rat(0), std::move(z)); }

// coefficient * pi^p * w^we * z^ze, the only monomials theorem1_rhs produces
RingExpr mono(const Rational& c, long p, long we, long ze) {
  RingExpr e = RingExpr::symbol(RingSymbol::pi, p);
  if (we) e = e * RingExpr::symbol(RingSymbol::w, we);
  if (ze) e = e * RingExpr::symbol(RingSymbol::z, ze);
  return e.scaled(c);
}

const CatalogEntry& entry(const std::vector<CatalogEntry>& cat, const std::string& id) {
  for (const CatalogEntry& e : cat)
    if (e.id == id) return e;
  throw NotCatalogued("missing id " + id);
}

}  // namespace

TEST_CASE("square lattice rational data") {
  CHECK(square_lattice_H(4) == rat(1, 10));
  CHECK(square_lattice_H(8) == rat(3, 10));
  CHECK(square_lattice_H(12) == rat(567, 130));
  for (long l : {0L, 1L, 2L, 3L, 5L, 6L, 7L, 9L, 10L, 11L, 13L, 14L})
    CHECK(square_lattice_H(l) == 0);
}

TEST_CASE("hexagonal lattice rational data") {
  CHECK(hex_lattice_c(3) == rat(1, 7));
  CHECK(hex_lattice_c(6) == rat(1, 637));
  CHECK(hex_lattice_c(9) == rat(1, 84721));
  for (long k : {2L, 4L, 5L, 7L, 8L, 10L, 11L}) CHECK(hex_lattice_c(k) == 0);
}

TEST_CASE("symbolic origin data matches the contour route") {
  const Constants& C = cst();
  HPReal tol = tol_bits(200);
  std::vector<HPComplex> sq = hurwitz_upto(12, rat(0), rat(0), square_basis(), C);
  std::vector<HPComplex> hx = hurwitz_upto(12, rat(0), rat(0), hex_basis(), C);
  for (long l = 0; l <= 12; ++l) {
    CAPTURE(l);
    CHECK(approx_equal(eval_ring(hurwitz_symbolic(l, BasisTag::square), C), sq[l], tol));
    CHECK(approx_equal(eval_ring(hurwitz_symbolic(l, BasisTag::hexagonal), C), hx[l], tol));
  }
}

TEST_CASE("weight one closed polynomials") {
  // k = 2: (2 pi^3/3 - 2 pi^2) z - pi^3/3 + pi^2
  std::vector<Theorem1Piece> p2 = theorem1_rhs(2, 1);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].z_lo == 0);
  CHECK(p2[0].z_hi == 1);
  RingExpr e2 = mono(rat(2, 3), 3, 0, 1) + mono(rat(-2), 2, 0, 1) +
                mono(rat(-1, 3), 3, 0, 0) + mono(rat(1), 2, 0, 0);
  CHECK(p2[0].expr == e2);

  // k = 3: (2 pi^4/3 - 2 pi^3) z^2 + (-2 pi^4/3 + 2 pi^3) z
  //        + w^4/15 + 4 pi^4/45 - pi^3/3
  std::vector<Theorem1Piece> p3 = theorem1_rhs(3, 1);
  REQUIRE(p3.size() == 1);
  RingExpr e3 = mono(rat(2, 3), 4, 0, 2) + mono(rat(-2), 3, 0, 2) +
                mono(rat(-2, 3), 4, 0, 1) + mono(rat(2), 3, 0, 1) +
                mono(rat(1, 15), 0, 4, 0) + mono(rat(4, 45), 4, 0, 0) +
                mono(rat(-1, 3), 3, 0, 0);
  CHECK(p3[0].expr == e3);

  // k = 4: (4 pi^5/9 - 4 pi^4/3) z^3 + (-2 pi^5/3 + 2 pi^4) z^2
  //        + (2 pi w^4/15 + 8 pi^5/45 - 2 pi^4/3) z - pi w^4/15 + pi^5/45
  std::vector<Theorem1Piece> p4 = theorem1_rhs(4, 1);
  REQUIRE(p4.size() == 1);
  RingExpr e4 = mono(rat(4, 9), 5, 0, 3) + mono(rat(-4, 3), 4, 0, 3) +
                mono(rat(-2, 3), 5, 0, 2) + mono(rat(2), 4, 0, 2) +
                mono(rat(2, 15), 1, 4, 1) + mono(rat(8, 45), 5, 0, 1) +
                mono(rat(-2, 3), 4, 0, 1) + mono(rat(-1, 15), 1, 4, 0) +
                mono(rat(1, 45), 5, 0, 0);
  CHECK(p4[0].expr == e4);
}

TEST_CASE("theorem output stays in the even lemniscatic ring") {
  for (long k = 1; k <= 6; ++k)
    for (long r = 1; r <= 4; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      std::vector<Theorem1Piece> pieces = theorem1_rhs(k, r);
      CHECK(static_cast<long>(pieces.size()) == r);
      for (const Theorem1Piece& p : pieces) {
        CHECK(p.expr.degree_in(RingSymbol::z) <= k - 1);
        CHECK(p.expr.degree_in(RingSymbol::pi) <= k + r);
        CHECK(p.expr.degree_in(RingSymbol::w) <= k + r);
        for (const auto& [m, c] : p.expr.terms()) {
          CHECK(c.im == 0);
          CHECK(m.wt_e == 0);
          CHECK(m.s3_e == 0);
          CHECK(m.pi_e >= 0);
          CHECK(m.w_e >= 0);
          CHECK(m.w_e % 4 == 0);
        }
      }
      if (r == 1) CHECK(pieces[0].expr.degree_in(RingSymbol::z) == k - 1);
    }
}

TEST_CASE("pieces join continuously for k >= 2") {
  for (long k = 2; k <= 5; ++k)
    for (long r = 2; r <= 4; ++r) {
      std::vector<Theorem1Piece> pieces = theorem1_rhs(k, r);
      for (std::size_t j = 0; j + 1 < pieces.size(); ++j) {
        CAPTURE(k);
        CAPTURE(r);
        CAPTURE(j);
        const Rational& knot = pieces[j].z_hi;
        CHECK(pieces[j].z_hi == pieces[j + 1].z_lo);
        CHECK(pieces[j].expr.substitute_z(knot) ==
              pieces[j + 1].expr.substitute_z(knot));
      }
    }
}

TEST_CASE("midpoint specializations reproduce the catalog") {
  std::vector<CatalogEntry> cat = example_catalog();
  const struct {
    long k, r;
    const char* id;
  } pairs[] = {{3, 1, "1-11"}, {5, 1, "1-11-2"}, {2, 2, "4-2"}, {4, 2, "4-3"},
               {1, 3, "4-4"},  {1, 5, "4-4-2"},  {1, 1, "4-4-3"}, {3, 3, "4-5"},
               {2, 4, "4-6"}};
  for (const auto& p : pairs) {
    CAPTURE(p.id);
    RingExpr lhs = theorem1_rhs_at(p.k, p.r, rat(1, 2));
    RingExpr rhs = entry(cat, p.id).closed * RingExpr::symbol(RingSymbol::pi, p.r);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("theorem equals the closed coefficient form exactly") {
  for (long k = 1; k <= 5; ++k)
    for (long r = 1; r <= 3; ++r)
      for (const Rational& z : {rat(1, 4), rat(5, 12), rat(1, 2)}) {
        if (k == 1 && is_integer(Rational(r) * z)) continue;
        std::string zs = rat_to_string(z);
        CAPTURE(k);
        CAPTURE(r);
        CAPTURE(zs);
        ClosedKResult K = K_closed(k, r, origin(z), BasisTag::square, cst());
        REQUIRE(K.exact.has_value());
        RingExpr scaled = K.exact->scaled(rat(-1) / Rational(factorial(k)));
        CHECK(theorem1_rhs_at(k, r, z) == scaled);
      }
}

TEST_CASE("closed coefficient form against contour extraction") {
  const Constants& C = cst();
  HPReal tol = tol_bits(180);
  for (BasisTag tag : {BasisTag::square, BasisTag::hexagonal}) {
    LatticeBasis basis = basis_for_tag(tag, C);
    int tagi = static_cast<int>(tag);
    for (const auto& [k, r] : std::vector<std::pair<long, long>>{{3, 1}, {2, 2}, {4, 2}}) {
      CAPTURE(tagi);
      CAPTURE(k);
      CAPTURE(r);
      ClosedKResult K = K_closed(k, r, origin(rat(1, 3)), tag, C);
      REQUIRE(K.exact.has_value());
      CHECK(approx_equal(K.value, K_coeff(k, r, origin(rat(1, 3)), basis, C), tol));
    }
  }
}

TEST_CASE("numeric closed form off the symbolic bases and off the origin") {
  const Constants& C = cst();
  mpfr_prec_t wp = C.wp();
  HPReal tol = tol_bits(170);

  TwistParams t = twist(rat(1, 5), rat(-1, 7), rat(2, 5));
  LatticeBasis tall = LatticeBasis::make(HPComplex::of(1, 0, wp), HPComplex::of(0, 2, wp));
  ClosedKResult K = K_closed(3, 2, t, tall, C);
  CHECK(!K.exact.has_value());
  CHECK(approx_equal(K.value, K_coeff(3, 2, t, tall, C), tol));

  // twisted input on a symbolic tag falls back to the numeric path
  ClosedKResult Kh = K_closed(2, 1, twist(rat(1, 3), rat(1, 4), rat(1, 2)),
                              BasisTag::hexagonal, C);
  CHECK(!Kh.exact.has_value());
  CHECK(approx_equal(Kh.value,
                     K_coeff(2, 1, twist(rat(1, 3), rat(1, 4), rat(1, 2)), hex_basis(), C),
                     tol));
}

TEST_CASE("reflection through z = 1") {
  const Constants& C = cst();
  HPReal tol = tol_bits(180);
  for (const auto& [k, r] : std::vector<std::pair<long, long>>{{3, 1}, {4, 2}, {5, 1}}) {
    CAPTURE(k);
    CAPTURE(r);
    ClosedKResult hi = K_closed(k, r, origin(rat(1)), BasisTag::square, C);
    ClosedKResult lo = K_closed(k, r, origin(rat(0)), BasisTag::square, C);
    REQUIRE(hi.exact.has_value());
    RingExpr expect = (k + r) % 2 ? -lo.exact.value() : lo.exact.value();
    CHECK(hi.exact.value() == expect);
    CHECK(approx_equal(hi.value, K_coeff(k, r, origin(rat(1)), square_basis(), C), tol));
  }
}

TEST_CASE("derivative lowering, exact and by stencil") {
  for (long k = 2; k <= 6; ++k)
    for (long r = 1; r <= 4; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      CHECK(theorem1_diff_consistent(k, r));
    }

  const Constants& C = cst();
  HPReal res = diff_relation_residual(3, 1, square_basis(), C);
  CHECK(res <= C.tol10(25));

  mpfr_prec_t wp = C.wp();
  LatticeBasis tall = LatticeBasis::make(HPComplex::of(1, 0, wp), HPComplex::of(0, 2, wp));
  CHECK(diff_relation_residual(4, 3, tall, C) <= C.tol10(25));
}

TEST_CASE("catalog entries match the summation routes") {
  const Constants& C = cst();
  std::vector<CatalogEntry> cat = example_catalog();
  CHECK(cat.size() == 17);
  TruncationPolicy policy = default_policy();
  for (const CatalogEntry& e : cat) {
    CAPTURE(e.id);
    HPComplex closed = eval_ring(e.closed, C);
    LatticeBasis basis = basis_for_tag(e.tag, C);
    HPComplex summed =
        e.kind == CatalogKind::sinh_sum
            ? sinh_eisenstein_G(e.k, e.weight, origin(rat(1, 2)), basis, C, policy,
                                SeriesRoute::row_accelerated)
                  .value
            : coth_eisenstein_sum(e.k, e.weight, basis, C, policy).value;
    CHECK(approx_equal(closed, summed, C.tol10(e.tol_exp)));
  }
}

TEST_CASE("inadmissible requests are rejected") {
  const Constants& C = cst();
  CHECK_THROWS_AS(theorem1_rhs(0, 1), InadmissibleParameters);
  CHECK_THROWS_AS(theorem1_rhs(1, 0), InadmissibleParameters);
  CHECK_THROWS_AS(theorem1_rhs_at(2, 1, rat(3, 2)), InadmissibleParameters);
  CHECK_THROWS_AS(theorem1_diff_consistent(1, 1), InadmissibleParameters);
  CHECK_THROWS_AS(hurwitz_symbolic(4, BasisTag::generic), ConfigError);
  CHECK_THROWS_AS(K_closed(2, 2, origin(rat(1, 2)), BasisTag::generic, C), ConfigError);
  // k = 1 needs y + r z off the integers, k = 2 at the ends needs a twist
  CHECK_THROWS_AS(K_closed(1, 2, origin(rat(1, 2)), BasisTag::square, C),
                  CasePreconditionViolated);
  CHECK_THROWS_AS(K_closed(2, 1, origin(rat(0)), BasisTag::square, C),
                  CasePreconditionViolated);
  CHECK_THROWS_AS(diff_relation_residual(1, 1, square_basis(), C), ConfigError);
}
