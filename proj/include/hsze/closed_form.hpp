#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsze/domain.hpp"
#include "hsze/ring_expr.hpp"

namespace hsze {

enum class BasisTag { square, hexagonal, generic };

// Exact rational data of the even lattice sums on the two symbolic bases,
// generated by the quadratic recurrence on the c-sequence.
Rational square_lattice_H(long l);  // H_4 = 1/10, H_8 = 3/10, ...; 0 unless 4 | l
Rational hex_lattice_c(long k);     // wt^{2k} c_k/(2k-1) is the order-2k sum

// Exact origin-twist Taylor data on the symbolic bases as ring elements.
RingExpr hurwitz_symbolic(long l, BasisTag tag);

struct Theorem1Piece {
  Rational z_lo, z_hi;
  RingExpr expr;  // z-polynomial valid on [z_lo, z_hi]
};

// closed z-polynomial form of pi^r times the order-k, weight-r sum at the
// square-lattice origin twist; one piece per interval of constancy of [r z]
std::vector<Theorem1Piece> theorem1_rhs(long k, long r);

// piece selection plus exact substitution
RingExpr theorem1_rhs_at(long k, long r, const Rational& z);

// exact piecewise consistency of the derivative lowering: the z-derivative
// of each order-k piece equals 2 pi r times the order-(k-1) piece
bool theorem1_diff_consistent(long k, long r);

// numeric residual of the same lowering on an arbitrary basis: contour
// coefficients differentiated by a 6th-order stencil of half-width 3*2^-20
// at z = 5/12, compared against k times the next-lower coefficient
HPReal diff_relation_residual(long k, long r, const LatticeBasis& basis,
                              const Constants& C);

struct ClosedKResult {
  HPComplex value;
  std::optional<RingExpr> exact;  // present on symbolic tags at the origin twist
};

// the finite Hurwitz-Bernoulli form of K_{k,r}; exact on the square and
// hexagonal tags at the origin twist, numeric otherwise
ClosedKResult K_closed(long k, long r, const TwistParams& t, BasisTag tag,
                       const Constants& C);
ClosedKResult K_closed(long k, long r, const TwistParams& t, const LatticeBasis& basis,
                       const Constants& C);

enum class CatalogKind { sinh_sum, coth_sum };

struct CatalogEntry {
  std::string id;
  CatalogKind kind;
  long k;       // order of the lattice power
  long weight;  // sinh weight r, or coth power p
  BasisTag tag;
  RingExpr closed;
  int tol_exp;  // pinned verification tolerance, 10^-tol_exp
};

// catalogued special values; sinh entries are taken at the centered twist
// (0, 0, 1/2)
std::vector<CatalogEntry> example_catalog();

LatticeBasis basis_for_tag(BasisTag tag, const Constants& C);

}  // namespace hsze
