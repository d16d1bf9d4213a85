#ifndef ISOTOPE_CATEGORY_HPP
#define ISOTOPE_CATEGORY_HPP

#include "isotope/algebra.hpp"

namespace isotope {

// Commutative associative unital algebra with a distinguished automorphism
// fixing the unit.
struct CalibratedAssociative {
  Algebra algebra;
  Vec unit;
  Matrix auto_map;

  // Verifies commutativity, associativity, unitality, and that the map is an
  // automorphism fixing the unit.
  static CalibratedAssociative make(Algebra algebra, Matrix auto_map);

  friend bool operator==(const CalibratedAssociative& a, const CalibratedAssociative& b) {
    return a.algebra == b.algebra && a.unit == b.unit && a.auto_map == b.auto_map;
  }
};

// Medial algebra with a distinguished idempotent axis whose left
// multiplication is invertible.
struct CalibratedMedial {
  Algebra algebra;
  Vec axis;

  static CalibratedMedial make(Algebra algebra, Vec axis);

  friend bool operator==(const CalibratedMedial& a, const CalibratedMedial& b) {
    return a.algebra == b.algebra && a.axis == b.axis;
  }
};

// x*y = h(x q y) with axis the old unit; the result is verified medial with
// an invertible axis.
CalibratedMedial to_medial(const CalibratedAssociative& ca);

// x q y = L(c)^-1 (x*y) with unit the old axis and distinguished automorphism
// L(c); the result is verified associative, unital, and calibrated.
CalibratedAssociative to_associative(const CalibratedMedial& cm);

// Round trip through both constructions returns the input exactly.
bool roundtrip_check(const CalibratedAssociative& ca);

// The calibrated isomorphism L(c1)^-1 L(c2) between the pointings at c1 and
// c2, verified as an algebra automorphism carrying c1 to c2.
Matrix calibration_independence(const Algebra& A, const Vec& c1, const Vec& c2);

// For the product algebra: two calibrating automorphisms give isomorphic
// calibrated algebras exactly when they are conjugate, tested through cycle
// types and cross-checked by explicit conjugation.
bool conjugacy_calibration_check(const Algebra& assoc, const Matrix& h1, const Matrix& h2);

}  // namespace isotope

#endif
