#include "isotope/category.hpp"

#include "isotope/errors.hpp"
#include "isotope/perm.hpp"

namespace isotope {

CalibratedAssociative CalibratedAssociative::make(Algebra algebra, Matrix auto_map) {
  const auto rep = check_identities(algebra);
  if (!rep.commutative || !rep.associative || !rep.unital)
    throw invalid_input("calibrated associative: algebra must be commutative associative unital");
  if (!is_automorphism(algebra, auto_map))
    throw invalid_input("calibrated associative: map is not an automorphism");
  if (auto_map.apply(*rep.unit) != *rep.unit)
    throw invalid_input("calibrated associative: automorphism must fix the unit");
  return CalibratedAssociative{std::move(algebra), *rep.unit, std::move(auto_map)};
}

CalibratedMedial CalibratedMedial::make(Algebra algebra, Vec axis) {
  if (algebra.multiply(axis, axis) != axis)
    throw invalid_input("calibrated medial: axis is not idempotent");
  if (!algebra.left_mult(axis).invertible())
    throw invalid_input("calibrated medial: axis multiplication is not invertible");
  const auto rep = check_identities(algebra);
  if (!rep.commutative || !rep.medial)
    throw invalid_input("calibrated medial: algebra must be commutative medial");
  return CalibratedMedial{std::move(algebra), std::move(axis)};
}

CalibratedMedial to_medial(const CalibratedAssociative& ca) {
  const unsigned n = ca.algebra.dim();
  std::vector<std::uint64_t> sc(static_cast<std::size_t>(n) * n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const Vec v = ca.auto_map.apply(ca.algebra.basis_product(i, j));
      for (unsigned k = 0; k < n; ++k) sc[(static_cast<std::size_t>(i) * n + j) * n + k] = v[k];
    }
  Algebra medial(n, ca.algebra.field(), std::move(sc), Provenance::Custom);
  auto out = CalibratedMedial::make(std::move(medial), ca.unit);
  // the axis multiplication of the result is the calibrating automorphism
  if (!(out.algebra.left_mult(out.axis) == ca.auto_map))
    throw check_failure("to_medial: axis multiplication differs from the calibrating map");
  return out;
}

CalibratedAssociative to_associative(const CalibratedMedial& cm) {
  const unsigned n = cm.algebra.dim();
  const Matrix L = cm.algebra.left_mult(cm.axis);
  if (!L.invertible()) throw invalid_input("to_associative: axis multiplication is not invertible");
  const Matrix Linv = L.inverse();
  std::vector<std::uint64_t> sc(static_cast<std::size_t>(n) * n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const Vec v = Linv.apply(cm.algebra.basis_product(i, j));
      for (unsigned k = 0; k < n; ++k) sc[(static_cast<std::size_t>(i) * n + j) * n + k] = v[k];
    }
  Algebra assoc(n, cm.algebra.field(), std::move(sc), Provenance::Custom);
  auto out = CalibratedAssociative::make(std::move(assoc), L);
  if (out.unit != cm.axis) throw check_failure("to_associative: unit differs from the axis");
  return out;
}

bool roundtrip_check(const CalibratedAssociative& ca) {
  const CalibratedAssociative back = to_associative(to_medial(ca));
  return back == ca;
}

Matrix calibration_independence(const Algebra& A, const Vec& c1, const Vec& c2) {
  for (const Vec* c : {&c1, &c2}) {
    if (A.multiply(*c, *c) != *c)
      throw invalid_input("calibration_independence: axis is not idempotent");
    if (!A.left_mult(*c).invertible())
      throw invalid_input("calibration_independence: axis multiplication is not invertible");
  }
  const Matrix f = A.left_mult(c1).inverse().mul(A.left_mult(c2));
  if (!is_automorphism(A, f))
    throw check_failure("calibration_independence: map is not an automorphism");
  if (f.apply(c1) != c2)
    throw check_failure("calibration_independence: map does not carry the first axis to the second");
  return f;
}

bool conjugacy_calibration_check(const Algebra& assoc, const Matrix& h1, const Matrix& h2) {
  if (!is_automorphism(assoc, h1) || !is_automorphism(assoc, h2))
    throw invalid_input("conjugacy_calibration_check: maps must be automorphisms");
  const auto p1 = h1.as_permutation();
  const auto p2 = h2.as_permutation();
  if (!p1 || !p2)
    throw invalid_input("conjugacy_calibration_check: expected permutation automorphisms");
  if (!are_conjugate(*p1, *p2)) return false;
  // cross-check by conjugating explicitly at the matrix level
  const Permutation g = conjugator(*p1, *p2);
  const Matrix fg = perm_map(g.inverse(), assoc.field());
  if (!(fg.mul(h1).mul(fg.inverse()) == h2))
    throw check_failure("conjugacy_calibration_check: explicit conjugation failed");
  return true;
}

}  // namespace isotope
