#ifndef ISOTOPE_ALGEBRA_HPP
#define ISOTOPE_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "isotope/field.hpp"
#include "isotope/linalg.hpp"
#include "isotope/perm.hpp"

namespace isotope {

enum class Provenance { Product, Isotope, DirectSum, PolyModel, Custom };

// Finite-dimensional commutative algebra over F_p given by its structure
// constants: e_i * e_j = sum_k sc(i,j,k) e_k. Commutativity is enforced at
// construction; everything else is a property to check, not an assumption.
class Algebra {
public:
  Algebra(unsigned n, PrimeField F, std::vector<std::uint64_t> sc, Provenance prov,
          std::optional<Permutation> sigma = std::nullopt);

  static Algebra product(unsigned n, PrimeField F);

  unsigned dim() const { return n_; }
  const PrimeField& field() const { return F_; }
  Provenance provenance() const { return prov_; }
  const std::optional<Permutation>& sigma() const { return sigma_; }

  std::uint64_t sc(unsigned i, unsigned j, unsigned k) const {
    return sc_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_product(unsigned i, unsigned j) const;
  Matrix left_mult(const Vec& a) const;

  // Nonzero structure constants as (i, j, k, value), for scan loops.
  const std::vector<std::array<std::uint64_t, 4>>& nonzero_entries() const { return nnz_; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.F_ == b.F_ && a.sc_ == b.sc_;
  }

private:
  unsigned n_;
  PrimeField F_;
  std::vector<std::uint64_t> sc_;
  Provenance prov_;
  std::optional<Permutation> sigma_;
  std::vector<std::array<std::uint64_t, 4>> nnz_;
};

// x * y = h(x • y). h must be an automorphism of A.
Algebra inner_isotope(const Algebra& A, const Matrix& h);

// The isotope of the coordinate-wise product algebra under the map of sigma.
Algebra isotope_of(const Permutation& sigma, PrimeField F);

Algebra direct_sum(const Algebra& A, const Algebra& B);

struct CycleBlock {
  std::vector<unsigned> orbit;  // original coordinates in traversal order
  Algebra block;                // single-cycle isotope on the orbit coordinates
};

struct CycleDecomposition {
  std::vector<CycleBlock> blocks;
  // relabeling(t) = original coordinate carried to position t; the map
  // x -> (x_{relabeling(1)}, ...) is an isomorphism onto the direct sum.
  Permutation relabeling;
};

CycleDecomposition decompose_by_cycles(const Permutation& sigma, PrimeField F);

// Polynomial coefficients over F_p by ascending exponent.
using FieldPoly = std::vector<std::uint64_t>;

std::uint64_t field_poly_eval(const FieldPoly& f, std::uint64_t x, const PrimeField& F);
FieldPoly field_poly_mul(const FieldPoly& a, const FieldPoly& b, const PrimeField& F);
std::string field_poly_to_string(const FieldPoly& f, const PrimeField& F);

// Monic characteristic polynomial det(xI - M), computed by evaluating the
// determinant at n+1 field points and interpolating. Requires p > n.
FieldPoly char_poly(const Matrix& M);

struct IdentityReport {
  bool commutative = false;
  bool associative = false;
  bool medial = false;
  bool unital = false;
  std::optional<std::array<unsigned, 2>> commutative_witness;  // basis pair
  std::optional<std::array<unsigned, 3>> associative_witness;  // basis triple
  std::optional<std::array<unsigned, 4>> medial_witness;       // basis quadruple
  std::optional<Vec> unit;
};

// Identities verified on basis tuples, which suffices by multilinearity.
IdentityReport check_identities(const Algebra& A);

bool is_automorphism(const Algebra& A, const Matrix& M);

// f must be invertible and carry products of A to products of B.
bool is_isomorphism(const Algebra& A, const Algebra& B, const Matrix& f);

struct PolyModelResult {
  Algebra algebra;      // power basis 1, z, ..., z^(n-1), convolution product
  Matrix vandermonde;   // evaluation at the n-th roots of unity; isomorphism onto the product algebra
  Matrix substitution;  // z -> eps*z, the distinguished automorphism
};

PolyModelResult poly_model(unsigned n, PrimeField F);

}  // namespace isotope

#endif
