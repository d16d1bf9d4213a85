#ifndef ISOTOPE_SPECTRAL_HPP
#define ISOTOPE_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "isotope/algebra.hpp"
#include "isotope/idem.hpp"

namespace isotope {

struct PeirceDecomposition {
  Vec idempotent;
  FieldPoly charpoly;
  std::vector<std::uint64_t> eigenvalues;        // ascending residues
  std::vector<std::vector<Vec>> eigenspaces;     // kernel basis per eigenvalue
  std::vector<unsigned> multiplicities;          // root multiplicity in the characteristic polynomial
  bool semisimple = false;                       // eigenspace dimensions sum to n
};

// Eigenvalues are found by scanning the field for roots of the characteristic
// polynomial; eigenspaces are kernels of L(c) - lambda I.
PeirceDecomposition peirce(const Algebra& A, const Vec& c);

// Closed-form eigenvector of L(c_k) in the single-cycle isotope with
// eigenvalue eps^p, verified by direct operator application before returning.
Vec eigvec_formula(std::uint64_t k, unsigned p_exp, unsigned n, PrimeField F);

struct FusionTable {
  std::vector<std::uint64_t> eigenvalues;
  // rule[a][b] = indices of the eigenvalues supporting A_a * A_b; empty means
  // the product span is zero.
  std::vector<std::vector<std::vector<unsigned>>> rule;
  // span_dim[a][b] = dimension of the product span.
  std::vector<std::vector<unsigned>> span_dim;
};

// Exact fusion data of the Peirce decomposition at c: products of eigenspace
// basis vectors are decomposed in the eigenbasis and their support recorded.
FusionTable fusion_table(const Algebra& A, const Vec& c);

// Single-cycle law A_{eps^p} * A_{eps^q} = A_{eps^(p+q)} with equality of spans.
bool fusion_cyclic_law(const Algebra& A, const Vec& c);

// Associative Peirce law: A_1*A_1 = A_1, A_1*A_0 = 0, A_0*A_0 = A_0.
bool fusion_peirce_law(const Algebra& A, const Vec& c);

// Sum of L(c)^s over the nonzero idempotents of the table.
Matrix power_sum_check(const Algebra& A, const IdempotentTable& T, unsigned s);

// Rank of the matrix of idempotent vectors.
unsigned span_rank(const IdempotentTable& T);

// Smallest m >= 1 with L(c)^m = I, nullopt when the cap is passed. Requires
// an invertible L(c).
std::optional<std::uint64_t> operator_order_check(const Algebra& A, const Vec& c,
                                                  std::uint64_t cap = 1'000'000ULL);

// Determinant of the 3x3 circulant of (a0, a1, a2) in the polynomial basis.
std::uint64_t circulant_delta(const Vec& a, const PrimeField& F);

}  // namespace isotope

#endif
