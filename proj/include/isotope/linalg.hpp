#ifndef ISOTOPE_LINALG_HPP
#define ISOTOPE_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "isotope/field.hpp"
#include "isotope/perm.hpp"

namespace isotope {

using Vec = std::vector<std::uint64_t>;

// Square matrix over a prime field, column action M·x. Gaussian elimination
// with first-nonzero pivoting throughout; the field is exact so there are no
// stability concerns.
class Matrix {
public:
  Matrix(unsigned n, PrimeField F);
  static Matrix identity(unsigned n, PrimeField F);

  unsigned size() const { return n_; }
  const PrimeField& field() const { return F_; }

  std::uint64_t& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }
  std::uint64_t at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }

  Vec apply(const Vec& x) const;
  Matrix mul(const Matrix& rhs) const;
  Matrix add(const Matrix& rhs) const;
  Matrix pow(std::uint64_t e) const;
  Matrix scaled(std::uint64_t c) const;

  std::uint64_t det() const;
  bool invertible() const { return det() != 0; }
  Matrix inverse() const;  // invalid_input when singular

  // Basis of the null space, deterministic (free columns in ascending order).
  std::vector<Vec> kernel() const;

  bool is_identity() const;
  bool is_zero() const;
  // Reads the permutation sigma with at(i, sigma(i)) = 1 off a 0/1 matrix.
  std::optional<Permutation> as_permutation() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  unsigned n_;
  PrimeField F_;
  std::vector<std::uint64_t> a_;
};

// The coordinate-permuting map x -> (x_{sigma(1)}, ..., x_{sigma(n)}).
Matrix perm_map(const Permutation& sigma, PrimeField F);

// Rank of the span of the given row vectors.
unsigned row_rank(std::vector<Vec> rows, const PrimeField& F);

// One solution of the (possibly rectangular) system rows·x = rhs, free
// variables set to zero; nullopt when inconsistent.
std::optional<Vec> solve_system(std::vector<Vec> rows, Vec rhs, unsigned ncols, const PrimeField& F);

// Matrix with the given columns (all of size n).
Matrix matrix_from_columns(const std::vector<Vec>& cols, const PrimeField& F);

Vec vec_add(const Vec& a, const Vec& b, const PrimeField& F);
Vec vec_sub(const Vec& a, const Vec& b, const PrimeField& F);
Vec vec_scaled(const Vec& a, std::uint64_t c, const PrimeField& F);
bool vec_is_zero(const Vec& a);

}  // namespace isotope

#endif
