#include "isotope/linalg.hpp"

#include <algorithm>

#include "isotope/errors.hpp"

namespace isotope {

Matrix::Matrix(unsigned n, PrimeField F) : n_(n), F_(F), a_(static_cast<std::size_t>(n) * n, 0) {
  if (n == 0) throw invalid_input("matrix: dimension must be positive");
}

Matrix Matrix::identity(unsigned n, PrimeField F) {
  Matrix m(n, F);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != n_) throw invalid_input("matrix: vector size mismatch");
  Vec y(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < n_; ++j) acc = F_.add(acc, F_.mul(at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::mul(const Matrix& rhs) const {
  if (rhs.n_ != n_ || !(rhs.F_ == F_)) throw invalid_input("matrix: operand mismatch");
  Matrix out(n_, F_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const std::uint64_t v = at(i, k);
      if (v == 0) continue;
      for (unsigned j = 0; j < n_; ++j)
        out.at(i, j) = F_.add(out.at(i, j), F_.mul(v, rhs.at(k, j)));
    }
  return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
  if (rhs.n_ != n_ || !(rhs.F_ == F_)) throw invalid_input("matrix: operand mismatch");
  Matrix out(n_, F_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_.add(a_[i], rhs.a_[i]);
  return out;
}

Matrix Matrix::scaled(std::uint64_t c) const {
  Matrix out(n_, F_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = F_.mul(a_[i], c);
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  Matrix acc = identity(n_, F_);
  Matrix base = *this;
  while (e) {
    if (e & 1) acc = acc.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t Matrix::det() const {
  std::vector<std::uint64_t> w = a_;
  auto cell = [&](unsigned i, unsigned j) -> std::uint64_t& { return w[i * n_ + j]; };
  std::uint64_t d = 1;
  bool negate = false;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && cell(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) std::swap(cell(pivot, j), cell(col, j));
      negate = !negate;
    }
    const std::uint64_t pv = cell(col, col);
    d = F_.mul(d, pv);
    const std::uint64_t pinv = F_.inv(pv);
    for (unsigned r = col + 1; r < n_; ++r) {
      const std::uint64_t f = F_.mul(cell(r, col), pinv);
      if (f == 0) continue;
      for (unsigned j = col; j < n_; ++j) cell(r, j) = F_.sub(cell(r, j), F_.mul(f, cell(col, j)));
    }
  }
  return negate ? F_.neg(d) : d;
}

Matrix Matrix::inverse() const {
  std::vector<std::uint64_t> w = a_;
  Matrix inv = identity(n_, F_);
  auto cell = [&](unsigned i, unsigned j) -> std::uint64_t& { return w[i * n_ + j]; };
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && cell(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw invalid_input("matrix: not invertible");
    if (pivot != col)
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(cell(pivot, j), cell(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const std::uint64_t pinv = F_.inv(cell(col, col));
    for (unsigned j = 0; j < n_; ++j) {
      cell(col, j) = F_.mul(cell(col, j), pinv);
      inv.at(col, j) = F_.mul(inv.at(col, j), pinv);
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == col) continue;
      const std::uint64_t f = cell(r, col);
      if (f == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        cell(r, j) = F_.sub(cell(r, j), F_.mul(f, cell(col, j)));
        inv.at(r, j) = F_.sub(inv.at(r, j), F_.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::vector<Vec> Matrix::kernel() const {
  std::vector<std::uint64_t> w = a_;
  auto cell = [&](unsigned i, unsigned j) -> std::uint64_t& { return w[i * n_ + j]; };
  std::vector<int> pivot_of_col(n_, -1);
  unsigned row = 0;
  for (unsigned col = 0; col < n_ && row < n_; ++col) {
    unsigned pivot = row;
    while (pivot < n_ && cell(pivot, col) == 0) ++pivot;
    if (pivot == n_) continue;
    if (pivot != row)
      for (unsigned j = 0; j < n_; ++j) std::swap(cell(pivot, j), cell(row, j));
    const std::uint64_t pinv = F_.inv(cell(row, col));
    for (unsigned j = 0; j < n_; ++j) cell(row, j) = F_.mul(cell(row, j), pinv);
    for (unsigned r = 0; r < n_; ++r) {
      if (r == row) continue;
      const std::uint64_t f = cell(r, col);
      if (f == 0) continue;
      for (unsigned j = 0; j < n_; ++j) cell(r, j) = F_.sub(cell(r, j), F_.mul(f, cell(row, j)));
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<Vec> basis;
  for (unsigned free = 0; free < n_; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec v(n_, 0);
    v[free] = 1;
    for (unsigned col = 0; col < n_; ++col)
      if (pivot_of_col[col] >= 0)
        v[col] = F_.neg(cell(static_cast<unsigned>(pivot_of_col[col]), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Matrix::is_identity() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint64_t v) { return v == 0; });
}

std::optional<Permutation> Matrix::as_permutation() const {
  std::vector<unsigned> images(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    unsigned hit = 0, col = 0;
    for (unsigned j = 0; j < n_; ++j) {
      if (at(i, j) == 0) continue;
      if (at(i, j) != 1) return std::nullopt;
      ++hit;
      col = j;
    }
    if (hit != 1) return std::nullopt;
    images[i] = col + 1;
  }
  std::vector<bool> seen(n_, false);
  for (unsigned v : images) {
    if (seen[v - 1]) return std::nullopt;
    seen[v - 1] = true;
  }
  return Permutation(images);
}

Matrix perm_map(const Permutation& sigma, PrimeField F) {
  Matrix m(sigma.degree(), F);
  for (unsigned i = 1; i <= sigma.degree(); ++i) m.at(i - 1, sigma(i) - 1) = 1;
  return m;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<unsigned> echelonize(std::vector<Vec>& rows, unsigned ncols, const PrimeField& F) {
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < ncols && row < rows.size(); ++col) {
    unsigned pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row]);
    const std::uint64_t pinv = F.inv(rows[row][col]);
    for (auto& v : rows[row]) v = F.mul(v, pinv);
    for (unsigned r = 0; r < rows.size(); ++r) {
      if (r == row) continue;
      const std::uint64_t f = rows[r][col];
      if (f == 0) continue;
      for (unsigned j = 0; j < rows[r].size(); ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned row_rank(std::vector<Vec> rows, const PrimeField& F) {
  if (rows.empty()) return 0;
  return static_cast<unsigned>(echelonize(rows, static_cast<unsigned>(rows[0].size()), F).size());
}

std::optional<Vec> solve_system(std::vector<Vec> rows, Vec rhs, unsigned ncols, const PrimeField& F) {
  if (rows.size() != rhs.size()) throw invalid_input("solve_system: shape mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw invalid_input("solve_system: shape mismatch");
    rows[i].push_back(rhs[i]);
  }
  const auto pivots = echelonize(rows, ncols, F);
  for (const auto& r : rows) {
    bool zero = true;
    for (unsigned j = 0; j < ncols; ++j)
      if (r[j] != 0) {
        zero = false;
        break;
      }
    if (zero && r[ncols] != 0) return std::nullopt;
  }
  Vec x(ncols, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][ncols];
  return x;
}

Matrix matrix_from_columns(const std::vector<Vec>& cols, const PrimeField& F) {
  if (cols.empty()) throw invalid_input("matrix_from_columns: no columns");
  const unsigned n = static_cast<unsigned>(cols[0].size());
  if (cols.size() != n) throw invalid_input("matrix_from_columns: matrix must be square");
  Matrix m(n, F);
  for (unsigned j = 0; j < n; ++j) {
    if (cols[j].size() != n) throw invalid_input("matrix_from_columns: ragged columns");
    for (unsigned i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec vec_add(const Vec& a, const Vec& b, const PrimeField& F) {
  if (a.size() != b.size()) throw invalid_input("vec_add: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b, const PrimeField& F) {
  if (a.size() != b.size()) throw invalid_input("vec_sub: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return out;
}

Vec vec_scaled(const Vec& a, std::uint64_t c, const PrimeField& F) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

}  // namespace isotope
