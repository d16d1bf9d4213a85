#include "isotope/spectral.hpp"

#include <algorithm>

#include "isotope/errors.hpp"

namespace isotope {

PeirceDecomposition peirce(const Algebra& A, const Vec& c) {
  if (A.multiply(c, c) != c) throw invalid_input("peirce: vector is not idempotent");
  const PrimeField& F = A.field();
  const unsigned n = A.dim();
  const Matrix L = A.left_mult(c);

  PeirceDecomposition out;
  out.idempotent = c;
  out.charpoly = char_poly(L);

  for (std::uint64_t lambda = 0; lambda < F.p(); ++lambda) {
    if (field_poly_eval(out.charpoly, lambda, F) != 0) continue;
    Matrix shifted = L;
    for (unsigned i = 0; i < n; ++i) shifted.at(i, i) = F.sub(shifted.at(i, i), lambda);
    auto basis = shifted.kernel();
    if (basis.empty()) throw check_failure("peirce: characteristic root with trivial kernel");

    // root multiplicity by repeated synthetic division at lambda
    unsigned mult = 0;
    FieldPoly f = out.charpoly;
    while (!f.empty() && field_poly_eval(f, lambda, F) == 0) {
      FieldPoly q(f.size() - 1, 0);
      std::uint64_t carry = 0;
      for (std::size_t i = f.size(); i-- > 1;) {
        carry = F.add(f[i], F.mul(carry, lambda));
        q[i - 1] = carry;
      }
      f = std::move(q);
      ++mult;
    }

    out.eigenvalues.push_back(lambda);
    out.eigenspaces.push_back(std::move(basis));
    out.multiplicities.push_back(mult);
  }

  unsigned total = 0;
  for (const auto& basis : out.eigenspaces) total += static_cast<unsigned>(basis.size());
  out.semisimple = total == n;
  return out;
}

Vec eigvec_formula(std::uint64_t k, unsigned p_exp, unsigned n, PrimeField F) {
  if (n < 2) throw invalid_input("eigvec_formula: n must be >= 2");
  const std::uint64_t N = (1ULL << n) - 1;
  verify_admissible(F, {n});
  const std::uint64_t zeta = primitive_root_of_order(N, F);
  const std::uint64_t eps = primitive_root_of_order(n, F);

  // eta_i = eps^((i-1)p) * zeta^(-k * s_i) with s_1 = 0 and
  // s_i = 2^(n-2) + ... + 2^(n-i) for i >= 2.
  Vec eta(n);
  std::uint64_t s = 0;
  for (unsigned i = 1; i <= n; ++i) {
    if (i >= 2) s = (s + (1ULL << (n - i))) % N;
    const std::uint64_t zexp = (N - (k % N) * s % N) % N;
    eta[i - 1] = F.mul(F.pow(eps, static_cast<std::uint64_t>(i - 1) * p_exp), F.pow(zeta, zexp));
  }

  // c_k with coordinates zeta^(2^(n-i) k)
  Vec ck(n);
  for (unsigned i = 1; i <= n; ++i)
    ck[i - 1] = F.pow(zeta, ((1ULL << (n - i)) % N) * (k % N) % N);

  const Algebra A = isotope_of(Permutation::cyclic_shift(n), F);
  const Vec image = A.multiply(ck, eta);
  if (image != vec_scaled(eta, F.pow(eps, p_exp), F))
    throw check_failure("eigvec_formula: vector fails the eigen equation");
  return eta;
}

FusionTable fusion_table(const Algebra& A, const Vec& c) {
  const auto dec = peirce(A, c);
  if (!dec.semisimple) throw invalid_input("fusion_table: idempotent is not semisimple");
  const PrimeField& F = A.field();
  const unsigned n = A.dim();

  // Full eigenbasis as columns, products are decomposed through its inverse.
  std::vector<Vec> cols;
  std::vector<unsigned> owner;  // eigenvalue index per column
  for (unsigned e = 0; e < dec.eigenvalues.size(); ++e)
    for (const auto& v : dec.eigenspaces[e]) {
      cols.push_back(v);
      owner.push_back(e);
    }
  const Matrix basis = matrix_from_columns(cols, F);
  const Matrix basis_inv = basis.inverse();

  const std::size_t ne = dec.eigenvalues.size();
  FusionTable table;
  table.eigenvalues = dec.eigenvalues;
  table.rule.assign(ne, std::vector<std::vector<unsigned>>(ne));
  table.span_dim.assign(ne, std::vector<unsigned>(ne, 0));

  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t b = 0; b < ne; ++b) {
      std::vector<Vec> products;
      std::vector<bool> support(ne, false);
      for (const auto& u : dec.eigenspaces[a])
        for (const auto& v : dec.eigenspaces[b]) {
          Vec prod = A.multiply(u, v);
          const Vec coords = basis_inv.apply(prod);
          for (unsigned i = 0; i < n; ++i)
            if (coords[i] != 0) support[owner[i]] = true;
          if (!vec_is_zero(prod)) products.push_back(std::move(prod));
        }
      table.span_dim[a][b] = products.empty() ? 0 : row_rank(products, F);
      for (unsigned e = 0; e < ne; ++e)
        if (support[e]) table.rule[a][b].push_back(e);
    }
  return table;
}

bool fusion_cyclic_law(const Algebra& A, const Vec& c) {
  const PrimeField& F = A.field();
  const unsigned n = A.dim();
  if ((F.p() - 1) % n != 0) return false;
  const std::uint64_t eps = primitive_root_of_order(n, F);

  const auto dec = peirce(A, c);
  if (!dec.semisimple) return false;
  const auto table = fusion_table(A, c);

  // expect the eigenvalues to be exactly eps, eps^2, ..., eps^n = 1
  std::vector<std::uint64_t> powers(n + 1, 0);
  std::vector<std::size_t> index_of_power(n + 1, 0);
  for (unsigned p = 1; p <= n; ++p) powers[p] = F.pow(eps, p);
  for (unsigned p = 1; p <= n; ++p) {
    auto it = std::find(table.eigenvalues.begin(), table.eigenvalues.end(), powers[p]);
    if (it == table.eigenvalues.end()) return false;
    index_of_power[p] = static_cast<std::size_t>(it - table.eigenvalues.begin());
  }
  if (table.eigenvalues.size() != n) return false;

  for (unsigned p = 1; p <= n; ++p)
    for (unsigned q = 1; q <= n; ++q) {
      const std::size_t a = index_of_power[p];
      const std::size_t b = index_of_power[q];
      unsigned r = (p + q) % n;
      if (r == 0) r = n;
      const std::size_t target = index_of_power[r];
      // equality of spans: support is exactly the target and the dimensions agree
      if (table.rule[a][b] != std::vector<unsigned>{static_cast<unsigned>(target)}) return false;
      if (table.span_dim[a][b] != dec.eigenspaces[target].size()) return false;
    }
  return true;
}

bool fusion_peirce_law(const Algebra& A, const Vec& c) {
  const auto dec = peirce(A, c);
  if (!dec.semisimple) return false;
  const auto table = fusion_table(A, c);

  std::optional<std::size_t> zero_idx, one_idx;
  for (std::size_t e = 0; e < table.eigenvalues.size(); ++e) {
    if (table.eigenvalues[e] == 0) zero_idx = e;
    else if (table.eigenvalues[e] == 1) one_idx = e;
    else return false;
  }
  auto equals_full = [&](std::size_t a, std::size_t b, std::size_t target) {
    return table.rule[a][b] == std::vector<unsigned>{static_cast<unsigned>(target)} &&
           table.span_dim[a][b] == dec.eigenspaces[target].size();
  };
  if (one_idx) {
    if (!equals_full(*one_idx, *one_idx, *one_idx)) return false;
    if (zero_idx && !(table.rule[*one_idx][*zero_idx].empty() && table.span_dim[*one_idx][*zero_idx] == 0))
      return false;
  }
  if (zero_idx && !equals_full(*zero_idx, *zero_idx, *zero_idx)) return false;
  return true;
}

Matrix power_sum_check(const Algebra& A, const IdempotentTable& T, unsigned s) {
  Matrix sum(A.dim(), A.field());
  for (const auto& c : T.idems()) {
    if (vec_is_zero(c.vec)) continue;
    sum = sum.add(A.left_mult(c.vec).pow(s));
  }
  return sum;
}

unsigned span_rank(const IdempotentTable& T) {
  std::vector<Vec> rows;
  for (const auto& c : T.idems()) rows.push_back(c.vec);
  return row_rank(std::move(rows), T.field());
}

std::optional<std::uint64_t> operator_order_check(const Algebra& A, const Vec& c, std::uint64_t cap) {
  if (A.multiply(c, c) != c) throw invalid_input("operator_order_check: vector is not idempotent");
  const Matrix L = A.left_mult(c);
  if (!L.invertible()) throw invalid_input("operator_order_check: L(c) is not invertible");
  Matrix acc = L;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (acc.is_identity()) return m;
    acc = acc.mul(L);
  }
  return std::nullopt;
}

std::uint64_t circulant_delta(const Vec& a, const PrimeField& F) {
  if (a.size() != 3) throw invalid_input("circulant_delta: requires dimension 3");
  Matrix m(3, F);
  // row i holds a_((i - j) mod 3) by column j
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) m.at(i, j) = a[(i + 3 - j) % 3];
  return m.det();
}

}  // namespace isotope
