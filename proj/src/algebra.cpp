#include "isotope/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "isotope/errors.hpp"

namespace isotope {

Algebra::Algebra(unsigned n, PrimeField F, std::vector<std::uint64_t> sc, Provenance prov,
                 std::optional<Permutation> sigma)
    : n_(n), F_(F), sc_(std::move(sc)), prov_(prov), sigma_(std::move(sigma)) {
  if (n == 0) throw invalid_input("algebra: dimension must be positive");
  if (sc_.size() != static_cast<std::size_t>(n) * n * n)
    throw invalid_input("algebra: structure constant cube has wrong size");
  for (auto& v : sc_) v %= F_.p();
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < i; ++j)
      for (unsigned k = 0; k < n_; ++k)
        if (sc(i, j, k) != sc(j, i, k))
          throw invalid_input("algebra: structure constants are not commutative");
  if (sigma_ && sigma_->degree() != n_) throw invalid_input("algebra: permutation degree mismatch");
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      for (unsigned k = 0; k < n_; ++k)
        if (sc(i, j, k)) nnz_.push_back({i, j, k, sc(i, j, k)});
}

Algebra Algebra::product(unsigned n, PrimeField F) {
  std::vector<std::uint64_t> sc(static_cast<std::size_t>(n) * n * n, 0);
  for (unsigned i = 0; i < n; ++i) sc[(static_cast<std::size_t>(i) * n + i) * n + i] = 1;
  return Algebra(n, F, std::move(sc), Provenance::Product, Permutation::identity(n));
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw invalid_input("algebra: vector size mismatch");
  Vec out(n_, 0);
  for (const auto& [i, j, k, v] : nnz_) {
    const std::uint64_t t = F_.mul(F_.mul(x[i], y[j]), v);
    if (t) out[k] = F_.add(out[k], t);
  }
  return out;
}

Vec Algebra::basis_product(unsigned i, unsigned j) const {
  Vec out(n_);
  for (unsigned k = 0; k < n_; ++k) out[k] = sc(i, j, k);
  return out;
}

Matrix Algebra::left_mult(const Vec& a) const {
  if (a.size() != n_) throw invalid_input("algebra: vector size mismatch");
  Matrix m(n_, F_);
  for (const auto& [i, j, k, v] : nnz_) {
    const std::uint64_t t = F_.mul(a[i], v);
    if (t) m.at(static_cast<unsigned>(k), static_cast<unsigned>(j)) =
        F_.add(m.at(static_cast<unsigned>(k), static_cast<unsigned>(j)), t);
  }
  return m;
}

Algebra inner_isotope(const Algebra& A, const Matrix& h) {
  if (h.size() != A.dim()) throw invalid_input("inner_isotope: map size mismatch");
  if (!is_automorphism(A, h))
    throw invalid_input("inner_isotope: the map is not an automorphism of the base algebra");
  const unsigned n = A.dim();
  std::vector<std::uint64_t> sc(static_cast<std::size_t>(n) * n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const Vec v = h.apply(A.basis_product(i, j));
      for (unsigned k = 0; k < n; ++k) sc[(static_cast<std::size_t>(i) * n + j) * n + k] = v[k];
    }
  std::optional<Permutation> sigma;
  if (A.provenance() == Provenance::Product) sigma = h.as_permutation();
  return Algebra(n, A.field(), std::move(sc), Provenance::Isotope, std::move(sigma));
}

Algebra isotope_of(const Permutation& sigma, PrimeField F) {
  return inner_isotope(Algebra::product(sigma.degree(), F), perm_map(sigma, F));
}

Algebra direct_sum(const Algebra& A, const Algebra& B) {
  if (!(A.field() == B.field())) throw invalid_input("direct_sum: field mismatch");
  const unsigned n = A.dim() + B.dim();
  std::vector<std::uint64_t> sc(static_cast<std::size_t>(n) * n * n, 0);
  auto put = [&](unsigned i, unsigned j, unsigned k, std::uint64_t v) {
    sc[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
  };
  for (unsigned i = 0; i < A.dim(); ++i)
    for (unsigned j = 0; j < A.dim(); ++j)
      for (unsigned k = 0; k < A.dim(); ++k) put(i, j, k, A.sc(i, j, k));
  const unsigned off = A.dim();
  for (unsigned i = 0; i < B.dim(); ++i)
    for (unsigned j = 0; j < B.dim(); ++j)
      for (unsigned k = 0; k < B.dim(); ++k) put(off + i, off + j, off + k, B.sc(i, j, k));
  return Algebra(n, A.field(), std::move(sc), Provenance::DirectSum);
}

CycleDecomposition decompose_by_cycles(const Permutation& sigma, PrimeField F) {
  verify_admissible(F, sigma.cycle_type());
  std::vector<CycleBlock> blocks;
  std::vector<unsigned> order;
  for (const auto& orbit : sigma.cycles()) {
    const unsigned s = static_cast<unsigned>(orbit.size());
    blocks.push_back(CycleBlock{orbit, isotope_of(Permutation::cyclic_shift(s), F)});
    order.insert(order.end(), orbit.begin(), orbit.end());
  }
  CycleDecomposition out{std::move(blocks), Permutation(order)};

  // The relabeling must carry the isotope of sigma onto the direct sum.
  Algebra sum = out.blocks.front().block;
  for (std::size_t b = 1; b < out.blocks.size(); ++b) sum = direct_sum(sum, out.blocks[b].block);
  if (!is_isomorphism(isotope_of(sigma, F), sum, perm_map(out.relabeling, F)))
    throw check_failure("decompose_by_cycles: relabeling is not an isomorphism");
  return out;
}

std::uint64_t field_poly_eval(const FieldPoly& f, std::uint64_t x, const PrimeField& F) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

FieldPoly field_poly_mul(const FieldPoly& a, const FieldPoly& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

std::string field_poly_to_string(const FieldPoly& f, const PrimeField& F) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = f.size(); idx-- > 0;) {
    std::uint64_t c = f[idx];
    if (c == 0) continue;
    // residues above p/2 print as negative for readability
    const bool neg = c > F.p() / 2;
    const std::uint64_t mag = neg ? F.p() - c : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (idx == 0 || mag != 1) out << mag;
    if (idx > 0) {
      out << "x";
      if (idx > 1) out << '^' << idx;
    }
  }
  if (first) out << '0';
  return out.str();
}

FieldPoly char_poly(const Matrix& M) {
  const PrimeField& F = M.field();
  const unsigned n = M.size();
  if (F.p() <= n) throw invalid_input("char_poly: field too small for interpolation (need p > n)");

  std::vector<std::uint64_t> xs(n + 1), ys(n + 1);
  for (unsigned t = 0; t <= n; ++t) {
    xs[t] = t;
    Matrix shifted = M.scaled(F.p() - 1);  // -M
    for (unsigned i = 0; i < n; ++i) shifted.at(i, i) = F.add(shifted.at(i, i), t);
    ys[t] = shifted.det();
  }

  // Lagrange interpolation on n+1 points.
  FieldPoly acc(n + 1, 0);
  for (unsigned i = 0; i <= n; ++i) {
    FieldPoly basis{1};
    std::uint64_t denom = 1;
    for (unsigned j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = field_poly_mul(basis, FieldPoly{F.neg(xs[j]), 1}, F);
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    const std::uint64_t w = F.mul(ys[i], F.inv(denom));
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] = F.add(acc[k], F.mul(w, basis[k]));
  }
  if (acc.back() != 1) throw check_failure("char_poly: interpolation produced a non-monic result");
  return acc;
}

IdentityReport check_identities(const Algebra& A) {
  const unsigned n = A.dim();
  const PrimeField& F = A.field();
  IdentityReport rep;

  rep.commutative = true;
  for (unsigned i = 0; i < n && rep.commutative; ++i)
    for (unsigned j = 0; j < n && rep.commutative; ++j)
      if (A.basis_product(i, j) != A.basis_product(j, i)) {
        rep.commutative = false;
        rep.commutative_witness = {{i, j}};
      }

  rep.associative = true;
  for (unsigned i = 0; i < n && rep.associative; ++i)
    for (unsigned j = 0; j < n && rep.associative; ++j)
      for (unsigned k = 0; k < n && rep.associative; ++k) {
        Vec ek(n, 0), ei(n, 0);
        ek[k] = 1;
        ei[i] = 1;
        const Vec lhs = A.multiply(A.basis_product(i, j), ek);
        const Vec rhs = A.multiply(ei, A.basis_product(j, k));
        if (lhs != rhs) {
          rep.associative = false;
          rep.associative_witness = {{i, j, k}};
        }
      }

  rep.medial = true;
  for (unsigned i = 0; i < n && rep.medial; ++i)
    for (unsigned j = 0; j < n && rep.medial; ++j)
      for (unsigned k = 0; k < n && rep.medial; ++k)
        for (unsigned l = 0; l < n && rep.medial; ++l) {
          const Vec lhs = A.multiply(A.basis_product(i, j), A.basis_product(k, l));
          const Vec rhs = A.multiply(A.basis_product(i, k), A.basis_product(j, l));
          if (lhs != rhs) {
            rep.medial = false;
            rep.medial_witness = {{i, j, k, l}};
          }
        }

  // Unit element: solve L(e) = identity as a linear system in e.
  std::vector<Vec> rows;
  Vec rhs;
  rows.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned k = 0; k < n; ++k) {
      Vec row(n);
      for (unsigned i = 0; i < n; ++i) row[i] = A.sc(i, j, k);
      rows.push_back(std::move(row));
      rhs.push_back(j == k ? 1 : 0);
    }
  if (auto e = solve_system(std::move(rows), std::move(rhs), n, F)) {
    rep.unital = true;
    rep.unit = *e;
  }
  return rep;
}

bool is_automorphism(const Algebra& A, const Matrix& M) {
  if (M.size() != A.dim()) throw invalid_input("is_automorphism: size mismatch");
  return is_isomorphism(A, A, M);
}

bool is_isomorphism(const Algebra& A, const Algebra& B, const Matrix& f) {
  if (A.dim() != B.dim() || !(A.field() == B.field()))
    throw invalid_input("is_isomorphism: algebra mismatch");
  if (f.size() != A.dim()) throw invalid_input("is_isomorphism: map size mismatch");
  if (!f.invertible()) return false;
  const unsigned n = A.dim();
  for (unsigned i = 0; i < n; ++i) {
    Vec ei(n, 0);
    ei[i] = 1;
    const Vec fi = f.apply(ei);
    for (unsigned j = i; j < n; ++j) {
      Vec ej(n, 0);
      ej[j] = 1;
      if (f.apply(A.basis_product(i, j)) != B.multiply(fi, f.apply(ej))) return false;
    }
  }
  return true;
}

PolyModelResult poly_model(unsigned n, PrimeField F) {
  if (n == 0) throw invalid_input("poly_model: dimension must be positive");
  if ((F.p() - 1) % n != 0)
    throw invalid_input("poly_model: field has no primitive root of unity of order " + std::to_string(n));
  const std::uint64_t eps = primitive_root_of_order(n, F);

  std::vector<std::uint64_t> sc(static_cast<std::size_t>(n) * n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      sc[(static_cast<std::size_t>(i) * n + j) * n + (i + j) % n] = 1;
  Algebra model(n, F, std::move(sc), Provenance::PolyModel);

  Matrix vand(n, F);
  for (unsigned t = 0; t < n; ++t)
    for (unsigned i = 0; i < n; ++i) vand.at(t, i) = F.pow(F.pow(eps, t), i);
  if (!is_isomorphism(model, Algebra::product(n, F), vand))
    throw check_failure("poly_model: evaluation map is not an isomorphism onto the product algebra");

  Matrix subst(n, F);
  for (unsigned i = 0; i < n; ++i) subst.at(i, i) = F.pow(eps, i);
  if (!is_automorphism(model, subst))
    throw check_failure("poly_model: substitution map is not an automorphism");

  return PolyModelResult{std::move(model), std::move(vand), std::move(subst)};
}

}  // namespace isotope
