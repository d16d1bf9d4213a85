#include "isotope/autgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "isotope/errors.hpp"

namespace isotope {

namespace {

std::uint64_t mod_rep(std::uint64_t v, std::uint64_t N) {
  v %= N;
  return v == 0 ? N : v;
}

std::uint64_t unit_inverse(std::uint64_t m, std::uint64_t N) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(N), new_r = static_cast<long long>(m % N);
  while (new_r != 0) {
    const long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw invalid_input("affine map: multiplier is not a unit");
  if (t < 0) t += static_cast<long long>(N);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t AffineMap::apply(std::uint64_t i) const { return mod_rep(m * (i % N) % N + k, N); }

AffineMap AffineMap::compose(const AffineMap& rhs) const {
  if (N != rhs.N) throw invalid_input("affine map: modulus mismatch");
  return AffineMap{N, m * rhs.m % N, (m * rhs.k + k) % N};
}

AffineMap AffineMap::inverse() const {
  const std::uint64_t mi = unit_inverse(m, N);
  return AffineMap{N, mi, mi * (N - k % N) % N};
}

std::uint64_t shift_star(std::uint64_t i, std::uint64_t j, std::uint64_t N) {
  if (N % 2 == 0) throw invalid_input("shift_star: modulus must be odd");
  const std::uint64_t half = (N + 1) / 2;
  return mod_rep(half * ((i + j) % N) % N, N);
}

std::vector<AffineMap> affine_autos(std::uint64_t N) {
  std::vector<AffineMap> out;
  for (std::uint64_t m = 1; m < N; ++m) {
    if (std::gcd(m, N) != 1) continue;
    for (std::uint64_t k = 0; k < N; ++k) {
      const AffineMap psi{N, m, k};
      for (std::uint64_t i = 1; i <= N; ++i)
        for (std::uint64_t j = 1; j <= N; ++j)
          if (psi.apply(shift_star(i, j, N)) != shift_star(psi.apply(i), psi.apply(j), N))
            throw check_failure("affine_autos: map fails to preserve the quasigroup");
      out.push_back(psi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint64_t>> quasigroup_autos_bruteforce(std::uint64_t N,
                                                                    std::uint64_t cap) {
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= N; ++i) {
    fact *= i;
    if (fact > cap) throw cap_exceeded("quasigroup_autos_bruteforce: N! exceeds the cap");
  }

  std::vector<std::uint64_t> star(N * N);
  for (std::uint64_t i = 1; i <= N; ++i)
    for (std::uint64_t j = 1; j <= N; ++j) star[(i - 1) * N + (j - 1)] = shift_star(i, j, N);

  std::vector<std::uint64_t> g(N);
  std::iota(g.begin(), g.end(), 1);
  std::vector<std::vector<std::uint64_t>> out;
  do {
    bool ok = true;
    for (std::uint64_t i = 1; i <= N && ok; ++i)
      for (std::uint64_t j = 1; j <= N; ++j)
        if (g[star[(i - 1) * N + (j - 1)] - 1] != star[(g[i - 1] - 1) * N + (g[j - 1] - 1)]) {
          ok = false;
          break;
        }
    if (ok) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));

  std::set<std::vector<std::uint64_t>> affine_images;
  for (const auto& psi : affine_autos(N)) {
    std::vector<std::uint64_t> im(N);
    for (std::uint64_t i = 1; i <= N; ++i) im[i - 1] = psi.apply(i);
    affine_images.insert(std::move(im));
  }
  if (std::set<std::vector<std::uint64_t>>(out.begin(), out.end()) != affine_images)
    throw check_failure("quasigroup_autos_bruteforce: scan disagrees with the affine maps");
  return out;
}

namespace {

// Spanning subset of idempotents picked greedily in table order.
std::vector<std::size_t> spanning_idempotents(const IdempotentTable& T) {
  const PrimeField& F = T.field();
  const unsigned n = T.dim();
  std::vector<std::size_t> chosen;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < T.size() && chosen.size() < n; ++i) {
    rows.push_back(T.idems()[i].vec);
    if (row_rank(rows, F) == chosen.size() + 1)
      chosen.push_back(i);
    else
      rows.pop_back();
  }
  if (chosen.size() < n)
    throw invalid_input("automorphism lift: idempotents do not span the algebra");
  return chosen;
}

// Lift an idempotent bijection to a linear map and verify it everywhere.
std::optional<Matrix> lift_idempotent_bijection(const Algebra& A, const IdempotentTable& T,
                                                const std::vector<std::size_t>& basis_idx,
                                                const std::vector<std::size_t>& image) {
  const PrimeField& F = A.field();
  std::vector<Vec> bcols, tcols;
  for (std::size_t idx : basis_idx) {
    bcols.push_back(T.idems()[idx].vec);
    tcols.push_back(T.idems()[image[idx]].vec);
  }
  const Matrix M = matrix_from_columns(tcols, F).mul(matrix_from_columns(bcols, F).inverse());
  for (std::size_t i = 0; i < T.size(); ++i)
    if (M.apply(T.idems()[i].vec) != T.idems()[image[i]].vec) return std::nullopt;
  if (!is_automorphism(A, M)) return std::nullopt;
  return M;
}

}  // namespace

AlgebraAutomorphisms algebra_autos(const Algebra& A, const IdempotentTable& T) {
  if (T.cycles().size() != 1)
    throw invalid_input("algebra_autos: requires a single-cycle isotope");
  const std::uint64_t N = T.cycles().front().group_order;
  const auto basis_idx = spanning_idempotents(T);

  AlgebraAutomorphisms out;
  for (const auto& psi : affine_autos(N)) {
    // labels: index k holds c_k for 1 <= k <= N, index 0 the zero idempotent
    std::vector<std::size_t> image(T.size());
    image[0] = 0;
    for (std::uint64_t i = 1; i <= N; ++i) image[i] = psi.apply(i);
    if (auto M = lift_idempotent_bijection(A, T, basis_idx, image)) {
      out.affine.push_back(psi);
      out.maps.push_back(std::move(*M));
    }
  }
  return out;
}

std::vector<Matrix> algebra_autos_general(const Algebra& A, const IdempotentTable& T,
                                          std::uint64_t node_cap) {
  const auto rep = quasigroup_table(T, A);
  if (!rep.closed)
    throw check_failure("algebra_autos_general: idempotent products do not close");
  const std::size_t M = T.size();

  std::size_t zero_idx = 0;
  for (std::size_t i = 0; i < M; ++i)
    if (vec_is_zero(T.idems()[i].vec)) zero_idx = i;

  const auto basis_idx = spanning_idempotents(T);
  std::vector<Matrix> out;

  // Backtracking over table automorphisms with forced propagation:
  // g(t(a,b)) = t(g(a), g(b)) for every assigned pair.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> g(M, kUnset), ginv(M, kUnset);
  std::uint64_t nodes = 0;

  auto assign = [&](auto&& self, std::size_t a, std::size_t b,
                    std::vector<std::pair<std::size_t, std::size_t>>& trail) -> bool {
    if (g[a] != kUnset) return g[a] == b;
    if (ginv[b] != kUnset) return false;
    g[a] = b;
    ginv[b] = a;
    trail.emplace_back(a, b);
    for (std::size_t c = 0; c < M; ++c) {
      if (g[c] == kUnset) continue;
      if (!self(self, rep.table[a][c], rep.table[b][g[c]], trail)) return false;
      if (!self(self, rep.table[c][a], rep.table[g[c]][b], trail)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self) -> void {
    if (++nodes > node_cap) throw cap_exceeded("algebra_autos_general: search cap exceeded");
    std::size_t a = kUnset;
    for (std::size_t i = 0; i < M; ++i)
      if (g[i] == kUnset) {
        a = i;
        break;
      }
    if (a == kUnset) {
      if (auto lifted = lift_idempotent_bijection(A, T, basis_idx, g)) out.push_back(std::move(*lifted));
      return;
    }
    for (std::size_t b = 0; b < M; ++b) {
      if (ginv[b] != kUnset) continue;
      std::vector<std::pair<std::size_t, std::size_t>> trail;
      if (assign(assign, a, b, trail)) self(self);
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        g[it->first] = kUnset;
        ginv[it->second] = kUnset;
      }
    }
  };

  {
    std::vector<std::pair<std::size_t, std::size_t>> trail;
    if (assign(assign, zero_idx, zero_idx, trail)) search(search);
  }
  return out;
}

GroupStructureReport group_structure(const std::vector<AffineMap>& maps) {
  if (maps.empty()) throw invalid_input("group_structure: empty set");
  const std::uint64_t N = maps.front().N;
  for (const auto& psi : maps)
    if (psi.N != N) throw invalid_input("group_structure: mixed moduli");

  std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
  for (const auto& psi : maps) keys.insert({psi.m, psi.k});
  for (const auto& a : maps)
    for (const auto& b : maps) {
      const AffineMap c = a.compose(b);
      if (!keys.count({c.m, c.k}))
        throw check_failure("group_structure: set is not closed under composition");
    }

  GroupStructureReport rep;
  rep.order = maps.size();
  rep.abelian = true;
  for (const auto& a : maps) {
    for (const auto& b : maps)
      if (!(a.compose(b) == b.compose(a))) {
        rep.abelian = false;
        break;
      }
    if (!rep.abelian) break;
  }

  // n = multiplicative order of 2 mod N (N = 2^n - 1 in the intended use)
  std::uint64_t n = 1, pw = 2 % N;
  while (pw != 1 % N && n < 64) {
    pw = pw * 2 % N;
    ++n;
  }
  std::set<std::uint64_t> delta;
  for (std::uint64_t i = 0, v = 1 % N; i < n; ++i, v = v * 2 % N) delta.insert(v);

  const AffineMap alpha{N, 2 % N, 0};
  const AffineMap beta{N, 1, 1 % N};
  const bool has_generators = keys.count({alpha.m, alpha.k}) && keys.count({beta.m, beta.k});
  if (has_generators) {
    AffineMap a_pow{N, 1, 0};
    for (std::uint64_t i = 0; i < n; ++i) a_pow = a_pow.compose(alpha);
    AffineMap b_pow{N, 1, 0};
    for (std::uint64_t i = 0; i < N; ++i) b_pow = b_pow.compose(beta);
    const AffineMap conj = alpha.compose(beta).compose(alpha.inverse());
    rep.relations_ok = a_pow == AffineMap{N, 1, 0} && b_pow == AffineMap{N, 1, 0} &&
                       conj == beta.compose(beta);
  }

  bool all_delta = true;
  for (const auto& psi : maps)
    if (!delta.count(psi.m)) all_delta = false;
  rep.semidirect_type = rep.relations_ok && all_delta && rep.order == n * N;
  return rep;
}

namespace {

std::vector<std::pair<FieldPoly, unsigned>> charpoly_multiset(const Permutation& sigma,
                                                              PrimeField F) {
  const Algebra A = isotope_of(sigma, F);
  const auto T = idempotents_formula(sigma, F);
  std::map<FieldPoly, unsigned> counts;
  for (const auto& c : T.idems()) ++counts[char_poly(A.left_mult(c.vec))];
  return {counts.begin(), counts.end()};
}

}  // namespace

IsotopeIsomorphism isotope_isomorphism(const Permutation& sigma, const Permutation& tau,
                                       PrimeField F) {
  if (sigma.degree() != tau.degree())
    throw invalid_input("isotope_isomorphism: degree mismatch");
  verify_admissible(F, sigma.cycle_type());
  verify_admissible(F, tau.cycle_type());

  IsotopeIsomorphism out;
  if (are_conjugate(sigma, tau)) {
    // need g with g^-1 sigma g = tau so that the map of g carries products
    const Permutation g = conjugator(tau, sigma);
    const Matrix f = perm_map(g, F);
    if (!is_isomorphism(isotope_of(sigma, F), isotope_of(tau, F), f))
      throw check_failure("isotope_isomorphism: conjugate map failed verification");
    out.isomorphic = true;
    out.conjugating = g;
    out.iso = f;
    return out;
  }
  out.charpolys_sigma = charpoly_multiset(sigma, F);
  out.charpolys_tau = charpoly_multiset(tau, F);
  if (out.charpolys_sigma == out.charpolys_tau)
    throw check_failure("isotope_isomorphism: certificate multisets coincide unexpectedly");
  return out;
}

bool commuting_isotopy_check(const Permutation& sigma, const Permutation& tau, PrimeField F) {
  if (sigma.degree() != tau.degree())
    throw invalid_input("commuting_isotopy_check: degree mismatch");
  const Matrix g = perm_map(tau, F).mul(perm_map(sigma, F).inverse());
  const bool is_auto = is_automorphism(isotope_of(sigma, F), g);
  const bool commute = sigma.compose(tau) == tau.compose(sigma);
  if (is_auto != commute)
    throw check_failure("commuting_isotopy_check: matrix test disagrees with commutation");
  return is_auto;
}

}  // namespace isotope
