#include "isotope/idem.hpp"

#include <algorithm>
#include <numeric>

#include "isotope/errors.hpp"

namespace isotope {

IdempotentTable::IdempotentTable(Permutation sigma, PrimeField F, std::vector<CycleData> cycles,
                                 std::vector<Idempotent> idems)
    : sigma_(std::move(sigma)), F_(F), cycles_(std::move(cycles)), idems_(std::move(idems)) {
  for (std::size_t i = 0; i < idems_.size(); ++i) {
    if (!index_.emplace(idems_[i].vec, i).second)
      throw check_failure("idempotent table: duplicate vectors");
  }
}

std::optional<std::size_t> IdempotentTable::index_of(const Vec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdempotentTable::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < idems_.size(); ++i)
    if (idems_[i].label == label) return i;
  throw invalid_input("idempotent table: no idempotent labeled '" + label + "'");
}

namespace {

std::string mixed_radix_label(const std::vector<std::uint64_t>& residues,
                              const std::vector<CycleData>& cycles) {
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < cycles.size(); ++j)
    acc = acc * (cycles[j].group_order + 1) + residues[j];
  return std::to_string(acc);
}

}  // namespace

IdempotentTable idempotents_formula(const Permutation& sigma, PrimeField F) {
  verify_admissible(F, sigma.cycle_type());
  const unsigned n = sigma.degree();

  std::vector<CycleData> cycles;
  for (const auto& orbit : sigma.cycles()) {
    const unsigned s = static_cast<unsigned>(orbit.size());
    const std::uint64_t order = (1ULL << s) - 1;
    cycles.push_back(CycleData{orbit, primitive_root_of_order(order, F), order});
  }
  const std::size_t r = cycles.size();

  std::vector<Idempotent> idems;
  std::vector<std::uint64_t> choice(r, 0);
  while (true) {
    Idempotent c;
    c.residues = choice;
    c.alpha.resize(r);
    c.vec.assign(n, 0);
    for (std::size_t j = 0; j < r; ++j) {
      c.alpha[j] = choice[j] != 0;
      if (choice[j] == 0) continue;
      const auto& cyc = cycles[j];
      const unsigned s = static_cast<unsigned>(cyc.orbit.size());
      // position t (1-based) of the traversal carries zeta^(2^(s-t) k)
      for (unsigned t = 1; t <= s; ++t) {
        const std::uint64_t expo = ((1ULL << (s - t)) % cyc.group_order) * (choice[j] % cyc.group_order);
        c.vec[cyc.orbit[t - 1] - 1] = F.pow(cyc.zeta, expo);
      }
    }
    c.label = mixed_radix_label(choice, cycles);
    idems.push_back(std::move(c));

    std::size_t j = r;
    while (j > 0) {
      --j;
      if (choice[j] < cycles[j].group_order) {
        ++choice[j];
        break;
      }
      choice[j] = 0;
      if (j == 0) goto done;
    }
  }
done:
  std::sort(idems.begin(), idems.end(), [](const Idempotent& a, const Idempotent& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.residues < b.residues;
  });
  if (idems.size() != (1ULL << n))
    throw check_failure("idempotents_formula: expected 2^n idempotents");

  const Algebra A = isotope_of(sigma, F);
  for (const auto& c : idems)
    if (A.multiply(c.vec, c.vec) != c.vec)
      throw check_failure("idempotents_formula: formula vector is not idempotent");

  return IdempotentTable(sigma, F, std::move(cycles), std::move(idems));
}

std::vector<Vec> idempotents_bruteforce(const Algebra& A, std::uint64_t cap) {
  const unsigned n = A.dim();
  const std::uint64_t p = A.field().p();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > cap / p + 1) throw cap_exceeded("idempotents_bruteforce: p^n exceeds the cap");
    total *= p;
  }
  if (total > cap) throw cap_exceeded("idempotents_bruteforce: p^n exceeds the cap");

  std::vector<Vec> found;
  Vec c(n, 0);
  const auto& nnz = A.nonzero_entries();
  const PrimeField& F = A.field();
  for (std::uint64_t it = 0; it < total; ++it) {
    Vec prod(n, 0);
    for (const auto& [i, j, k, v] : nnz) {
      const std::uint64_t t = F.mul(F.mul(c[i], c[j]), v);
      if (t) prod[k] = F.add(prod[k], t);
    }
    if (prod == c) found.push_back(c);
    // odometer, last coordinate fastest
    for (unsigned d = n; d-- > 0;) {
      if (++c[d] < p) break;
      c[d] = 0;
    }
  }
  return found;
}

std::vector<Vec> idempotents_chain(const Permutation& sigma, PrimeField F) {
  const auto orbits = sigma.cycles();
  if (orbits.size() != 1)
    throw invalid_input("idempotents_chain: permutation must be a single cycle");
  const auto& orbit = orbits.front();
  const unsigned n = sigma.degree();

  std::vector<Vec> found;
  for (std::uint64_t t = 0; t < F.p(); ++t) {
    // x at the last traversal position is free; the squaring relation
    // x_{sigma(i)}^2 = x_i determines the rest walking backwards.
    Vec x(n, 0);
    std::uint64_t value = t;
    x[orbit[n - 1] - 1] = value;
    for (unsigned pos = n - 1; pos-- > 0;) {
      value = F.mul(value, value);
      x[orbit[pos] - 1] = value;
    }
    // wraparound: the first position squared must give the last
    const std::uint64_t first = x[orbit[0] - 1];
    if (F.mul(first, first) == x[orbit[n - 1] - 1]) found.push_back(std::move(x));
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_regular_idempotent(const Algebra& A, const Vec& c) {
  if (A.multiply(c, c) != c) throw invalid_input("is_regular_idempotent: vector is not idempotent");
  const PrimeField& F = A.field();
  Matrix m = A.left_mult(c);
  const std::uint64_t half = F.inv(2);
  for (unsigned i = 0; i < m.size(); ++i) m.at(i, i) = F.sub(m.at(i, i), half);
  return m.det() != 0;
}

bool genericity_check(const Algebra& A, std::uint64_t cap) {
  std::vector<Vec> idems;
  if (A.sigma()) {
    const auto table = idempotents_formula(*A.sigma(), A.field());
    for (const auto& c : table.idems()) idems.push_back(c.vec);
  } else {
    idems = idempotents_bruteforce(A, cap);
  }
  std::sort(idems.begin(), idems.end());
  idems.erase(std::unique(idems.begin(), idems.end()), idems.end());
  std::size_t regular = 0;
  for (const auto& c : idems)
    if (is_regular_idempotent(A, c)) ++regular;
  return regular == (1ULL << A.dim());
}

QuasigroupReport quasigroup_table(const IdempotentTable& T, const Algebra& A) {
  const std::size_t m = T.size();
  QuasigroupReport rep;
  rep.table.assign(m, std::vector<std::size_t>(m, 0));
  rep.closed = true;
  for (std::size_t i = 0; i < m && rep.closed; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec prod = A.multiply(T.idems()[i].vec, T.idems()[j].vec);
      const auto idx = T.index_of(prod);
      if (!idx) {
        rep.closed = false;
        rep.witness = "product of idempotents " + T.idems()[i].label + " and " + T.idems()[j].label +
                      " is not an idempotent of the table";
        break;
      }
      rep.table[i][j] = *idx;
    }
  if (!rep.closed) return rep;

  rep.idempotent = true;
  rep.commutative = true;
  rep.medial = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (rep.table[i][i] != i) {
      rep.idempotent = false;
      rep.witness = "table not idempotent at " + T.idems()[i].label;
    }
    for (std::size_t j = 0; j < m; ++j)
      if (rep.table[i][j] != rep.table[j][i]) {
        rep.commutative = false;
        rep.witness = "table not commutative at (" + T.idems()[i].label + ", " + T.idems()[j].label + ")";
      }
  }
  for (std::size_t i = 0; i < m && rep.medial; ++i)
    for (std::size_t j = 0; j < m && rep.medial; ++j)
      for (std::size_t k = 0; k < m && rep.medial; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (rep.table[rep.table[i][j]][rep.table[k][l]] !=
              rep.table[rep.table[i][k]][rep.table[j][l]]) {
            rep.medial = false;
            rep.witness = "table not medial at (" + T.idems()[i].label + "," + T.idems()[j].label + "," +
                          T.idems()[k].label + "," + T.idems()[l].label + ")";
            break;
          }

  // Single-cycle extras. The sorted table places the zero idempotent at
  // index 0 and c_k at index k, 1 <= k <= 2^n - 1.
  if (T.cycles().size() == 1 && T.sigma().degree() >= 2) {
    const std::uint64_t N = T.cycles().front().group_order;
    const std::uint64_t half = ((N + 1) / 2) % N;  // inverse of 2 mod N
    rep.shift_law = true;
    rep.latin = true;
    for (std::uint64_t i = 1; i <= N && rep.shift_law; ++i)
      for (std::uint64_t j = 1; j <= N; ++j) {
        std::uint64_t expect = half * ((i + j) % N) % N;
        if (expect == 0) expect = N;
        if (rep.table[i][j] != expect) {
          rep.shift_law = false;
          rep.witness = "shift law fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    for (std::uint64_t i = 1; i <= N && rep.latin; ++i) {
      std::vector<bool> row(m, false), col(m, false);
      for (std::uint64_t j = 1; j <= N; ++j) {
        const std::size_t rv = rep.table[i][j], cv = rep.table[j][i];
        if (rv == 0 || cv == 0 || row[rv] || col[cv]) {
          rep.latin = false;
          rep.witness = "nonzero block is not a Latin square at row " + std::to_string(i);
          break;
        }
        row[rv] = true;
        col[cv] = true;
      }
    }
  }
  return rep;
}

IdempotentTable direct_sum_idempotents(const IdempotentTable& A, const IdempotentTable& B) {
  if (!(A.field() == B.field())) throw invalid_input("direct_sum_idempotents: field mismatch");
  const unsigned nA = A.dim(), nB = B.dim();

  // Block permutation: A's cycles on 1..nA, B's shifted by nA.
  std::vector<unsigned> im(nA + nB);
  for (unsigned i = 1; i <= nA; ++i) im[i - 1] = A.sigma()(i);
  for (unsigned i = 1; i <= nB; ++i) im[nA + i - 1] = B.sigma()(i) + nA;
  Permutation sigma{std::move(im)};

  std::vector<CycleData> cycles = A.cycles();
  for (CycleData c : B.cycles()) {
    for (auto& v : c.orbit) v += nA;
    cycles.push_back(std::move(c));
  }

  std::vector<Idempotent> idems;
  idems.reserve(A.size() * B.size());
  for (const auto& a : A.idems())
    for (const auto& b : B.idems()) {
      Idempotent c;
      c.alpha = a.alpha;
      c.alpha.insert(c.alpha.end(), b.alpha.begin(), b.alpha.end());
      c.residues = a.residues;
      c.residues.insert(c.residues.end(), b.residues.begin(), b.residues.end());
      c.vec = a.vec;
      c.vec.insert(c.vec.end(), b.vec.begin(), b.vec.end());
      c.label = mixed_radix_label(c.residues, cycles);
      idems.push_back(std::move(c));
    }
  std::sort(idems.begin(), idems.end(), [](const Idempotent& a, const Idempotent& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.residues < b.residues;
  });
  return IdempotentTable(std::move(sigma), A.field(), std::move(cycles), std::move(idems));
}

}  // namespace isotope
