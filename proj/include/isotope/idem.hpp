#ifndef ISOTOPE_IDEM_HPP
#define ISOTOPE_IDEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isotope/algebra.hpp"

namespace isotope {

inline constexpr std::uint64_t kDefaultBruteCap = 20'000'000ULL;

struct Idempotent {
  std::string label;
  std::vector<std::uint8_t> alpha;         // per-cycle nonzero flags
  std::vector<std::uint64_t> residues;     // per-cycle exponent k, 0 for a zero block
  Vec vec;
};

struct CycleData {
  std::vector<unsigned> orbit;   // traversal order, smallest element first
  std::uint64_t zeta;            // root of order 2^s - 1
  std::uint64_t group_order;     // 2^s - 1
};

// All idempotents of the isotope of sigma, enumerated per cycle from the
// closed formula and sorted by (alpha, residues); the zero idempotent sorts
// first and carries the label "0". Labels read the per-cycle values as one
// mixed-radix integer, so a single cycle is labeled by k and the identity
// permutation by the binary code of the coordinates.
class IdempotentTable {
public:
  IdempotentTable(Permutation sigma, PrimeField F, std::vector<CycleData> cycles,
                  std::vector<Idempotent> idems);

  const Permutation& sigma() const { return sigma_; }
  const PrimeField& field() const { return F_; }
  const std::vector<CycleData>& cycles() const { return cycles_; }
  const std::vector<Idempotent>& idems() const { return idems_; }
  std::size_t size() const { return idems_.size(); }
  unsigned dim() const { return sigma_.degree(); }

  std::optional<std::size_t> index_of(const Vec& v) const;
  std::size_t index_of_label(const std::string& label) const;

private:
  Permutation sigma_;
  PrimeField F_;
  std::vector<CycleData> cycles_;
  std::vector<Idempotent> idems_;
  std::map<Vec, std::size_t> index_;
};

IdempotentTable idempotents_formula(const Permutation& sigma, PrimeField F);

// Exhaustive scan of F_p^n for c*c = c; the definitive oracle. Vectors are
// returned in lexicographic order.
std::vector<Vec> idempotents_bruteforce(const Algebra& A, std::uint64_t cap = kDefaultBruteCap);

// Structured oracle for a single cycle: enumerate the free coordinate and
// back-propagate the squaring relation around the cycle, keeping solutions
// that close up.
std::vector<Vec> idempotents_chain(const Permutation& sigma, PrimeField F);

// det(L(c) - (1/2) I) != 0. Requires c idempotent.
bool is_regular_idempotent(const Algebra& A, const Vec& c);

// Exactly 2^dim distinct regular idempotents. Uses the formula when the
// algebra knows its permutation, otherwise brute force under the cap.
bool genericity_check(const Algebra& A, std::uint64_t cap = kDefaultBruteCap);

struct QuasigroupReport {
  std::vector<std::vector<std::size_t>> table;  // index into the idempotent table
  bool closed = false;
  bool idempotent = false;
  bool commutative = false;
  bool medial = false;
  bool latin = false;        // nonzero part; meaningful for a single cycle
  bool shift_law = false;    // i*j = 2^(n-1)(i+j) mod 2^n-1; single cycle only
  std::optional<std::string> witness;
};

// Fills the product table from algebra multiplication and verifies the
// magma laws; for a single cycle also the affine shift law and the Latin
// square property of the nonzero part.
QuasigroupReport quasigroup_table(const IdempotentTable& T, const Algebra& A);

// Table of all sums c_A + c_B on the concatenated coordinates, relabeled for
// the block-diagonal permutation.
IdempotentTable direct_sum_idempotents(const IdempotentTable& A, const IdempotentTable& B);

}  // namespace isotope

#endif
