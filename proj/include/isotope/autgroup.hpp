#ifndef ISOTOPE_AUTGROUP_HPP
#define ISOTOPE_AUTGROUP_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isotope/algebra.hpp"
#include "isotope/idem.hpp"

namespace isotope {

// The map i -> m*i + k mod N for a unit m, acting on the idempotent labels
// 1..N with N standing in for the residue 0.
struct AffineMap {
  std::uint64_t N = 0;
  std::uint64_t m = 1;
  std::uint64_t k = 0;

  std::uint64_t apply(std::uint64_t i) const;
  AffineMap compose(const AffineMap& rhs) const;  // (this ∘ rhs)
  AffineMap inverse() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  friend auto operator<=>(const AffineMap& a, const AffineMap& b) {
    return std::pair{a.m, a.k} <=> std::pair{b.m, b.k};
  }
};

// i*j = (1/2)(i+j) mod N on labels 1..N; requires N odd.
std::uint64_t shift_star(std::uint64_t i, std::uint64_t j, std::uint64_t N);

// All N*phi(N) affine maps, each verified to preserve the shift quasigroup,
// sorted by (m, k).
std::vector<AffineMap> affine_autos(std::uint64_t N);

// Exhaustive scan over all N! label bijections for maps preserving the shift
// quasigroup; the result is asserted equal to the affine maps as a set.
// Bijections are returned as image lists on 1..N.
std::vector<std::vector<std::uint64_t>> quasigroup_autos_bruteforce(std::uint64_t N,
                                                                    std::uint64_t cap = 40320);

struct AlgebraAutomorphisms {
  std::vector<AffineMap> affine;  // accepted label maps, aligned with maps
  std::vector<Matrix> maps;
};

// Automorphisms of a single-cycle isotope. Every algebra automorphism
// permutes the idempotents, which span, so checking all affine candidates on
// the label quasigroup is exhaustive.
AlgebraAutomorphisms algebra_autos(const Algebra& A, const IdempotentTable& T);

// Automorphisms of an arbitrary isotope through its idempotent product table:
// backtracking enumerates the table automorphisms fixing zero, and each is
// lifted to a linear map on a spanning set of idempotents and verified.
std::vector<Matrix> algebra_autos_general(const Algebra& A, const IdempotentTable& T,
                                          std::uint64_t node_cap = 1'000'000ULL);

struct GroupStructureReport {
  std::uint64_t order = 0;
  bool abelian = false;
  bool relations_ok = false;    // alpha^n = id, beta^N = id, alpha beta alpha^-1 = beta^2
  bool semidirect_type = false; // order n*N with every multiplier a power of 2
};

// Verifies closure under composition and the shift/scaling presentation.
GroupStructureReport group_structure(const std::vector<AffineMap>& maps);

struct IsotopeIsomorphism {
  bool isomorphic = false;
  std::optional<Permutation> conjugating;  // g with the isotopes matched through its map
  std::optional<Matrix> iso;
  // characteristic polynomial multisets over all idempotents, (poly, count)
  std::vector<std::pair<FieldPoly, unsigned>> charpolys_sigma;
  std::vector<std::pair<FieldPoly, unsigned>> charpolys_tau;
};

// A verified isomorphism between the isotopes of sigma and tau when the cycle
// types match, otherwise a certificate that the idempotent characteristic
// polynomial multisets differ.
IsotopeIsomorphism isotope_isomorphism(const Permutation& sigma, const Permutation& tau,
                                       PrimeField F);

// Whether the map of tau composed with the inverse map of sigma is an
// automorphism of the sigma-isotope; agrees with sigma and tau commuting.
bool commuting_isotopy_check(const Permutation& sigma, const Permutation& tau, PrimeField F);

}  // namespace isotope

#endif
