#ifndef ISOTOPE_FIELD_HPP
#define ISOTOPE_FIELD_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace isotope {

// The prime field F_p for an odd prime p >= 5. Elements are residues in
// [0, p) carried as plain uint64_t; all arithmetic goes through the field.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b % p_) % p_; }
  std::uint64_t neg(std::uint64_t a) const { return (p_ - a % p_) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a % p_) * (b % p_) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  // Reduce a signed integer into [0, p).
  std::uint64_t from_int(long long v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint64_t p_;
};

// Trial-division factorization, (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v);

bool is_prime(std::uint64_t v);

// Multiplicative order of a nonzero residue.
std::uint64_t element_order(const PrimeField& F, std::uint64_t a);

// Smallest g >= 2 of multiplicative order p-1, checked against the prime
// factorization of p-1.
std::uint64_t multiplicative_generator(const PrimeField& F);

// Element of multiplicative order exactly d, derived as g^((p-1)/d) from the
// smallest generator and verified. Requires d | p-1.
std::uint64_t primitive_root_of_order(std::uint64_t d, const PrimeField& F);

struct AdmissiblePrime {
  PrimeField field;
  std::vector<std::uint64_t> splitting_orders;  // cycle lengths and 2^s - 1, sorted
  std::uint64_t modulus;                        // lcm of the splitting orders
};

// Smallest prime p with p ≡ 1 (mod lcm S), p > n and p >= 5, where S collects
// every cycle length s and every 2^s - 1 of the given type. Such a field
// splits z^t - 1 for every t in S.
AdmissiblePrime admissible_prime(const std::vector<unsigned>& cycle_type,
                                 std::uint64_t search_bound = 1'000'000'000ULL);

// Throws invalid_input with a diagnostic when F is not admissible for the type.
void verify_admissible(const PrimeField& F, const std::vector<unsigned>& cycle_type);

}  // namespace isotope

#endif
