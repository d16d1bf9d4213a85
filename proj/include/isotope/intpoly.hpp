#ifndef ISOTOPE_INTPOLY_HPP
#define ISOTOPE_INTPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isotope {

using BigInt = boost::multiprecision::cpp_int;

// Integer-coefficient polynomial with arbitrary-precision coefficients.
// Coefficients are stored by ascending exponent with trailing zeros trimmed;
// the zero polynomial has degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly one();
  static IntPoly monomial(unsigned exponent, BigInt c = 1);
  // z^n - 1
  static IntPoly power_minus_one(unsigned n);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;
  bool is_monic() const;

  BigInt eval(const BigInt& x) const;
  BigInt content() const;  // gcd of coefficients, 0 for the zero polynomial

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly scaled(const BigInt& c) const;
  IntPoly divexact_scalar(const BigInt& c) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;  // human-readable, highest degree first

private:
  std::vector<BigInt> coeffs_;
  void trim();
};

// Exact division f = q*g + r with deg r < deg g; g must be monic and nonzero.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g);

// N-th cyclotomic polynomial, obtained by exact division of z^N - 1 by the
// cyclotomic polynomials of the proper divisors of N.
IntPoly cyclotomic(unsigned N);

// z + z^2 + z^4 + ... + z^(2^(n-1)), n >= 2.
IntPoly lambda_poly(unsigned n);

// Sylvester-determinant resultant via the fraction-free subresultant
// polynomial remainder sequence. Both arguments must be nonzero.
BigInt resultant(const IntPoly& f, const IntPoly& g);

struct RegularityWitness {
  std::uint64_t m = 0;
  bool in_delta = false;
  bool divides = false;
  std::optional<BigInt> resultant_value;  // only for m outside the subgroup, on request
};

struct RegularityCertificate {
  unsigned n = 0;
  std::uint64_t modulus = 0;  // 2^n - 1
  bool regular = false;
  std::vector<std::uint64_t> delta;     // subgroup generated by 2 mod 2^n-1, sorted
  std::vector<RegularityWitness> tested;  // every unit m, sorted by m
};

// Certifies whether n is regular: the cyclotomic polynomial of 2^n-1 must not
// divide the reduced difference of the power sums for any unit m outside the
// subgroup generated by 2. Units inside the subgroup are recorded as a sanity
// check (they always divide). When with_resultants is set, the resultant of
// the unreduced difference quotient with the cyclotomic polynomial is attached
// to each witness outside the subgroup.
RegularityCertificate is_regular(unsigned n, bool with_resultants = false,
                                 unsigned n_bound = 16);

}  // namespace isotope

#endif
