#include "isotope/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isotope/errors.hpp"

namespace isotope {

namespace {
constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;  // keeps products inside uint64_t
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > kMaxPrime) throw invalid_input("prime field: p too large (max 2^31-1)");
  if (!is_prime(p)) throw invalid_input("prime field: " + std::to_string(p) + " is not prime");
  if (p < 5) throw invalid_input("prime field: characteristic must avoid 2 and 3");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_;
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return acc;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw invalid_input("prime field: zero is not invertible");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

std::uint64_t element_order(const PrimeField& F, std::uint64_t a) {
  a %= F.p();
  if (a == 0) throw invalid_input("element_order: zero has no multiplicative order");
  std::uint64_t order = F.p() - 1;
  for (const auto& [q, e] : factorize(F.p() - 1)) {
    (void)e;
    while (order % q == 0 && F.pow(a, order / q) == 1) order /= q;
  }
  return order;
}

std::uint64_t multiplicative_generator(const PrimeField& F) {
  const auto factors = factorize(F.p() - 1);
  for (std::uint64_t g = 2; g < F.p(); ++g) {
    bool full = true;
    for (const auto& [q, e] : factors) {
      (void)e;
      if (F.pow(g, (F.p() - 1) / q) == 1) {
        full = false;
        break;
      }
    }
    if (full) return g;
  }
  throw check_failure("multiplicative_generator: no generator found");  // unreachable for prime p
}

std::uint64_t primitive_root_of_order(std::uint64_t d, const PrimeField& F) {
  if (d == 0 || (F.p() - 1) % d != 0)
    throw invalid_input("primitive_root_of_order: " + std::to_string(d) + " does not divide p-1");
  const std::uint64_t g = multiplicative_generator(F);
  const std::uint64_t x = F.pow(g, (F.p() - 1) / d);
  if (F.pow(x, d) != 1) throw check_failure("primitive_root_of_order: x^d != 1");
  for (const auto& [q, e] : factorize(d)) {
    (void)e;
    if (F.pow(x, d / q) == 1) throw check_failure("primitive_root_of_order: order too small");
  }
  return x;
}

namespace {

std::vector<std::uint64_t> splitting_orders_of(const std::vector<unsigned>& cycle_type) {
  std::vector<std::uint64_t> S;
  for (unsigned s : cycle_type) {
    if (s < 1) throw invalid_input("cycle type: parts must be >= 1");
    if (s > 30) throw invalid_input("cycle type: cycle length too large (max 30)");
    S.push_back(s);
    S.push_back((1ULL << s) - 1);
  }
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

}  // namespace

AdmissiblePrime admissible_prime(const std::vector<unsigned>& cycle_type,
                                 std::uint64_t search_bound) {
  if (cycle_type.empty()) throw invalid_input("admissible_prime: empty cycle type");
  const auto S = splitting_orders_of(cycle_type);
  std::uint64_t m = 1;
  for (std::uint64_t t : S) m = std::lcm(m, t);
  const std::uint64_t n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0ULL);
  for (std::uint64_t p = 5; p <= search_bound; ++p) {
    if (p % m != 1 % m) continue;
    if (p <= n || !is_prime(p)) continue;
    return AdmissiblePrime{PrimeField(p), S, m};
  }
  throw cap_exceeded("admissible_prime: search bound exceeded");
}

void verify_admissible(const PrimeField& F, const std::vector<unsigned>& cycle_type) {
  const auto S = splitting_orders_of(cycle_type);
  const std::uint64_t n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0ULL);
  if (F.p() <= n)
    throw invalid_input("prime " + std::to_string(F.p()) + " is not admissible: p must exceed the degree " +
                        std::to_string(n));
  for (std::uint64_t t : S)
    if ((F.p() - 1) % t != 0)
      throw invalid_input("prime " + std::to_string(F.p()) + " is not admissible: z^" + std::to_string(t) +
                          "-1 does not split (need " + std::to_string(t) + " | p-1)");
}

}  // namespace isotope
