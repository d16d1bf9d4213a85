#include "isotope/intpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "isotope/errors.hpp"

namespace isotope {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::one() { return IntPoly({BigInt(1)}); }

IntPoly IntPoly::monomial(unsigned exponent, BigInt c) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::power_minus_one(unsigned n) {
  std::vector<BigInt> v(n + 1);
  v[0] = -1;
  v[n] = 1;
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw invalid_input("intpoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - rhs.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<BigInt> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divexact_scalar(const BigInt& c) const {
  if (c == 0) throw invalid_input("intpoly: division by zero scalar");
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) {
    if (x % c != 0) throw check_failure("intpoly: scalar division is not exact");
    x /= c;
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) out << a.str();
    if (i > 0) {
      out << 'z';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw invalid_input("divrem_monic: zero divisor");
  if (!g.is_monic()) throw invalid_input("divrem_monic: divisor is not monic");
  const int dg = g.degree();
  if (f.degree() < dg) return {IntPoly(), f};
  std::vector<BigInt> rem(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) rem[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(i));
  std::vector<BigInt> quot(static_cast<std::size_t>(f.degree() - dg) + 1);
  for (int i = f.degree(); i >= dg; --i) {
    BigInt t = rem[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i - dg)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      const BigInt& gc = g.coeff(static_cast<std::size_t>(j));
      if (gc == 0) continue;
      rem[static_cast<std::size_t>(i - dg + j)] -= t * gc;
    }
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

namespace {

std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

IntPoly cyclotomic(unsigned N) {
  if (N < 1) throw invalid_input("cyclotomic: N must be positive");
  std::map<unsigned, IntPoly> known;
  for (unsigned d : divisors_of(N)) {
    IntPoly f = IntPoly::power_minus_one(d);
    for (unsigned e : divisors_of(d)) {
      if (e == d) continue;
      auto [q, r] = divrem_monic(f, known.at(e));
      if (!r.is_zero()) throw check_failure("cyclotomic: division was not exact");
      f = std::move(q);
    }
    if (f.degree() != static_cast<int>(totient(d)))
      throw check_failure("cyclotomic: degree differs from the totient");
    known.emplace(d, std::move(f));
  }
  return known.at(N);
}

IntPoly lambda_poly(unsigned n) {
  if (n < 2) throw invalid_input("lambda_poly: n must be >= 2");
  if (n > 24) throw invalid_input("lambda_poly: n too large");
  std::vector<BigInt> v((1ULL << (n - 1)) + 1);
  for (unsigned i = 0; i < n; ++i) v[1ULL << i] = 1;
  return IntPoly(std::move(v));
}

namespace {

BigInt pow_big(const BigInt& b, unsigned e) {
  BigInt acc = 1, base = b;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Remainder of lc(b)^(deg a - deg b + 1) * a under division by b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const BigInt lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const BigInt lr = r.leading();
    const unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
    r = r.scaled(lb) - (b * IntPoly::monomial(shift, lr));
    --steps;
  }
  if (steps > 0) r = r.scaled(pow_big(lb, static_cast<unsigned>(steps)));
  return r;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw invalid_input("resultant: zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) return 1;
  if (f.degree() == 0) return pow_big(f.leading(), static_cast<unsigned>(g.degree()));
  if (g.degree() == 0) return pow_big(g.leading(), static_cast<unsigned>(f.degree()));

  int sign = 1;
  IntPoly a = f, b = g;
  BigInt ca = a.content(), cb = b.content();
  a = a.divexact_scalar(ca);
  b = b.divexact_scalar(cb);
  BigInt t = pow_big(ca, static_cast<unsigned>(b.degree())) * pow_big(cb, static_cast<unsigned>(a.degree()));
  BigInt gc = 1, h = 1;

  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) sign = -sign;
  }

  while (b.degree() > 0) {
    const int d = a.degree() - b.degree();
    if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) {
      b = IntPoly();
      break;
    }
    b = r.divexact_scalar(gc * pow_big(h, static_cast<unsigned>(d)));
    gc = a.leading();
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = gc;
    } else {
      const BigInt num = pow_big(gc, static_cast<unsigned>(d));
      const BigInt den = pow_big(h, static_cast<unsigned>(d - 1));
      if (num % den != 0) throw check_failure("resultant: subresultant update not exact");
      h = num / den;
    }
  }

  if (b.is_zero()) return 0;  // nontrivial common factor

  const unsigned da = static_cast<unsigned>(a.degree());
  BigInt num = pow_big(b.coeff(0), da);
  if (da >= 1) {
    const BigInt den = pow_big(h, da - 1);
    if (num % den != 0) throw check_failure("resultant: final update not exact");
    num /= den;
  }
  return sign * t * num;
}

namespace {

// Λ_n(z^m) with every exponent m*2^i reduced mod 2^n-1, residue 0 mapped to 2^n-1.
IntPoly lambda_reduced(unsigned n, std::uint64_t m) {
  const std::uint64_t N = (1ULL << n) - 1;
  std::vector<BigInt> v(N + 1);
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t e = (m % N) * ((1ULL << i) % N) % N;
    if (e == 0) e = N;
    v[e] += 1;
  }
  return IntPoly(std::move(v));
}

// Λ_n(z^m) composed literally, exponents m*2^i.
IntPoly lambda_composed(unsigned n, std::uint64_t m) {
  std::vector<BigInt> v(m * (1ULL << (n - 1)) + 1);
  for (unsigned i = 0; i < n; ++i) v[m * (1ULL << i)] += 1;
  return IntPoly(std::move(v));
}

}  // namespace

RegularityCertificate is_regular(unsigned n, bool with_resultants, unsigned n_bound) {
  if (n < 2) throw invalid_input("is_regular: n must be >= 2");
  if (n > n_bound || n > 24) throw cap_exceeded("is_regular: n exceeds the configured bound");
  if (with_resultants && n > 8)
    throw cap_exceeded("is_regular: resultants only supported up to n = 8");

  const std::uint64_t N = (1ULL << n) - 1;
  RegularityCertificate cert;
  cert.n = n;
  cert.modulus = N;
  cert.regular = true;

  std::vector<std::uint64_t> delta;
  for (unsigned i = 0; i < n; ++i) delta.push_back((1ULL << i) % N);
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  cert.delta = delta;

  const IntPoly phi = cyclotomic(static_cast<unsigned>(N));
  const IntPoly lam = lambda_reduced(n, 1);
  const IntPoly divisor_zz1 = IntPoly({BigInt(0), BigInt(-1), BigInt(1)});  // z^2 - z

  for (std::uint64_t m = 1; m < N; ++m) {
    if (std::gcd(m, N) != 1) continue;
    RegularityWitness w;
    w.m = m;
    w.in_delta = std::binary_search(delta.begin(), delta.end(), m);
    const IntPoly diff = lambda_reduced(n, m) - lam;
    if (diff.is_zero()) {
      w.divides = true;
    } else {
      auto [q, r] = divrem_monic(diff, phi);
      (void)q;
      w.divides = r.is_zero();
    }
    if (w.in_delta && !w.divides)
      throw check_failure("is_regular: subgroup element fails the fixed-point divisibility");
    if (!w.in_delta) {
      if (w.divides) cert.regular = false;
      if (with_resultants) {
        const IntPoly lit = lambda_composed(n, m) - lambda_composed(n, 1);
        auto [quot, rem] = divrem_monic(lit, divisor_zz1);
        if (!rem.is_zero()) throw check_failure("is_regular: difference not divisible by z(z-1)");
        w.resultant_value = resultant(quot, phi);
      }
    }
    cert.tested.push_back(std::move(w));
  }
  return cert;
}

}  // namespace isotope
