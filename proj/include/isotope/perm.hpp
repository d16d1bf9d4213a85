#ifndef ISOTOPE_PERM_HPP
#define ISOTOPE_PERM_HPP

#include <string>
#include <vector>

namespace isotope {

// Permutation of {1..n}, stored as a 1-based image list.
// Composition convention: compose(p, q)(i) = p(q(i)).
class Permutation {
public:
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned n);
  // The shift [2,3,...,n,1], i.e. i -> i+1 cyclically.
  static Permutation cyclic_shift(unsigned n);
  // Whitespace-separated image list, e.g. "2 3 1".
  static Permutation parse_images(const std::string& text);
  // Parenthesized disjoint cycles, e.g. "(1 2 3)" or "(1 2)(4 5)";
  // indices not mentioned are fixed points, degree = largest index seen.
  static Permutation parse_cycles(const std::string& text);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i - 1]; }
  const std::vector<unsigned>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Disjoint cycles, each starting at its smallest element and listed in
  // traversal order; cycles sorted by smallest element. Fixed points appear
  // as singletons.
  std::vector<std::vector<unsigned>> cycles() const;
  // Non-increasing integer partition of the degree.
  std::vector<unsigned> cycle_type() const;

  std::string to_string() const;
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<unsigned> images_;
};

bool are_conjugate(const Permutation& p, const Permutation& q);

// Deterministic g with g∘p∘g⁻¹ = q, built by aligning the cycles of p and q
// sorted by (length, smallest element). Throws invalid_input when the cycle
// types differ. The returned map is verified by direct composition.
Permutation conjugator(const Permutation& p, const Permutation& q);

}  // namespace isotope

#endif
