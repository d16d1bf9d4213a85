#include "isotope/perm.hpp"

#include <algorithm>
#include <sstream>

#include "isotope/errors.hpp"

namespace isotope {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  const unsigned n = degree();
  if (n == 0) throw invalid_input("permutation: empty image list");
  std::vector<bool> seen(n, false);
  for (unsigned v : images_) {
    if (v < 1 || v > n) throw invalid_input("permutation: image out of range 1..n");
    if (seen[v - 1]) throw invalid_input("permutation: image list is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> im(n);
  for (unsigned i = 0; i < n; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::cyclic_shift(unsigned n) {
  std::vector<unsigned> im(n);
  for (unsigned i = 0; i < n; ++i) im[i] = (i + 1) % n + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::parse_images(const std::string& text) {
  std::istringstream in(text);
  std::vector<unsigned> im;
  long v;
  while (in >> v) {
    if (v < 1) throw invalid_input("permutation: images must be positive");
    im.push_back(static_cast<unsigned>(v));
  }
  if (!in.eof()) throw invalid_input("permutation: cannot parse image list '" + text + "'");
  if (im.empty()) throw invalid_input("permutation: empty image list");
  return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(const std::string& text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t pos = 0;
  unsigned max_index = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw invalid_input("cycles: expected '(' in '" + text + "'");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw invalid_input("cycles: unbalanced '(' in '" + text + "'");
    std::string body = text.substr(pos + 1, close - pos - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<unsigned> cyc;
    long v;
    while (in >> v) {
      if (v < 1) throw invalid_input("cycles: indices must be positive");
      cyc.push_back(static_cast<unsigned>(v));
      max_index = std::max(max_index, static_cast<unsigned>(v));
    }
    if (!in.eof()) throw invalid_input("cycles: cannot parse '" + text + "'");
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  if (max_index == 0) throw invalid_input("cycles: no indices in '" + text + "'");
  std::vector<unsigned> im(max_index);
  for (unsigned i = 0; i < max_index; ++i) im[i] = i + 1;
  std::vector<bool> moved(max_index, false);
  for (const auto& cyc : cycles) {
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      unsigned from = cyc[t];
      unsigned to = cyc[(t + 1) % cyc.size()];
      if (moved[from - 1]) throw invalid_input("cycles: index repeated across cycles");
      moved[from - 1] = true;
      im[from - 1] = to;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw invalid_input("compose: degree mismatch");
  std::vector<unsigned> im(degree());
  for (unsigned i = 1; i <= degree(); ++i) im[i - 1] = (*this)(other(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> im(degree());
  for (unsigned i = 1; i <= degree(); ++i) im[images_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (unsigned i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  const unsigned n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<unsigned>> out;
  for (unsigned start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::vector<unsigned> cyc;
    unsigned i = start;
    do {
      cyc.push_back(i);
      seen[i - 1] = true;
      i = (*this)(i);
    } while (i != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<unsigned> Permutation::cycle_type() const {
  std::vector<unsigned> parts;
  for (const auto& cyc : cycles()) parts.push_back(static_cast<unsigned>(cyc.size()));
  std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
  return parts;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (unsigned i = 0; i < degree(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  for (const auto& cyc : cycles()) {
    out << '(';
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      if (t) out << ' ';
      out << cyc[t];
    }
    out << ')';
  }
  return out.str();
}

bool are_conjugate(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw invalid_input("are_conjugate: degree mismatch");
  return p.cycle_type() == q.cycle_type();
}

namespace {

// Cycles sorted by (length, smallest element); the smallest element leads.
std::vector<std::vector<unsigned>> aligned_cycles(const Permutation& p) {
  auto cycles = p.cycles();
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return cycles;
}

}  // namespace

Permutation conjugator(const Permutation& p, const Permutation& q) {
  if (!are_conjugate(p, q)) throw invalid_input("conjugator: permutations are not conjugate");
  const auto cp = aligned_cycles(p);
  const auto cq = aligned_cycles(q);
  std::vector<unsigned> im(p.degree());
  for (std::size_t c = 0; c < cp.size(); ++c)
    for (std::size_t t = 0; t < cp[c].size(); ++t) im[cp[c][t] - 1] = cq[c][t];
  Permutation g{std::move(im)};
  if (g.compose(p).compose(g.inverse()) != q)
    throw check_failure("conjugator: verification g∘p∘g⁻¹ = q failed");
  return g;
}

}  // namespace isotope
