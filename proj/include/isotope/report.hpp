#ifndef ISOTOPE_REPORT_HPP
#define ISOTOPE_REPORT_HPP

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "isotope/algebra.hpp"
#include "isotope/idem.hpp"
#include "isotope/perm.hpp"

namespace isotope {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::string prime = "auto";  // "auto" or a decimal prime
  std::uint64_t cap = kDefaultBruteCap;
  std::uint64_t node_cap = 1'000'000ULL;
};

// The field for sigma: the smallest admissible prime under "auto", otherwise
// the given prime verified admissible.
PrimeField resolve_prime(const Permutation& sigma, const std::string& prime_spec);

// Deterministic full report for one permutation; identical inputs produce
// byte-identical JSON. Every "pass" entry in the checks array names a
// rerunnable check.
Json run_report(const Permutation& sigma, const ReportOptions& opt = {});

std::string render_markdown(const Json& report);

// One permutation per partition of n, cycles in decreasing length on
// consecutive indices.
std::vector<Permutation> partition_representatives(unsigned n);

// Runs the invariant suite for every partition representative of each degree
// up to n_max, plus the pairwise isomorphism classification between the
// representatives. Prints one line per check; returns 0 when everything
// passes and 1 otherwise.
int verify_all(unsigned n_max, const ReportOptions& opt, std::ostream& out);

}  // namespace isotope

#endif
