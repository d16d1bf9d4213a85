#include "isotope/report.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "isotope/autgroup.hpp"
#include "isotope/category.hpp"
#include "isotope/errors.hpp"
#include "isotope/intpoly.hpp"
#include "isotope/spectral.hpp"

namespace isotope {

namespace {

struct CheckList {
  Json arr = Json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    Json e;
    e["name"] = name;
    e["pass"] = pass;
    e["witness"] = pass ? "" : witness;
    arr.push_back(std::move(e));
    all_pass = all_pass && pass;
  }

  // Guarded check: an exception from the body counts as a failure with the
  // exception text as witness.
  template <typename Fn>
  void run(const std::string& name, Fn&& body) {
    try {
      auto [pass, witness] = body();
      add(name, pass, witness);
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
};

using CheckOutcome = std::pair<bool, std::string>;

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json poly_to_json(const FieldPoly& f) {
  Json a = Json::array();
  for (auto x : f) a.push_back(x);
  return a;
}

FieldPoly expected_stratum_poly(const std::vector<unsigned>& lengths,
                                const std::vector<std::uint8_t>& alpha, const PrimeField& F) {
  FieldPoly acc{1};
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    FieldPoly factor(lengths[j] + 1, 0);
    factor[lengths[j]] = 1;
    factor[0] = F.neg(alpha[j]);
    acc = field_poly_mul(acc, factor, F);
  }
  return acc;
}

enum class Kind { Identity, SingleCycle, Mixed };

Kind kind_of(const Permutation& sigma) {
  if (sigma.is_identity()) return Kind::Identity;
  if (sigma.cycles().size() == 1) return Kind::SingleCycle;
  return Kind::Mixed;
}

// Vectors of the idempotents assembled from per-block chain oracles, pulled
// back to the original coordinates.
std::set<Vec> chain_assembled_idempotents(const Permutation& sigma, const PrimeField& F) {
  std::set<Vec> out;
  const auto orbits = sigma.cycles();
  std::vector<std::vector<Vec>> block_sets;
  for (const auto& orbit : orbits)
    block_sets.push_back(
        idempotents_chain(Permutation::cyclic_shift(static_cast<unsigned>(orbit.size())), F));

  std::vector<std::size_t> pick(orbits.size(), 0);
  while (true) {
    Vec x(sigma.degree(), 0);
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      const auto& block = block_sets[j][pick[j]];
      for (std::size_t t = 0; t < orbits[j].size(); ++t) x[orbits[j][t] - 1] = block[t];
    }
    out.insert(std::move(x));
    std::size_t j = orbits.size();
    while (j > 0) {
      --j;
      if (++pick[j] < block_sets[j].size()) break;
      pick[j] = 0;
      if (j == 0) return out;
    }
  }
}

Json fusion_table_json(const FusionTable& t) {
  Json out;
  out["eigenvalues"] = Json::array();
  for (auto e : t.eigenvalues) out["eigenvalues"].push_back(e);
  Json rule = Json::array();
  for (std::size_t a = 0; a < t.rule.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.rule[a].size(); ++b) {
      Json cell = Json::array();
      for (unsigned e : t.rule[a][b]) cell.push_back(t.eigenvalues[e]);
      row.push_back(std::move(cell));
    }
    rule.push_back(std::move(row));
  }
  out["rule"] = std::move(rule);
  return out;
}

}  // namespace

PrimeField resolve_prime(const Permutation& sigma, const std::string& prime_spec) {
  if (prime_spec == "auto") return admissible_prime(sigma.cycle_type()).field;
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(prime_spec, &used);
    if (used != prime_spec.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw invalid_input("prime: expected 'auto' or a decimal prime, got '" + prime_spec + "'");
  }
  PrimeField F(p);
  verify_admissible(F, sigma.cycle_type());
  return F;
}

std::vector<Permutation> partition_representatives(unsigned n) {
  std::vector<std::vector<unsigned>> partitions;
  std::vector<unsigned> current;
  auto recurse = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      partitions.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);

  std::vector<Permutation> reps;
  for (const auto& parts : partitions) {
    std::vector<unsigned> im(n);
    unsigned base = 0;
    for (unsigned s : parts) {
      for (unsigned t = 0; t < s; ++t) im[base + t] = base + (t + 1) % s + 1;
      base += s;
    }
    reps.emplace_back(std::move(im));
  }
  return reps;
}

Json run_report(const Permutation& sigma, const ReportOptions& opt) {
  const unsigned n = sigma.degree();
  const PrimeField F = resolve_prime(sigma, opt.prime);
  const Kind kind = kind_of(sigma);

  const Algebra A = isotope_of(sigma, F);
  const IdempotentTable T = idempotents_formula(sigma, F);
  const QuasigroupReport Q = quasigroup_table(T, A);

  std::vector<unsigned> lengths;
  for (const auto& c : T.cycles()) lengths.push_back(static_cast<unsigned>(c.orbit.size()));

  Json rep;
  rep["schema"] = 1;
  rep["n"] = n;
  rep["sigma"] = Json::array();
  for (unsigned v : sigma.images()) rep["sigma"].push_back(v);
  rep["cycles"] = sigma.cycle_string();
  rep["cycle_type"] = Json::array();
  for (unsigned v : sigma.cycle_type()) rep["cycle_type"].push_back(v);
  rep["prime"] = F.p();

  {
    const auto adm = admissible_prime(sigma.cycle_type());
    Json roots = Json::array();
    for (std::uint64_t t : adm.splitting_orders) {
      Json e;
      e["order"] = t;
      e["value"] = primitive_root_of_order(t, F);
      roots.push_back(std::move(e));
    }
    rep["roots"] = std::move(roots);
  }

  {
    Json idems = Json::array();
    for (const auto& c : T.idems()) {
      Json e;
      e["label"] = c.label;
      Json alpha = Json::array();
      for (auto a : c.alpha) alpha.push_back(static_cast<int>(a));
      e["alpha"] = std::move(alpha);
      e["vector"] = vec_to_json(c.vec);
      e["regular"] = is_regular_idempotent(A, c.vec);
      idems.push_back(std::move(e));
    }
    rep["idempotents"] = std::move(idems);
  }

  {
    Json table = Json::array();
    for (std::size_t i = 0; i < T.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < T.size(); ++j)
        row.push_back(Q.closed ? T.idems()[Q.table[i][j]].label : std::string("?"));
      table.push_back(std::move(row));
    }
    rep["quasigroup_table"] = std::move(table);
  }

  {
    // group idempotents by binary code
    Json strata = Json::array();
    std::vector<std::vector<std::uint8_t>> seen;
    for (const auto& c : T.idems()) {
      if (std::find(seen.begin(), seen.end(), c.alpha) != seen.end()) continue;
      seen.push_back(c.alpha);
      unsigned count = 0;
      for (const auto& d : T.idems())
        if (d.alpha == c.alpha) ++count;
      Json e;
      Json alpha = Json::array();
      for (auto a : c.alpha) alpha.push_back(static_cast<int>(a));
      e["alpha"] = std::move(alpha);
      e["count"] = count;
      e["char_poly"] = poly_to_json(char_poly(A.left_mult(c.vec)));
      strata.push_back(std::move(e));
    }
    rep["strata"] = std::move(strata);
  }

  CheckList checks;

  const auto identities = check_identities(A);
  checks.add("commutativity", identities.commutative);
  checks.add("mediality", identities.medial,
             identities.medial_witness
                 ? "basis quadruple (" + std::to_string((*identities.medial_witness)[0]) + "," +
                       std::to_string((*identities.medial_witness)[1]) + "," +
                       std::to_string((*identities.medial_witness)[2]) + "," +
                       std::to_string((*identities.medial_witness)[3]) + ")"
                 : "");
  checks.add("associativity_iff_identity", identities.associative == sigma.is_identity(),
             "associativity does not match the permutation being trivial");

  checks.run("unit_axis_multiplication", [&]() -> CheckOutcome {
    const Vec ones(n, 1);
    return {A.left_mult(ones) == perm_map(sigma, F), "L(all-ones) is not the coordinate permutation"};
  });

  checks.add("idempotent_count", T.size() == (1ULL << n),
             "expected 2^n idempotents, found " + std::to_string(T.size()));

  checks.run("chain_blocks_agree", [&]() -> CheckOutcome {
    std::set<Vec> formula_set;
    for (const auto& c : T.idems()) formula_set.insert(c.vec);
    return {chain_assembled_idempotents(sigma, F) == formula_set,
            "per-block chain oracle disagrees with the formula"};
  });

  std::uint64_t space = 1;
  bool within_cap = true;
  for (unsigned i = 0; i < n && within_cap; ++i) {
    space *= F.p();
    if (space > opt.cap) within_cap = false;
  }
  rep["verification"]["bruteforce"] = within_cap ? "done" : "cap_exceeded";
  if (within_cap) {
    checks.run("bruteforce_agree", [&]() -> CheckOutcome {
      const auto brute = idempotents_bruteforce(A, opt.cap);
      std::set<Vec> formula_set;
      for (const auto& c : T.idems()) formula_set.insert(c.vec);
      return {std::set<Vec>(brute.begin(), brute.end()) == formula_set,
              "exhaustive scan disagrees with the formula"};
    });
  }

  checks.run("all_regular", [&]() -> CheckOutcome {
    for (const auto& c : T.idems())
      if (!is_regular_idempotent(A, c.vec)) return {false, "idempotent " + c.label + " is not regular"};
    return {true, ""};
  });
  checks.run("genericity", [&]() -> CheckOutcome {
    return {genericity_check(A, opt.cap), "regular idempotent count differs from 2^n"};
  });

  checks.run("charpoly_strata", [&]() -> CheckOutcome {
    for (const auto& c : T.idems()) {
      const FieldPoly expected = expected_stratum_poly(lengths, c.alpha, F);
      if (char_poly(A.left_mult(c.vec)) != expected)
        return {false, "characteristic polynomial of " + c.label + " differs from the block formula"};
    }
    return {true, ""};
  });

  checks.run("composition_rule", [&]() -> CheckOutcome {
    for (const auto& c1 : T.idems())
      for (const auto& c2 : T.idems()) {
        const Matrix lhs = A.left_mult(c2.vec).mul(A.left_mult(c1.vec));
        const Matrix rhs = A.left_mult(A.multiply(c1.vec, c2.vec)).mul(A.left_mult(c2.vec));
        if (!(lhs == rhs))
          return {false, "L(c2)L(c1) != L(c1*c2)L(c2) at (" + c1.label + "," + c2.label + ")"};
      }
    return {true, ""};
  });

  checks.add("table_closed", Q.closed, Q.witness.value_or(""));
  checks.add("table_laws", Q.closed && Q.idempotent && Q.commutative && Q.medial,
             Q.witness.value_or(""));

  checks.run("category_roundtrip", [&]() -> CheckOutcome {
    const auto ca = CalibratedAssociative::make(Algebra::product(n, F), perm_map(sigma, F));
    if (!roundtrip_check(ca)) return {false, "round trip did not return the input"};
    const auto cm = to_medial(ca);
    const auto back = to_associative(cm);
    const auto again = to_medial(back);
    return {again == cm, "medial-side round trip did not return the input"};
  });

  Json autos;
  if (kind == Kind::SingleCycle && n >= 2) {
    const std::uint64_t N = (1ULL << n) - 1;

    checks.add("shift_law", Q.shift_law, Q.witness.value_or(""));
    checks.add("latin_square", Q.latin, Q.witness.value_or(""));

    checks.run("fusion_cyclic", [&]() -> CheckOutcome {
      for (const auto& c : T.idems()) {
        if (vec_is_zero(c.vec)) continue;
        if (!fusion_cyclic_law(A, c.vec))
          return {false, "cyclic fusion law fails at axis " + c.label};
      }
      return {true, ""};
    });

    checks.run("eigvec_formula", [&]() -> CheckOutcome {
      for (std::uint64_t k = 1; k <= N; ++k) {
        std::vector<Vec> etas;
        for (unsigned p_exp = 0; p_exp < n; ++p_exp) etas.push_back(eigvec_formula(k, p_exp, n, F));
        if (row_rank(etas, F) != n)
          return {false, "eigenvectors of axis " + std::to_string(k) + " are dependent"};
      }
      return {true, ""};
    });

    checks.run("power_sums", [&]() -> CheckOutcome {
      for (unsigned s = 1; s < n; ++s)
        if (!power_sum_check(A, T, s).is_zero())
          return {false, "sum of L(c)^" + std::to_string(s) + " is not zero"};
      const Matrix at_n = power_sum_check(A, T, n);
      if (!(at_n == Matrix::identity(n, F).scaled(N % F.p())))
        return {false, "sum of L(c)^n is not (2^n-1) I"};
      return {true, ""};
    });

    checks.add("span_rank", span_rank(T) == n, "idempotents do not span");

    checks.run("operator_orders", [&]() -> CheckOutcome {
      for (const auto& c : T.idems()) {
        if (vec_is_zero(c.vec)) continue;
        const auto order = operator_order_check(A, c.vec);
        if (!order || *order != n)
          return {false, "L(" + c.label + ") does not have order n"};
      }
      return {true, ""};
    });

    checks.run("power_identity", [&]() -> CheckOutcome {
      for (const auto& c : T.idems()) {
        if (vec_is_zero(c.vec)) continue;
        for (auto x : c.vec)
          if (F.pow(x, N) != 1)
            return {false, "coordinatewise (2^n-1)-power of " + c.label + " is not all ones"};
      }
      return {true, ""};
    });

    if (N <= 8) {
      checks.run("quasigroup_autos_bruteforce", [&]() -> CheckOutcome {
        const auto bijections = quasigroup_autos_bruteforce(N);
        std::uint64_t phi = 0;
        for (std::uint64_t m = 1; m < N; ++m)
          if (std::gcd(m, N) == 1) ++phi;
        return {bijections.size() == N * phi, "unexpected number of quasigroup automorphisms"};
      });
    }

    const auto cert = is_regular(n);
    rep["regularity"]["n"] = cert.n;
    rep["regularity"]["status"] = cert.regular;
    rep["regularity"]["delta_set"] = Json::array();
    for (auto d : cert.delta) rep["regularity"]["delta_set"].push_back(d);
    Json tested = Json::array();
    for (const auto& w : cert.tested) {
      Json e;
      e["m"] = w.m;
      e["in_delta"] = w.in_delta;
      e["divides"] = w.divides;
      tested.push_back(std::move(e));
    }
    rep["regularity"]["tested_m"] = std::move(tested);
    checks.add("regular_integer", cert.regular, "n is not certified regular");

    const auto algebra_group = algebra_autos(A, T);
    const auto structure = group_structure(algebra_group.affine);
    autos["quasigroup_order"] = affine_autos(N).size();
    autos["algebra_order"] = algebra_group.maps.size();
    autos["abelian"] = structure.abelian;
    autos["relations_ok"] = structure.relations_ok;
    autos["semidirect"] = structure.semidirect_type;
    if (cert.regular) {
      checks.add("algebra_automorphism_order", algebra_group.maps.size() == n * N,
                 "expected n(2^n-1) automorphisms, found " + std::to_string(algebra_group.maps.size()));
    }
    checks.add("automorphism_relations", structure.relations_ok && structure.semidirect_type,
               "shift/scaling presentation failed");

    checks.run("calibration_independence", [&]() -> CheckOutcome {
      for (const auto& c1 : T.idems()) {
        if (vec_is_zero(c1.vec)) continue;
        for (const auto& c2 : T.idems()) {
          if (vec_is_zero(c2.vec)) continue;
          calibration_independence(A, c1.vec, c2.vec);
        }
      }
      return {true, ""};
    });

    {
      const auto fusion = fusion_table(A, T.idems()[T.index_of_label("1")].vec);
      rep["fusion"]["law"] = "cyclic";
      bool verified = true;
      for (const auto& e : checks.arr)
        if (e["name"] == "fusion_cyclic") verified = e["pass"].get<bool>();
      rep["fusion"]["verified"] = verified;
      rep["fusion"]["table"] = fusion_table_json(fusion);
    }
  } else if (kind == Kind::Identity) {
    checks.run("boolean_meet_table", [&]() -> CheckOutcome {
      // under binary-code labels the product is the bitwise AND
      for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < T.size(); ++j) {
          const std::uint64_t a = std::stoull(T.idems()[i].label);
          const std::uint64_t b = std::stoull(T.idems()[j].label);
          if (std::stoull(T.idems()[Q.table[i][j]].label) != (a & b))
            return {false, "product table is not the bitwise meet at (" + T.idems()[i].label + "," +
                               T.idems()[j].label + ")"};
        }
      return {true, ""};
    });

    checks.run("fusion_peirce", [&]() -> CheckOutcome {
      for (const auto& c : T.idems())
        if (!fusion_peirce_law(A, c.vec))
          return {false, "associative fusion law fails at axis " + c.label};
      return {true, ""};
    });

    const auto general = algebra_autos_general(A, T, opt.node_cap);
    std::uint64_t factorial = 1;
    for (unsigned i = 2; i <= n; ++i) factorial *= i;
    bool abelian = true;
    for (const auto& a : general)
      for (const auto& b : general)
        if (!(a.mul(b) == b.mul(a))) abelian = false;
    autos["algebra_order"] = general.size();
    autos["abelian"] = abelian;
    checks.add("automorphism_order_factorial", general.size() == factorial,
               "expected n! automorphisms, found " + std::to_string(general.size()));

    const auto fusion = fusion_table(A, T.idems()[1].vec);
    rep["fusion"]["law"] = "peirce";
    bool verified = true;
    for (const auto& e : checks.arr)
      if (e["name"] == "fusion_peirce") verified = e["pass"].get<bool>();
    rep["fusion"]["verified"] = verified;
    rep["fusion"]["table"] = fusion_table_json(fusion);
  } else {
    checks.run("decomposition_isomorphism", [&]() -> CheckOutcome {
      decompose_by_cycles(sigma, F);  // throws when the relabeling fails
      return {true, ""};
    });

    checks.run("direct_sum_idempotents_match", [&]() -> CheckOutcome {
      const auto orbits = sigma.cycles();
      auto folded = idempotents_formula(
          Permutation::cyclic_shift(static_cast<unsigned>(orbits[0].size())), F);
      for (std::size_t j = 1; j < orbits.size(); ++j)
        folded = direct_sum_idempotents(
            folded,
            idempotents_formula(Permutation::cyclic_shift(static_cast<unsigned>(orbits[j].size())), F));
      // pull the block-diagonal vectors back to the original coordinates
      std::vector<unsigned> order;
      for (const auto& orbit : orbits) order.insert(order.end(), orbit.begin(), orbit.end());
      std::set<Vec> pulled;
      for (const auto& c : folded.idems()) {
        Vec x(n, 0);
        for (unsigned t = 0; t < n; ++t) x[order[t] - 1] = c.vec[t];
        pulled.insert(std::move(x));
      }
      std::set<Vec> formula_set;
      for (const auto& c : T.idems()) formula_set.insert(c.vec);
      return {pulled == formula_set, "direct-sum idempotents differ from the formula"};
    });

    if (T.size() <= 256) {
      const auto general = algebra_autos_general(A, T, opt.node_cap);
      autos["algebra_order"] = general.size();
      if (n == 3 && sigma.cycle_type() == std::vector<unsigned>{2, 1})
        checks.add("automorphism_order", general.size() == 6,
                   "expected 6 automorphisms, found " + std::to_string(general.size()));
    }

    const Vec ones(n, 1);
    const auto fusion = fusion_table(A, ones);
    rep["fusion"]["law"] = "none";
    rep["fusion"]["table"] = fusion_table_json(fusion);
  }

  rep["automorphisms"] = std::move(autos);
  rep["checks"] = std::move(checks.arr);
  rep["all_pass"] = checks.all_pass;
  return rep;
}

std::string render_markdown(const Json& report) {
  std::ostringstream out;
  out << "# Isotope report\n\n";
  out << "- permutation: `" << report["cycles"].get<std::string>() << "` (images";
  for (const auto& v : report["sigma"]) out << ' ' << v.get<std::uint64_t>();
  out << ")\n- prime: " << report["prime"].get<std::uint64_t>() << "\n- cycle type: (";
  bool first = true;
  for (const auto& v : report["cycle_type"]) {
    if (!first) out << ", ";
    out << v.get<std::uint64_t>();
    first = false;
  }
  out << ")\n\n";

  out << "## Idempotents\n\n| label | vector | regular |\n|---|---|---|\n";
  for (const auto& c : report["idempotents"]) {
    out << "| " << c["label"].get<std::string>() << " | (";
    bool f = true;
    for (const auto& x : c["vector"]) {
      if (!f) out << ", ";
      out << x.get<std::uint64_t>();
      f = false;
    }
    out << ") | " << (c["regular"].get<bool>() ? "yes" : "no") << " |\n";
  }

  out << "\n## Product table\n\n|*|";
  for (const auto& c : report["idempotents"]) out << ' ' << c["label"].get<std::string>() << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < report["idempotents"].size(); ++i) out << "---|";
  out << '\n';
  for (std::size_t i = 0; i < report["quasigroup_table"].size(); ++i) {
    out << "| **" << report["idempotents"][i]["label"].get<std::string>() << "** |";
    for (const auto& cell : report["quasigroup_table"][i]) out << ' ' << cell.get<std::string>() << " |";
    out << '\n';
  }

  if (report.contains("fusion") && report["fusion"].contains("table")) {
    const auto& fusion = report["fusion"]["table"];
    out << "\n## Fusion (eigenvalues";
    for (const auto& e : fusion["eigenvalues"]) out << ' ' << e.get<std::uint64_t>();
    out << ")\n\n";
    for (std::size_t a = 0; a < fusion["rule"].size(); ++a) {
      for (std::size_t b = 0; b < fusion["rule"][a].size(); ++b) {
        out << "A_" << fusion["eigenvalues"][a].get<std::uint64_t>() << " * A_"
            << fusion["eigenvalues"][b].get<std::uint64_t>() << " -> {";
        bool f = true;
        for (const auto& e : fusion["rule"][a][b]) {
          if (!f) out << ", ";
          out << "A_" << e.get<std::uint64_t>();
          f = false;
        }
        out << "}\n";
      }
    }
  }

  out << "\n## Checks\n\n";
  for (const auto& c : report["checks"]) {
    out << "- [" << (c["pass"].get<bool>() ? "x" : " ") << "] " << c["name"].get<std::string>();
    if (!c["pass"].get<bool>()) out << " — " << c["witness"].get<std::string>();
    out << '\n';
  }
  return out.str();
}

int verify_all(unsigned n_max, const ReportOptions& opt, std::ostream& out) {
  bool all_pass = true;
  auto emit = [&](const std::string& scope, const std::string& name, bool pass,
                  const std::string& witness) {
    out << (pass ? "[PASS] " : "[FAIL] ") << scope << ' ' << name;
    if (!pass && !witness.empty()) out << " : " << witness;
    out << '\n';
    all_pass = all_pass && pass;
  };

  for (unsigned n = 1; n <= n_max; ++n) {
    const auto reps = partition_representatives(n);
    for (const auto& sigma : reps) {
      const std::string scope = "n=" + std::to_string(n) + " sigma=" + sigma.cycle_string();
      const Json report = run_report(sigma, opt);
      for (const auto& c : report["checks"])
        emit(scope, c["name"].get<std::string>(), c["pass"].get<bool>(),
             c["witness"].get<std::string>());
    }

    if (reps.size() < 2) continue;
    std::vector<unsigned> combined;
    for (const auto& sigma : reps)
      for (unsigned part : sigma.cycle_type()) combined.push_back(part);
    const PrimeField F = admissible_prime(combined).field;
    const std::string scope = "n=" + std::to_string(n) + " pairwise";
    try {
      bool classified = true;
      for (const auto& a : reps)
        for (const auto& b : reps) {
          const auto iso = isotope_isomorphism(a, b, F);
          if (iso.isomorphic != are_conjugate(a, b)) classified = false;
          commuting_isotopy_check(a, b, F);
        }
      emit(scope, "isomorphism_classification", classified, "");
      emit(scope, "commuting_isotopy", true, "");
    } catch (const std::exception& e) {
      emit(scope, "isomorphism_classification", false, e.what());
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace isotope
