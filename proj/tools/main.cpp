#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "isotope/autgroup.hpp"
#include "isotope/category.hpp"
#include "isotope/errors.hpp"
#include "isotope/intpoly.hpp"
#include "isotope/report.hpp"
#include "isotope/spectral.hpp"

namespace {

using isotope::Json;

struct GlobalArgs {
  std::string perm;
  std::string perm_cycles;
  std::string prime = "auto";
  std::uint64_t cap = isotope::kDefaultBruteCap;
  std::string format = "json";
  std::string out_path;
};

isotope::Permutation parse_perm(const GlobalArgs& args) {
  if (!args.perm.empty() && !args.perm_cycles.empty())
    throw isotope::invalid_input("give either --perm or --perm-cycles, not both");
  if (!args.perm.empty()) return isotope::Permutation::parse_images(args.perm);
  if (!args.perm_cycles.empty()) return isotope::Permutation::parse_cycles(args.perm_cycles);
  throw isotope::invalid_input("a permutation is required (--perm or --perm-cycles)");
}

void write_output(const GlobalArgs& args, const std::string& text) {
  if (args.out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(args.out_path);
  if (!out) throw isotope::invalid_input("cannot open output file '" + args.out_path + "'");
  out << text << '\n';
}

void emit_json(const GlobalArgs& args, const Json& j) { write_output(args, j.dump(2)); }

void add_perm_flags(CLI::App* cmd, GlobalArgs& args) {
  cmd->add_option("--perm", args.perm, "permutation as a 1-based image list, e.g. \"2 3 1\"");
  cmd->add_option("--perm-cycles", args.perm_cycles, "permutation in cycle notation, e.g. \"(1 2 3)\"");
  cmd->add_option("--prime", args.prime, "ground prime, or 'auto' for the smallest admissible one");
  cmd->add_option("--cap", args.cap, "bound on exhaustive scans");
  cmd->add_option("--format", args.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", args.out_path, "write output to a file instead of stdout");
}

Json idempotent_listing(const isotope::IdempotentTable& T, const isotope::Algebra& A) {
  Json idems = Json::array();
  for (const auto& c : T.idems()) {
    Json e;
    e["label"] = c.label;
    e["vector"] = Json::array();
    for (auto x : c.vec) e["vector"].push_back(x);
    e["regular"] = isotope::is_regular_idempotent(A, c.vec);
    idems.push_back(std::move(e));
  }
  return idems;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with inner isotopes of split commutative associative algebras"};
  app.require_subcommand(1);
  GlobalArgs args;

  auto* cmd_adm = app.add_subcommand("admissible-prime", "smallest admissible prime for a permutation");
  add_perm_flags(cmd_adm, args);

  auto* cmd_algebra = app.add_subcommand("algebra", "structure constants and identities of the isotope");
  std::string show = "sc";
  cmd_algebra->add_option("--show", show, "sc or identities")->check(CLI::IsMember({"sc", "identities"}));
  add_perm_flags(cmd_algebra, args);

  auto* cmd_idem = app.add_subcommand("idempotents", "idempotents of the isotope");
  std::string oracle = "formula";
  cmd_idem->add_option("--oracle", oracle, "formula, chain, or brute")
      ->check(CLI::IsMember({"formula", "chain", "brute"}));
  add_perm_flags(cmd_idem, args);

  auto* cmd_spectra = app.add_subcommand("spectra", "characteristic polynomials and eigenspaces per idempotent");
  add_perm_flags(cmd_spectra, args);

  auto* cmd_fusion = app.add_subcommand("fusion", "fusion rule of the eigenspace decomposition");
  add_perm_flags(cmd_fusion, args);

  auto* cmd_quasi = app.add_subcommand("quasigroup", "idempotent product table and its laws");
  add_perm_flags(cmd_quasi, args);

  auto* cmd_autos = app.add_subcommand("automorphisms", "automorphisms of the quasigroup and the algebra");
  bool quasigroup_bruteforce = false;
  cmd_autos->add_flag("--quasigroup-bruteforce", quasigroup_bruteforce,
                      "exhaustively scan all label bijections");
  add_perm_flags(cmd_autos, args);

  auto* cmd_regular = app.add_subcommand("regular", "regularity certificate for an integer n");
  unsigned reg_n = 0;
  bool with_resultants = false;
  cmd_regular->add_option("--n", reg_n, "the integer to certify")->required();
  cmd_regular->add_flag("--resultants", with_resultants, "attach resultants to the witnesses");
  cmd_regular->add_option("--out", args.out_path, "write output to a file instead of stdout");

  auto* cmd_category = app.add_subcommand("category-check", "calibrated associative/medial round trip");
  add_perm_flags(cmd_category, args);

  auto* cmd_report = app.add_subcommand("report", "full verification report for one permutation");
  add_perm_flags(cmd_report, args);

  auto* cmd_verify = app.add_subcommand("verify", "invariant suite over all cycle types up to a degree");
  unsigned n_max = 3;
  cmd_verify->add_option("--n-max", n_max, "largest degree to cover");
  cmd_verify->add_option("--cap", args.cap, "bound on exhaustive scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    isotope::ReportOptions opt;
    opt.prime = args.prime;
    opt.cap = args.cap;

    if (cmd_adm->parsed()) {
      const auto sigma = parse_perm(args);
      const auto adm = isotope::admissible_prime(sigma.cycle_type());
      Json j;
      j["sigma"] = sigma.to_string();
      j["cycle_type"] = sigma.cycle_type();
      j["splitting_orders"] = adm.splitting_orders;
      j["lcm"] = adm.modulus;
      j["prime"] = adm.field.p();
      Json roots = Json::array();
      for (auto t : adm.splitting_orders) {
        Json e;
        e["order"] = t;
        e["value"] = isotope::primitive_root_of_order(t, adm.field);
        roots.push_back(std::move(e));
      }
      j["roots"] = std::move(roots);
      emit_json(args, j);
    } else if (cmd_algebra->parsed()) {
      const auto sigma = parse_perm(args);
      const auto F = isotope::resolve_prime(sigma, args.prime);
      const auto A = isotope::isotope_of(sigma, F);
      Json j;
      j["sigma"] = sigma.to_string();
      j["prime"] = F.p();
      if (show == "sc") {
        Json cube = Json::array();
        for (unsigned i = 0; i < A.dim(); ++i) {
          Json plane = Json::array();
          for (unsigned jj = 0; jj < A.dim(); ++jj) {
            Json row = Json::array();
            for (unsigned k = 0; k < A.dim(); ++k) row.push_back(A.sc(i, jj, k));
            plane.push_back(std::move(row));
          }
          cube.push_back(std::move(plane));
        }
        j["structure_constants"] = std::move(cube);
      } else {
        const auto rep = isotope::check_identities(A);
        j["commutative"] = rep.commutative;
        j["associative"] = rep.associative;
        j["medial"] = rep.medial;
        j["unital"] = rep.unital;
        if (rep.associative_witness)
          j["associative_witness"] = {(*rep.associative_witness)[0], (*rep.associative_witness)[1],
                                      (*rep.associative_witness)[2]};
      }
      emit_json(args, j);
    } else if (cmd_idem->parsed()) {
      const auto sigma = parse_perm(args);
      const auto F = isotope::resolve_prime(sigma, args.prime);
      const auto A = isotope::isotope_of(sigma, F);
      Json j;
      j["sigma"] = sigma.to_string();
      j["prime"] = F.p();
      j["oracle"] = oracle;
      if (oracle == "formula") {
        const auto T = isotope::idempotents_formula(sigma, F);
        j["count"] = T.size();
        j["idempotents"] = idempotent_listing(T, A);
      } else {
        const auto vecs = oracle == "brute" ? isotope::idempotents_bruteforce(A, args.cap)
                                            : isotope::idempotents_chain(sigma, F);
        j["count"] = vecs.size();
        Json arr = Json::array();
        for (const auto& v : vecs) {
          Json e = Json::array();
          for (auto x : v) e.push_back(x);
          arr.push_back(std::move(e));
        }
        j["vectors"] = std::move(arr);
      }
      emit_json(args, j);
    } else if (cmd_spectra->parsed()) {
      const auto sigma = parse_perm(args);
      const auto F = isotope::resolve_prime(sigma, args.prime);
      const auto A = isotope::isotope_of(sigma, F);
      const auto T = isotope::idempotents_formula(sigma, F);
      Json arr = Json::array();
      for (const auto& c : T.idems()) {
        const auto dec = isotope::peirce(A, c.vec);
        Json e;
        e["label"] = c.label;
        e["char_poly"] = dec.charpoly;
        e["eigenvalues"] = dec.eigenvalues;
        Json dims = Json::array();
        for (const auto& basis : dec.eigenspaces) dims.push_back(basis.size());
        e["dims"] = std::move(dims);
        e["semisimple"] = dec.semisimple;
        arr.push_back(std::move(e));
      }
      Json j;
      j["sigma"] = sigma.to_string();
      j["prime"] = F.p();
      j["spectra"] = std::move(arr);
      emit_json(args, j);
    } else if (cmd_fusion->parsed() || cmd_quasi->parsed() || cmd_report->parsed() ||
               cmd_category->parsed()) {
      const auto sigma = parse_perm(args);
      const Json report = isotope::run_report(sigma, opt);
      if (cmd_report->parsed()) {
        write_output(args, args.format == "md" ? isotope::render_markdown(report) : report.dump(2));
      } else if (cmd_fusion->parsed()) {
        Json j;
        j["sigma"] = sigma.to_string();
        j["prime"] = report["prime"];
        j["fusion"] = report["fusion"];
        emit_json(args, j);
      } else if (cmd_quasi->parsed()) {
        Json j;
        j["sigma"] = sigma.to_string();
        j["prime"] = report["prime"];
        j["labels"] = Json::array();
        for (const auto& c : report["idempotents"]) j["labels"].push_back(c["label"]);
        j["table"] = report["quasigroup_table"];
        for (const auto& c : report["checks"])
          if (c["name"] == "table_laws" || c["name"] == "table_closed" ||
              c["name"] == "shift_law" || c["name"] == "latin_square")
            j[c["name"].get<std::string>()] = c["pass"];
        emit_json(args, j);
      } else {
        Json j;
        j["sigma"] = sigma.to_string();
        j["prime"] = report["prime"];
        Json arr = Json::array();
        for (const auto& c : report["checks"])
          if (c["name"] == "category_roundtrip" || c["name"] == "calibration_independence")
            arr.push_back(c);
        j["checks"] = std::move(arr);
        emit_json(args, j);
        for (const auto& c : arr)
          if (!c["pass"].get<bool>()) return 1;
      }
      if (cmd_report->parsed() && !report["all_pass"].get<bool>()) return 1;
    } else if (cmd_autos->parsed()) {
      const auto sigma = parse_perm(args);
      const auto F = isotope::resolve_prime(sigma, args.prime);
      const auto A = isotope::isotope_of(sigma, F);
      const auto T = isotope::idempotents_formula(sigma, F);
      Json j;
      j["sigma"] = sigma.to_string();
      j["prime"] = F.p();
      if (T.cycles().size() == 1 && sigma.degree() >= 2) {
        const std::uint64_t N = (1ULL << sigma.degree()) - 1;
        const auto group = isotope::algebra_autos(A, T);
        const auto structure = isotope::group_structure(group.affine);
        j["candidates"] = isotope::affine_autos(N).size();
        Json accepted = Json::array();
        for (std::size_t i = 0; i < group.affine.size(); ++i) {
          Json e;
          e["m"] = group.affine[i].m;
          e["k"] = group.affine[i].k;
          Json rows = Json::array();
          for (unsigned r = 0; r < group.maps[i].size(); ++r) {
            Json row = Json::array();
            for (unsigned c = 0; c < group.maps[i].size(); ++c) row.push_back(group.maps[i].at(r, c));
            rows.push_back(std::move(row));
          }
          e["matrix"] = std::move(rows);
          accepted.push_back(std::move(e));
        }
        j["accepted"] = std::move(accepted);
        j["order"] = group.maps.size();
        j["abelian"] = structure.abelian;
        j["relations_ok"] = structure.relations_ok;
        if (quasigroup_bruteforce)
          j["quasigroup_bruteforce_order"] = isotope::quasigroup_autos_bruteforce(N, args.cap).size();
      } else {
        const auto general = isotope::algebra_autos_general(A, T);
        j["order"] = general.size();
      }
      emit_json(args, j);
    } else if (cmd_regular->parsed()) {
      const auto cert = isotope::is_regular(reg_n, with_resultants);
      Json j;
      j["n"] = cert.n;
      j["modulus"] = cert.modulus;
      j["status"] = cert.regular;
      j["delta_set"] = cert.delta;
      Json tested = Json::array();
      for (const auto& w : cert.tested) {
        Json e;
        e["m"] = w.m;
        e["in_delta"] = w.in_delta;
        e["divides"] = w.divides;
        if (w.resultant_value) e["resultant"] = w.resultant_value->str();
        tested.push_back(std::move(e));
      }
      j["tested_m"] = std::move(tested);
      emit_json(args, j);
    } else if (cmd_verify->parsed()) {
      return isotope::verify_all(n_max, opt, std::cout);
    }
    return 0;
  } catch (const isotope::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const isotope::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const isotope::check_failure& e) {
    std::cerr << "property violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
