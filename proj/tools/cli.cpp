#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json_io.hpp"
#include "schur/errors.hpp"
#include "schur/parallel.hpp"

namespace schur {
namespace {

using io::json;

json read_document(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << j.dump(2) << "\n";
}

// Random unions of orbits of random subgroups, as closure seeds.
std::vector<ElementSet> random_seeds(const RingPtr& R, int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const auto subgroups = all_subgroups(UnitSubgroup::whole(R), 1u << 16);
  std::vector<ElementSet> out;
  for (int k = 0; k < count; ++k) {
    const auto& K = subgroups[rng() % subgroups.size()];
    ElementSet s(R->size());
    for (const auto& orbit : unit_orbit_partition(K)) {
      if (rng() % 3 == 0) {
        for (auto x : orbit) s.insert(x);
      }
    }
    if (s.empty()) s.insert(R->one());
    out.push_back(std::move(s));
  }
  return out;
}

struct Result {
  json body;
  int code = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur rings over CG-rings", "schur"};
  app.require_subcommand(1);
  std::string format = "compact";
  unsigned threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"compact", "pretty"}));
  app.add_option("--threads", threads, "Worker threads for verification scans (0 = all cores)");

  std::string spec, file, file2, out_path;
  std::vector<std::uint32_t> gens, primes;
  std::vector<std::string> sets, dual_args;
  std::uint64_t ideal = 1, max_size = 100000;
  int random_count = 0;
  std::uint32_t seed = 12345;
  std::size_t limit = 256;
  std::uint32_t p = 0, d = 0, q = 0, e = 0;

  auto* ring = app.add_subcommand("ring", "Ring information")->require_subcommand(1);
  auto* ring_info = ring->add_subcommand("info", "Orders, unit group and ideal lattice");
  ring_info->add_option("spec", spec, "Ring spec such as GR(4,2)xGR(9)")->required();

  auto* sring = app.add_subcommand("sring", "S-ring operations")->require_subcommand(1);
  auto* s_cyc = sring->add_subcommand("cyc", "Orbit S-ring of the group generated by --gens");
  s_cyc->add_option("spec", spec)->required();
  s_cyc->add_option("--gens", gens, "Unit generators")->delimiter(',');
  auto* s_closure = sring->add_subcommand("closure", "Coarsest S-ring with the given sets as A-sets");
  s_closure->add_option("spec", spec)->required();
  s_closure->add_option("--set", sets, "Comma-separated element indices; repeatable");
  s_closure->add_option("--random", random_count, "Number of random orbit-union seeds");
  s_closure->add_option("--seed", seed, "Random seed");
  auto* s_verify = sring->add_subcommand("verify", "Check the S-ring axioms");
  s_verify->add_option("file", file)->required();
  auto* s_quotient = sring->add_subcommand("quotient", "Image in R/mR");
  s_quotient->add_option("file", file)->required();
  s_quotient->add_option("--ideal", ideal, "Divisor m of the ideal mR")->required();
  auto* s_restrict = sring->add_subcommand("restrict", "Restriction to mR");
  s_restrict->add_option("file", file)->required();
  s_restrict->add_option("--ideal", ideal, "Divisor m of the ideal mR")->required();
  auto* s_tensor = sring->add_subcommand("tensor", "Tensor product");
  s_tensor->add_option("file", file)->required();
  s_tensor->add_option("file2", file2)->required();
  auto* s_wreath = sring->add_subcommand("wreath", "Generalized wreath certificates");
  s_wreath->add_option("file", file)->required();
  auto* s_pure = sring->add_subcommand("pure", "Purity, density and A-ideals");
  s_pure->add_option("file", file)->required();
  auto* s_rational = sring->add_subcommand("rational", "Invariance under the units of R_Q");
  s_rational->add_option("file", file)->required();
  s_rational->add_option("--primes", primes, "Prime set Q (default: all)")->delimiter(',');

  auto* dual = app.add_subcommand("dual", "Dual S-ring, or `dual check FILE` for the duality report");
  dual->add_option("args", dual_args)->required()->expected(1, 2);

  auto* construct = app.add_subcommand("construct", "Constructions")->require_subcommand(1);
  auto* t210809a = construct->add_subcommand("t210809a", "Non-pure dense S-ring over GR(p^2,d) x GR(q^2,e)");
  t210809a->add_option("--p", p)->required();
  t210809a->add_option("--d", d)->required();
  t210809a->add_option("--q", q)->required();
  t210809a->add_option("--e", e)->required();
  t210809a->add_option("--out", out_path, "Write the S-ring document here");
  t210809a->add_option("--max-size", max_size, "Largest accepted ring order");

  auto* classify = app.add_subcommand("classify", "Decompositions")->require_subcommand(1);
  auto* c_pure = classify->add_subcommand("pure", "Pure tensor decomposition (odd characteristic)");
  c_pure->add_option("file", file)->required();
  auto* c_rational = classify->add_subcommand("rational", "Rational S-ring classification");
  c_rational->add_option("file", file)->required();
  auto* c_nondense = classify->add_subcommand("nondense", "Structure when a maximal ideal is not an A-ideal");
  c_nondense->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerations")->require_subcommand(1);
  auto* e_subgroups = enumerate->add_subcommand("subgroups", "All unit subgroups");
  e_subgroups->add_option("spec", spec)->required();
  e_subgroups->add_option("--limit", limit, "Largest unit group order accepted");
  auto* e_cyc = enumerate->add_subcommand("cyc", "All cyclotomic S-rings");
  e_cyc->add_option("spec", spec)->required();
  e_cyc->add_option("--limit", limit, "Largest unit group order accepted");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n";
    return 2;
  }

  set_default_threads(threads);
  Result r;
  try {
    if (*ring_info) {
      r.body = io::ring_info(*CGRing::parse(spec));
    } else if (*s_cyc) {
      const auto R = CGRing::parse(spec);
      r.body = io::sring_json(cyclotomic(UnitSubgroup::generated(R, gens)));
    } else if (*s_closure) {
      const auto R = CGRing::parse(spec);
      std::vector<ElementSet> seeds;
      for (const auto& s : sets) {
        ElementSet X(R->size());
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          std::uint32_t x = 0;
          try {
            x = static_cast<std::uint32_t>(std::stoul(tok));
          } catch (const std::exception&) {
            throw ParseError("bad element index '" + tok + "'");
          }
          if (x >= R->size()) throw InvalidArgument("element " + tok + " is outside " + R->spec());
          X.insert(x);
        }
        seeds.push_back(std::move(X));
      }
      for (auto& s : random_seeds(R, random_count, seed)) seeds.push_back(std::move(s));
      r.body = io::sring_json(schur_closure(R, seeds));
    } else if (*s_verify) {
      const auto doc = read_document(file);
      const auto R = io::ring_from_json(doc);
      Partition classes;
      try {
        classes = doc.at("classes").get<Partition>();
      } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed classes: ") + ex.what());
      }
      const auto report = verify_sring(R, classes);
      r.body = io::verify_json(report);
      r.code = report.ok ? 0 : 1;
    } else if (*s_quotient) {
      r.body = io::sring_json(quotient_sring(io::sring_from_json(read_document(file)), Ideal{ideal}));
    } else if (*s_restrict) {
      r.body = io::sring_json(restrict_to(io::sring_from_json(read_document(file)), Ideal{ideal}));
    } else if (*s_tensor) {
      r.body = io::sring_json(
          tensor(io::sring_from_json(read_document(file)), io::sring_from_json(read_document(file2))));
    } else if (*s_wreath) {
      r.body = io::wreath_json(io::sring_from_json(read_document(file)));
    } else if (*s_pure) {
      const auto A = io::sring_from_json(read_document(file));
      json ideals = json::array();
      for (auto I : a_ideals(A)) ideals.push_back(I.m);
      r.body = {{"pure", is_pure(A)}, {"IL_of", IL_of(A).m}, {"dense", is_dense(A)}, {"a_ideals", ideals}};
    } else if (*s_rational) {
      const auto A = io::sring_from_json(read_document(file));
      const PrimeSet Q = primes.empty() ? A.ring()->prime_set() : PrimeSet(primes.begin(), primes.end());
      r.body = {{"primes", Q}, {"rational", is_rational(A, Q)}};
    } else if (*dual) {
      const bool check = dual_args.size() == 2;
      if (check && dual_args[0] != "check") throw InvalidArgument("usage: dual [check] FILE");
      const auto A = io::sring_from_json(read_document(dual_args.back()));
      if (check) {
        const auto report = check_duality_theorems(A);
        r.body = io::duality_json(report);
        r.code = report.ok ? 0 : 1;
      } else {
        r.body = io::sring_json(dual_sring(A));
      }
    } else if (*t210809a) {
      const auto c = build_theorem_210809a(p, d, q, e, false, 0, max_size);
      r.body = io::construction_json(c);
      r.code = c.ok() ? 0 : 1;
      if (!out_path.empty()) write_file(out_path, io::sring_json(c.sring));
    } else if (*c_pure) {
      const auto A = io::sring_from_json(read_document(file));
      r.body = io::decomposition_json(decompose_pure(A), *A.ring());
    } else if (*c_rational) {
      const auto A = io::sring_from_json(read_document(file));
      r.body = io::decomposition_json(classify_rational(A), *A.ring());
    } else if (*c_nondense) {
      const auto report = check_nondense_structure(io::sring_from_json(read_document(file)));
      r.body = io::nondense_json(report);
      r.code = report.ok ? 0 : 1;
    } else if (*e_subgroups || *e_cyc) {
      const auto R = CGRing::parse(spec);
      json list = json::array();
      for (const auto& K : all_subgroups(UnitSubgroup::whole(R), limit)) {
        if (*e_subgroups) {
          list.push_back(io::subgroup_json(K));
        } else {
          const auto A = cyclotomic(K);
          list.push_back({{"group_order", K.order()},
                          {"generators", K.generators()},
                          {"rank", A.rank()},
                          {"dense", is_dense(A)},
                          {"pure", is_pure(A)},
                          {"nontrivial_wreath", is_nontrivial_wreath(A)}});
        }
      }
      r.body = {{"ring", R->spec()}, {"count", list.size()}, {*e_subgroups ? "subgroups" : "srings", list}};
    }
  } catch (const Falsification& ex) {
    err << "falsification: " << ex.what() << "\n";
    return 1;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const json::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  out << (format == "pretty" ? r.body.dump(2) : r.body.dump()) << "\n";
  return r.code;
}

}  // namespace schur
