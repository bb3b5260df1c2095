#include "json_io.hpp"

#include "schur/errors.hpp"

namespace schur::io {

json ring_json(const CGRing& R) {
  json moduli = json::array();
  for (const auto& c : R.components()) moduli.push_back(c.modulus());
  return {{"ring", R.spec()}, {"moduli", moduli}};
}

RingPtr ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string()) {
    throw ParseError("document needs a string field \"ring\"");
  }
  const auto R = CGRing::parse(j["ring"].get<std::string>());
  if (j.contains("moduli")) {
    std::vector<std::vector<std::uint32_t>> moduli;
    try {
      moduli = j["moduli"].get<std::vector<std::vector<std::uint32_t>>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed moduli: ") + e.what());
    }
    if (moduli.size() != R->components().size()) throw ParseError("moduli do not match the ring components");
    for (std::size_t k = 0; k < moduli.size(); ++k) {
      if (moduli[k] != R->components()[k].modulus()) {
        throw ParseError("modulus of component " + R->components()[k].spec() + " differs from the one in use");
      }
    }
  }
  return R;
}

json ideal_json(const CGRing& R, Ideal I) {
  return {{"m", I.m}, {"size", R.ideal_size(I)}, {"characteristic", R.ideal_characteristic(I)}};
}

json set_json(const ElementSet& X) { return X.indices(); }

json ring_info(const CGRing& R) {
  json j = ring_json(R);
  j["order"] = R.size();
  j["characteristic"] = R.characteristic();
  j["unit_count"] = R.units().size();
  json comps = json::array();
  for (const auto& c : R.components()) {
    comps.push_back({{"spec", c.spec()},
                     {"p", c.p()},
                     {"n", c.n()},
                     {"d", c.d()},
                     {"order", c.order()},
                     {"units", c.unit_count()},
                     {"teichmuller_order", c.teichmuller_group().size()},
                     {"principal_unit_order", c.principal_units().size()}});
  }
  j["components"] = comps;
  json ideals = json::array();
  for (auto I : R.ideals()) ideals.push_back(ideal_json(R, I));
  j["ideals"] = ideals;
  json maximal = json::array(), minimal = json::array();
  for (auto I : R.maximal_ideals()) maximal.push_back(I.m);
  for (auto I : R.minimal_ideals()) minimal.push_back(I.m);
  j["maximal_ideals"] = maximal;
  j["minimal_ideals"] = minimal;
  j["unit_generators"] = R.unit_generators();
  return j;
}

json sring_json(const SRing& A) {
  json j = ring_json(*A.ring());
  j["rank"] = A.rank();
  j["classes"] = A.classes();
  return j;
}

SRing sring_from_json(const json& j) {
  const auto R = ring_from_json(j);
  if (!j.contains("classes")) throw ParseError("S-ring document needs \"classes\"");
  Partition classes;
  try {
    classes = j["classes"].get<Partition>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed classes: ") + e.what());
  }
  return SRing::from_partition(R, std::move(classes));
}

json verify_json(const VerifyReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return {{"ok", report.ok}, {"violations", violations}};
}

json wreath_json(const SRing& A) {
  json certs = json::array();
  bool nontrivial = false;
  for (const auto& c : wreath_pairs(A)) {
    certs.push_back({{"I", c.I.m}, {"J", c.J.m}, {"nontrivial", c.nontrivial}});
    nontrivial = nontrivial || c.nontrivial;
  }
  return {{"certificates", certs}, {"nontrivial_wreath", nontrivial}};
}

json subgroup_json(const UnitSubgroup& K) {
  return {{"order", K.order()}, {"generators", K.generators()}, {"members", K.members()},
          {"pure", K.ring()->is_pure(K.set())}};
}

json decomposition_json(const Decomposition& D, const CGRing& R) {
  json j = {{"ring", R.spec()}, {"kind", to_string(D.kind)}};
  if (!D.reason.empty()) j["reason"] = D.reason;
  json factors = json::array();
  for (const auto& f : D.factors) {
    json fj = sring_json(f.sring);
    fj["primes"] = f.primes;
    fj["role"] = to_string(f.role);
    factors.push_back(fj);
  }
  j["factors"] = factors;
  if (D.wreath) j["wreath"] = {{"I", D.wreath->I.m}, {"J", D.wreath->J.m}, {"nontrivial", D.wreath->nontrivial}};
  if (D.cyclotomic_group) j["cyclotomic_group"] = subgroup_json(*D.cyclotomic_group);
  return j;
}

json nondense_json(const NondenseReport& report) {
  json j = {{"applicable", report.applicable}, {"ok", report.ok},      {"branch", report.branch},
            {"pure", report.pure},             {"failures", report.failures}};
  if (report.wreath) j["wreath"] = {{"I", report.wreath->I.m}, {"J", report.wreath->J.m}};
  if (report.rank2_primes) j["rank2_primes"] = *report.rank2_primes;
  if (report.pure_indecomposable) {
    j["equivalence"] = {{"pure_indecomposable", *report.pure_indecomposable},
                        {"dual_pure_indecomposable", *report.dual_pure_indecomposable},
                        {"maximal_ideals_match", *report.max_ideals_match},
                        {"minimal_ideals_match", *report.min_ideals_match}};
  }
  return j;
}

json duality_json(const DualityReport& report) { return {{"ok", report.ok}, {"failures", report.failures}}; }

json construction_json(const Construction& c) {
  json groups;
  auto group = [&](const char* name, const UnitSubgroup& K) {
    groups[name] = {{"order", K.order()}, {"members", K.members()}};
  };
  group("T_p", c.T_p);
  group("T_q", c.T_q);
  group("U_p", c.U_p);
  group("U_p_prime", c.U_p_prime);
  group("U_q", c.U_q);
  group("U_q_prime", c.U_q_prime);
  group("L_1", c.L_1);
  group("L_2", c.L_2);
  group("K", c.K);
  group("K_1", c.K_1);
  group("K_2", c.K_2);
  json checks = json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
  bool nontrivial = false;
  for (const auto& cert : wreath_pairs(c.sring)) nontrivial = nontrivial || cert.nontrivial;
  json j = ring_json(*c.ring);
  j["parameters"] = {{"p", c.p}, {"d", c.d}, {"q", c.q}, {"e", c.e}};
  j["order"] = c.ring->size();
  j["ok"] = c.ok();
  j["rank"] = c.sring.rank();
  j["dense"] = is_dense(c.sring);
  j["pure"] = is_pure(c.sring);
  j["IL_of"] = IL_of(c.sring).m;
  j["nontrivial_wreath"] = nontrivial;
  j["groups"] = groups;
  j["checks"] = checks;
  return j;
}

}  // namespace schur::io
