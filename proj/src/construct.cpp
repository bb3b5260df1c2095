#include "schur/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "schur/errors.hpp"

namespace schur {
namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw InvalidArgument(std::to_string(a) + " is not invertible mod " + std::to_string(p));
}

// Structure of one component GR(l^2, delta): the order-`order` subgroup of
// the Teichmueller group with discrete logs, and a linear functional on the
// principal units 1 + lR, viewed as a vector space over GF(l).
struct ComponentData {
  const GaloisRing* ring = nullptr;
  std::uint32_t l = 0;
  std::vector<std::uint32_t> T;
  std::map<std::uint32_t, std::uint32_t> log;
  std::vector<std::uint32_t> principal;
  std::uint32_t g = 0;
  std::uint32_t coord = 0;
  std::uint32_t scale = 1;

  // (u - 1)/l mod l, coefficientwise
  std::vector<std::uint32_t> vec(std::uint32_t u) const {
    auto a = ring->element(ring->add(u, ring->neg(1u)));
    std::vector<std::uint32_t> v;
    for (auto c : a.coeffs) v.push_back((c / l) % l);
    return v;
  }

  std::uint32_t lambda(std::uint32_t u) const { return vec(u)[coord] * scale % l; }

  std::uint32_t teich(std::uint32_t a) const { return ring->teichmuller(a); }
  std::uint32_t prin(std::uint32_t a) const { return ring->mul(a, ring->inv(teich(a))); }
};

ComponentData analyse(const GaloisRing& ring, std::uint32_t order) {
  ComponentData c;
  c.ring = &ring;
  c.l = ring.p();
  std::uint32_t tau = 0;
  for (auto t : ring.teichmuller_group()) {
    if (t != 1 && ring.pow(t, order) == 1) {
      tau = t;
      break;
    }
  }
  if (tau == 0) throw Falsification("Teichmueller group of " + ring.spec() + " has no element of order " + std::to_string(order));
  std::uint32_t t = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    c.T.push_back(t);
    c.log[t] = i;
    t = ring.mul(t, tau);
  }
  c.principal = ring.principal_units();
  for (auto u : c.principal) {
    if (u != 1) {
      c.g = u;
      break;
    }
  }
  const auto v = c.vec(c.g);
  while (v[c.coord] == 0) ++c.coord;
  c.scale = inverse_mod(v[c.coord], c.l);
  return c;
}

std::string count_detail(std::uint64_t got, std::uint64_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

// Orbit partition of K restricted to the set X, which must be K-invariant.
Partition orbits_on(const UnitSubgroup& K, const ElementSet& X) {
  Partition out;
  ElementSet seen(X.universe());
  X.for_each([&](std::uint32_t x) {
    if (seen.contains(x)) return;
    const auto o = K.orbit(x);
    seen |= o;
    out.push_back(o.indices());
  });
  return canonical_partition(std::move(out));
}

}  // namespace

UnitSubgroup subgroup_generated(const RingPtr& ring, std::span<const std::uint32_t> generators) {
  return UnitSubgroup::generated(ring, generators);
}

std::vector<UnitSubgroup> all_subgroups(const UnitSubgroup& G, std::size_t limit) {
  if (G.order() > limit) {
    throw SizeLimitExceeded("group of order " + std::to_string(G.order()) + " exceeds the subgroup enumeration limit " +
                            std::to_string(limit));
  }
  const auto& R = G.ring();
  // distinct cyclic subgroups, then closure under products
  std::vector<UnitSubgroup> cyclic;
  std::set<std::vector<std::uint32_t>> seen_cyclic;
  for (auto g : G.members()) {
    auto C = UnitSubgroup::generated(R, std::vector<std::uint32_t>{g});
    if (seen_cyclic.insert(C.members()).second) cyclic.push_back(std::move(C));
  }
  std::vector<UnitSubgroup> found{UnitSubgroup::trivial(R)};
  std::set<std::vector<std::uint32_t>> seen{found[0].members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& C : cyclic) {
      if (C.set().is_subset_of(found[i].set())) continue;
      ElementSet s(R->size());
      for (auto a : found[i].members()) {
        for (auto b : C.members()) s.insert(R->mul(a, b));
      }
      auto members = s.indices();
      if (seen.insert(members).second) found.push_back(UnitSubgroup::from_members(R, members));
    }
  }
  std::sort(found.begin(), found.end(), [](const UnitSubgroup& a, const UnitSubgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
  });
  return found;
}

UnitSubgroup direct_product(const UnitSubgroup& left, const UnitSubgroup& right) {
  if (left.set().intersects(right.set()) && (left.set() & right.set()).size() > 1) {
    throw InvalidArgument("direct product of groups with nontrivial intersection");
  }
  const auto& R = left.ring();
  ElementSet s(R->size());
  for (auto a : left.members()) {
    for (auto b : right.members()) s.insert(R->mul(a, b));
  }
  return UnitSubgroup::from_members(R, s.indices());
}

UnitSubgroup subdirect(const SubdirectSpec& spec) {
  if ((spec.left.set() & spec.right.set()).size() > 1) {
    throw InvalidArgument("subdirect product of groups with nontrivial intersection");
  }
  std::set<std::uint32_t> image_left, image_right;
  for (auto u : spec.left.members()) image_left.insert(spec.f_left(u) % spec.order);
  for (auto v : spec.right.members()) image_right.insert(spec.f_right(v) % spec.order);
  if (image_left.size() != spec.order || image_right.size() != spec.order) {
    throw InvalidArgument("subdirect product needs epimorphisms onto the cyclic group of order " +
                          std::to_string(spec.order));
  }
  const auto& R = spec.left.ring();
  std::vector<std::uint32_t> members;
  for (auto u : spec.left.members()) {
    for (auto v : spec.right.members()) {
      if (spec.f_left(u) % spec.order == spec.f_right(v) % spec.order) members.push_back(R->mul(u, v));
    }
  }
  return UnitSubgroup::from_members(R, members);
}

bool Construction::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConstructionCheck& c) { return c.ok; });
}

Construction build_theorem_210809a(std::uint32_t p, std::uint32_t d, std::uint32_t q, std::uint32_t e, bool strict,
                                   unsigned threads, std::uint64_t max_size) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw InvalidArgument("p and q must be distinct primes");
  if (d == 0 || e == 0) throw InvalidArgument("d and e must be positive");
  if ((ipow(q, e) - 1) % p != 0) {
    throw InvalidArgument(std::to_string(p) + " does not divide " + std::to_string(q) + "^" + std::to_string(e) + " - 1");
  }
  if ((ipow(p, d) - 1) % q != 0) {
    throw InvalidArgument(std::to_string(q) + " does not divide " + std::to_string(p) + "^" + std::to_string(d) + " - 1");
  }
  const std::uint64_t size = ipow(p, 2 * d) * ipow(q, 2 * e);
  if (size > max_size) {
    throw SizeLimitExceeded("ring of order " + std::to_string(size) + " exceeds the construction limit " +
                            std::to_string(max_size));
  }

  const auto R = CGRing::make({GaloisRing::make(p, 2, d), GaloisRing::make(q, 2, e)});
  const auto P = analyse(R->components()[0], q);
  const auto Q = analyse(R->components()[1], p);
  auto at_p = [&](std::uint32_t a) { return R->compose(std::vector<std::uint32_t>{a, 1}); };
  auto at_q = [&](std::uint32_t b) { return R->compose(std::vector<std::uint32_t>{1, b}); };
  auto group = [&](const std::vector<std::uint32_t>& xs) { return UnitSubgroup::from_members(R, xs); };

  std::vector<std::uint32_t> tp, tq, up_all, uq_all, up_prime, uq_prime;
  for (auto t : P.T) tp.push_back(at_p(t));
  for (auto t : Q.T) tq.push_back(at_q(t));
  for (auto u : P.principal) {
    up_all.push_back(at_p(u));
    if (P.lambda(u) == 0) up_prime.push_back(at_p(u));
  }
  for (auto u : Q.principal) {
    uq_all.push_back(at_q(u));
    if (Q.lambda(u) == 0) uq_prime.push_back(at_q(u));
  }
  const auto T_p = group(tp), T_q = group(tq);
  const auto principal_p = group(up_all), principal_q = group(uq_all);
  const auto U_p = subgroup_generated(R, std::vector<std::uint32_t>{at_p(P.g)});
  const auto U_q = subgroup_generated(R, std::vector<std::uint32_t>{at_q(Q.g)});
  const auto U_p_prime = group(up_prime), U_q_prime = group(uq_prime);

  // K = (T_p U_p) x (T_q U_q); K_1 and K_2 are the fibre products over Z_q
  // and Z_p.
  std::vector<std::uint32_t> k_all, k1, k2;
  for (auto tp_el : P.T) {
    for (auto up_el : P.principal) {
      const auto a = R->components()[0].mul(tp_el, up_el);
      for (auto tq_el : Q.T) {
        for (auto uq_el : Q.principal) {
          const auto b = R->components()[1].mul(tq_el, uq_el);
          const auto x = R->compose(std::vector<std::uint32_t>{a, b});
          k_all.push_back(x);
          if (P.log.at(P.teich(a)) == Q.lambda(Q.prin(b))) k1.push_back(x);
          if (P.lambda(P.prin(a)) == Q.log.at(Q.teich(b))) k2.push_back(x);
        }
      }
    }
  }
  const auto K = group(k_all), K_1 = group(k1), K_2 = group(k2);

  auto log_p = [&](std::uint32_t x) { return P.log.at(R->part(x, 0)); };
  auto log_q = [&](std::uint32_t x) { return Q.log.at(R->part(x, 1)); };
  auto lambda_p = [&](std::uint32_t x) { return P.lambda(R->part(x, 0)); };
  auto lambda_q = [&](std::uint32_t x) { return Q.lambda(R->part(x, 1)); };
  const auto L_1 = subdirect({T_p, U_q, q, log_p, lambda_q});
  const auto L_2 = subdirect({U_p, T_q, p, lambda_p, log_q});

  Partition classes;
  {
    const auto units = unit_orbit_partition(K_1);
    const auto nonunits = unit_orbit_partition(K_2);
    for (const auto& b : units) {
      if (R->is_unit(b[0])) classes.push_back(b);
    }
    for (const auto& b : nonunits) {
      if (!R->is_unit(b[0])) classes.push_back(b);
    }
  }
  auto A = SRing::from_partition(R, std::move(classes));

  Construction c{p,           d,         q,   e,   R,   T_p, T_q, principal_p, principal_q, U_p, U_p_prime,
                 U_q,         U_q_prime, L_1, L_2, K,   K_1, K_2, A,           {}};
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    c.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("|T_p| = q", T_p.order() == q, count_detail(T_p.order(), q));
  check("|T_q| = p", T_q.order() == p, count_detail(T_q.order(), p));
  check("|K| = p^d q^e pq", K.order() == ipow(p, d) * ipow(q, e) * p * q,
        count_detail(K.order(), ipow(p, d) * ipow(q, e) * p * q));
  check("|K_1| = p^(d+1) q^e", K_1.order() == ipow(p, d + 1) * ipow(q, e),
        count_detail(K_1.order(), ipow(p, d + 1) * ipow(q, e)));
  check("|K_2| = p^d q^(e+1)", K_2.order() == ipow(p, d) * ipow(q, e + 1),
        count_detail(K_2.order(), ipow(p, d) * ipow(q, e + 1)));
  check("|L_1| = q", L_1.order() == q, count_detail(L_1.order(), q));
  check("|L_2| = p", L_2.order() == p, count_detail(L_2.order(), p));
  check("U_p x U'_p is the principal units of R_p",
        U_p.order() == p && direct_product(U_p, U_p_prime) == principal_p);
  check("U_q x U'_q is the principal units of R_q",
        U_q.order() == q && direct_product(U_q, U_q_prime) == principal_q);
  {
    const auto lemma1 = direct_product(direct_product(principal_p, direct_product(T_q, U_q_prime)), L_1);
    const auto lemma2 = direct_product(direct_product(direct_product(T_p, U_p_prime), principal_q), L_2);
    check("K_1 = (U_p x T_q U'_q) L_1", lemma1 == K_1);
    check("K_2 = (T_p U'_p x U_q) L_2", lemma2 == K_2);
  }
  const Ideal pRp{std::uint64_t{p} * q * q};
  const Ideal qRq{std::uint64_t{p} * p * q};
  check("IL(K_1) = pR_p", R->IL(K_1.set()) == pRp, std::to_string(R->IL(K_1.set()).m) + "R");
  check("IL(K_2) = qR_q", R->IL(K_2.set()) == qRq, std::to_string(R->IL(K_2.set()).m) + "R");
  {
    ElementSet prod(R->size());
    for (auto a : K_1.members()) {
      for (auto b : K_2.members()) prod.insert(R->mul(a, b));
    }
    check("K_1 K_2 = K", prod == K.set());
    const auto meet = (K_1.set() & K_2.set()).size();
    const auto expected = U_p_prime.order() * U_q_prime.order() * L_1.order() * L_2.order();
    check("|K_1 cap K_2| = |U'_p||U'_q||L_1||L_2|", meet == expected && meet == ipow(p, d) * ipow(q, e),
          count_detail(meet, expected));
  }
  {
    bool eq_a = true, eq_b = true;
    std::string where;
    for (std::uint32_t i = 0; i <= 2; ++i) {
      for (std::uint32_t j = 0; j <= 2; ++j) {
        const auto m = ipow(p, i) * ipow(q, j);
        ElementSet X(R->size());
        for (auto u : R->units()) X.insert(R->scale(u, m));
        const auto ok = orbits_on(K, X);
        if (i + j >= 2) {
          if (ok != orbits_on(K_1, X) || ok != orbits_on(K_2, X)) {
            eq_a = false;
            where += " " + std::to_string(m) + "R^x";
          }
        } else if (i == 0 && j == 1) {
          eq_b = eq_b && ok == orbits_on(K_1, X);
        } else if (i == 1 && j == 0) {
          eq_b = eq_b && ok == orbits_on(K_2, X);
        }
      }
    }
    check("orbits of K, K_1, K_2 agree on p^i q^j R^x for i + j >= 2", eq_a, where);
    check("orb(K, qR^x) = orb(K_1, qR^x) and orb(K, pR^x) = orb(K_2, pR^x)", eq_b);
  }

  const auto report = verify_sring(R, A.classes(), threads);
  check("S-ring axioms", report.ok, report.ok ? "" : report.violations.front().axiom + ": " + report.violations.front().witness);
  check("dense", is_dense(A), std::to_string(a_ideals(A).size()) + " of " + std::to_string(R->ideals().size()) + " ideals");
  const auto il = IL_of(A);
  check("IL_of = pR_p, so not pure", il == pRp && !is_pure(A), std::to_string(il.m) + "R");
  {
    std::string nontrivial;
    for (const auto& cert : wreath_pairs(A)) {
      if (cert.nontrivial) nontrivial += " (" + std::to_string(cert.I.m) + "R, " + std::to_string(cert.J.m) + "R)";
    }
    check("no nontrivial wreath certificate", nontrivial.empty(), nontrivial);
  }

  if (strict && !c.ok()) {
    std::string failed;
    for (const auto& ch : c.checks) {
      if (!ch.ok) failed += "\n  " + ch.name + (ch.detail.empty() ? "" : ": " + ch.detail);
    }
    throw Falsification("construction checks failed:" + failed);
  }
  return c;
}

}  // namespace schur
