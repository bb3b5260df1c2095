#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schur/cgring.hpp"
#include "schur/sring.hpp"

namespace schur {

UnitSubgroup subgroup_generated(const RingPtr& ring, std::span<const std::uint32_t> generators);

// Every subgroup of G, ordered by size then members. Throws
// SizeLimitExceeded if |G| exceeds the limit.
std::vector<UnitSubgroup> all_subgroups(const UnitSubgroup& G, std::size_t limit = 256);

// {u v : u in left, v in right}; throws InvalidArgument unless the groups
// intersect trivially.
UnitSubgroup direct_product(const UnitSubgroup& left, const UnitSubgroup& right);

struct SubdirectSpec {
  UnitSubgroup left;
  UnitSubgroup right;
  // order of the cyclic target group L0
  std::uint32_t order = 1;
  // homomorphisms to Z_order
  std::function<std::uint32_t(std::uint32_t)> f_left;
  std::function<std::uint32_t(std::uint32_t)> f_right;
};

// {u v : f_left(u) = f_right(v)}. Throws InvalidArgument if a map is not
// onto, the groups meet nontrivially, or the result is not a group.
UnitSubgroup subdirect(const SubdirectSpec& spec);

struct ConstructionCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// The non-pure dense S-ring over GR(p^2,d) x GR(q^2,e) with unit classes the
// K_1-orbits and non-unit classes the K_2-orbits.
struct Construction {
  std::uint32_t p = 0, d = 0, q = 0, e = 0;
  RingPtr ring;
  UnitSubgroup T_p, T_q;
  // principal-unit groups and their splittings into a cyclic factor and a
  // complement
  UnitSubgroup principal_p, principal_q, U_p, U_p_prime, U_q, U_q_prime;
  UnitSubgroup L_1, L_2, K, K_1, K_2;
  SRing sring;
  std::vector<ConstructionCheck> checks;

  bool ok() const;
};

// Throws InvalidArgument unless p != q are primes with p | q^e - 1 and
// q | p^d - 1, SizeLimitExceeded if p^{2d} q^{2e} exceeds max_size, and
// Falsification if strict and any check fails.
Construction build_theorem_210809a(std::uint32_t p, std::uint32_t d, std::uint32_t q, std::uint32_t e,
                                   bool strict = true, unsigned threads = 0, std::uint64_t max_size = 100000);

}  // namespace schur
