#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schur/element_set.hpp"
#include "schur/galois.hpp"

namespace schur {

class CGRing;
using RingPtr = std::shared_ptr<const CGRing>;

// Sorted set of primes, a subset of P(R).
using PrimeSet = std::vector<std::uint32_t>;

// Ordered list of disjoint element-index sets.
using Partition = std::vector<std::vector<std::uint32_t>>;

// The ideal mR, m a positive divisor of the characteristic.
struct Ideal {
  std::uint64_t m = 1;

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

struct Quotient;
struct IdealRing;

// Finite product of Galois rings with pairwise distinct residue primes.
//
// Elements are addressed by a mixed-radix index: component k contributes its
// own index times the product of the orders of components 0..k-1.
class CGRing {
 public:
  // Throws InvalidArgument on an empty list or a repeated prime.
  static RingPtr make(std::vector<GaloisRing> components);
  // The ring with one element.
  static RingPtr trivial();
  // Parses "GR(4,2)xGR(9)"; "GR(p^n,d)" with "^1" and ",1" optional.
  static RingPtr parse(std::string_view spec, std::uint64_t max_order = default_max_ring_order());

  const std::vector<GaloisRing>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }
  std::uint32_t size() const { return size_; }
  std::uint64_t characteristic() const { return characteristic_; }
  // Primes in component order.
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  PrimeSet prime_set() const;
  std::optional<std::size_t> component_of(std::uint32_t p) const;
  bool is_odd() const { return characteristic_ % 2 == 1; }
  std::string spec() const;

  std::uint32_t stride(std::size_t k) const { return strides_[k]; }
  std::uint32_t part(std::uint32_t x, std::size_t k) const {
    return (x / strides_[k]) % components_[k].order();
  }
  std::uint32_t compose(std::span<const std::uint32_t> parts) const;
  // Element whose component k is `value` and whose other components are 1.
  std::uint32_t embed_unit(std::size_t k, std::uint32_t value) const;

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t scale(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  bool is_unit(std::uint32_t a) const { return unit_set_.contains(a); }
  // Throws NotAUnit.
  std::uint32_t inv(std::uint32_t a) const;

  const std::vector<std::uint32_t>& units() const { return units_; }
  const ElementSet& unit_set() const { return unit_set_; }
  // Greedy generating set of the unit group (least indices first).
  const std::vector<std::uint32_t>& unit_generators() const { return unit_generators_; }

  // --- ideal lattice ---
  std::vector<Ideal> ideals() const;  // ascending m, so R first and 0 last
  Ideal whole() const { return {1}; }
  Ideal zero_ideal() const { return {characteristic_}; }
  bool is_ideal(Ideal I) const { return I.m > 0 && characteristic_ % I.m == 0; }
  // Exponent k with I_p = p^k R_p, per component.
  std::vector<std::uint32_t> exponents(Ideal I) const;
  Ideal from_exponents(std::span<const std::uint32_t> k) const;
  bool contains(Ideal I, std::uint32_t x) const;
  // J is a subset of I.
  bool includes(Ideal I, Ideal J) const { return J.m % I.m == 0; }
  ElementSet elements(Ideal I) const;
  std::uint32_t ideal_size(Ideal I) const;
  Ideal sum(Ideal I, Ideal J) const;
  Ideal intersection(Ideal I, Ideal J) const;
  // (mR)^perp = (c/m)R under r -> chi^(r).
  Ideal perp(Ideal I) const { return {characteristic_ / I.m}; }
  std::vector<Ideal> maximal_ideals() const;
  std::vector<Ideal> minimal_ideals() const;
  // Sum of the minimal ideals of the components.
  Ideal I0() const;
  // R_Q as an ideal: elements vanishing outside Q.
  Ideal component_ideal(const PrimeSet& Q) const;
  // Characteristic of the additive group of I.
  std::uint64_t ideal_characteristic(Ideal I) const { return characteristic_ / I.m; }

  // Largest ideal I with X + I = X. Throws EmptySet.
  Ideal IL(const ElementSet& X) const;
  // Smallest ideal containing X. Throws EmptySet.
  Ideal IU(const ElementSet& X) const;
  // {r : rX = 0}; R for the empty set.
  Ideal annihilator(const ElementSet& X) const;
  bool is_pure(const ElementSet& X) const { return IL(X) == zero_ideal(); }

  // Componentwise projection onto R_Q (other components set to 0).
  std::uint32_t project(std::uint32_t x, const PrimeSet& Q) const;
  ElementSet project(const ElementSet& X, const PrimeSet& Q) const;

  // Ring made of the components in Q, in declared order.
  RingPtr sub_ring(const PrimeSet& Q) const;
  std::uint32_t to_sub(std::uint32_t x, const PrimeSet& Q) const;
  std::uint32_t from_sub(std::uint32_t y, const PrimeSet& Q) const;

  Quotient quotient(Ideal I) const;
  // Ring structure on mR with identity m*1. Throws unless m divides c.
  IdealRing ideal_ring(std::uint64_t m) const;

  ElementSet make_set(std::span<const std::uint32_t> xs) const { return ElementSet(size_, xs); }
  ElementSet full_set() const;

  friend bool operator==(const CGRing& a, const CGRing& b) { return a.components_ == b.components_; }

 private:
  explicit CGRing(std::vector<GaloisRing> components);
  std::vector<bool> component_mask(const PrimeSet& Q) const;

  std::vector<GaloisRing> components_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t size_ = 1;
  std::uint64_t characteristic_ = 1;
  std::uint32_t one_ = 0;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> units_;
  ElementSet unit_set_;
  std::vector<std::uint32_t> unit_generators_;
};

struct Quotient {
  RingPtr ring;
  Ideal ideal;
  // R -> R/I
  std::vector<std::uint32_t> map;
  // R/I -> least preimage in R
  std::vector<std::uint32_t> section;
};

// R_I on I = mR, realized as R/ann(m) with y <-> m * section(y).
struct IdealRing {
  RingPtr ring;
  std::uint64_t m = 1;
  // f_I : R -> R_I, x -> m x
  std::vector<std::uint32_t> f;
  // R_I index -> element of mR
  std::vector<std::uint32_t> to_ideal;
  // element of R -> R_I index, only meaningful on mR
  std::vector<std::uint32_t> from_ideal;
};

// Multiplicative subgroup of R^x, stored as a sorted index set.
class UnitSubgroup {
 public:
  // Throws InvalidArgument if 1 is missing, a member is not a unit, or the
  // set is not closed under multiplication.
  static UnitSubgroup from_members(RingPtr ring, std::span<const std::uint32_t> members);
  static UnitSubgroup generated(RingPtr ring, std::span<const std::uint32_t> generators);
  static UnitSubgroup whole(RingPtr ring);
  static UnitSubgroup trivial(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  const ElementSet& set() const { return set_; }
  std::size_t order() const { return members_.size(); }
  bool contains(std::uint32_t x) const { return set_.contains(x); }
  const std::vector<std::uint32_t>& generators() const { return generators_; }

  // <this, g>
  UnitSubgroup join(std::uint32_t g) const;
  // Orbit of x under multiplication.
  ElementSet orbit(std::uint32_t x) const;

  friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) { return a.members_ == b.members_; }

 private:
  UnitSubgroup(RingPtr ring, ElementSet set, std::vector<std::uint32_t> generators);

  RingPtr ring_;
  ElementSet set_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> generators_;
};

// Orbits of K on R, ordered by least element.
Partition unit_orbit_partition(const UnitSubgroup& K);

// Sorts each block and orders blocks by least element.
Partition canonical_partition(Partition blocks);

// Rank of L cap (1 + pR_p) for each component, as log_p of its p-torsion.
std::vector<std::uint32_t> principal_ranks(const UnitSubgroup& L);
// Purity of a unit subgroup via rank(L cap U_p) < d_p for every non-field
// component. Only valid for odd characteristic; throws otherwise.
bool is_pure_by_rank(const UnitSubgroup& L);

}  // namespace schur
