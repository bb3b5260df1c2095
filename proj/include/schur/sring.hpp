#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/cgring.hpp"

namespace schur {

// Partition of a CG-ring into classes, ordered by least element. Holding an
// SRing does not by itself mean the S-ring axioms were checked; use
// SRing::verified or verify_sring for that.
class SRing {
 public:
  // Canonicalizes the classes. Throws InvalidArgument unless they are
  // nonempty, disjoint, in range and cover the ring.
  static SRing from_partition(RingPtr ring, Partition classes);
  // As from_partition, then throws InvalidArgument on the first violated
  // S-ring axiom.
  static SRing verified(RingPtr ring, Partition classes);

  const RingPtr& ring() const { return ring_; }
  const Partition& classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }
  std::uint32_t class_of(std::uint32_t x) const { return class_of_[x]; }
  const std::vector<std::uint32_t>& class_index() const { return class_of_; }
  const ElementSet& class_set(std::size_t i) const { return class_sets_[i]; }

  // X is a union of classes.
  bool is_a_set(const ElementSet& X) const;
  bool is_a_ideal(Ideal I) const { return is_a_set(ring_->elements(I)); }

  friend bool operator==(const SRing& a, const SRing& b) {
    return *a.ring_ == *b.ring_ && a.classes_ == b.classes_;
  }

 private:
  SRing(RingPtr ring, Partition classes);

  RingPtr ring_;
  Partition classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ElementSet> class_sets_;
};

struct Violation {
  // "partition", "zero", "negation", "unit" or "convolution"
  std::string axiom;
  std::string witness;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks the four S-ring axioms on a candidate partition: {0} is a class,
// classes are closed under negation and under multiplication by units, and
// every product of classes has constant multiplicity on each class. The
// convolution check is exhaustive over all elements. Reports at most one
// witness per axiom.
VerifyReport verify_sring(const RingPtr& ring, const Partition& classes, unsigned threads = 0);

// The orbit S-ring cyc(K, R).
SRing cyclotomic(const UnitSubgroup& K);

// The coarsest S-ring in which every seed is an A-set, found by refining
// until the partition is stable under negation, unit multiplication and
// convolution.
SRing schur_closure(const RingPtr& ring, const std::vector<ElementSet>& seeds, unsigned threads = 0);

// A-ideals in ascending divisor order.
std::vector<Ideal> a_ideals(const SRing& A);
bool is_dense(const SRing& A);

// IL of the class containing 1.
Ideal IL_of(const SRing& A);
bool is_pure(const SRing& A);

// Restriction to an A-ideal mR, as an S-ring over the ring R_I.
// Throws InvalidArgument if I is not an A-ideal.
SRing restrict_to(const SRing& A, Ideal I);
// Image in R/J. Throws InvalidArgument if J is not an A-ideal.
SRing quotient_sring(const SRing& A, Ideal J);

// Tensor product over R1 x R2; throws InvalidArgument on a shared prime.
SRing tensor(const SRing& A1, const SRing& A2);
// Reassembles A over R from factors over R.sub_ring(Q) and the complement.
SRing tensor_over(const RingPtr& ring, const PrimeSet& Q, const SRing& AQ, const SRing& AQc);

struct TensorSplit {
  bool ok = false;
  std::string reason;
  std::optional<SRing> on_q;
  std::optional<SRing> on_complement;
};

// Detects A = A_Q (x) A_Q' for a nonempty proper prime subset Q.
TensorSplit is_tensor_over(const SRing& A, const PrimeSet& Q);

struct WreathCert {
  Ideal I;
  Ideal J;
  bool nontrivial = false;

  friend bool operator==(const WreathCert&, const WreathCert&) = default;
};

// All pairs of A-ideals J within I such that every class outside I is a
// union of J-cosets.
std::vector<WreathCert> wreath_pairs(const SRing& A);
bool is_nontrivial_wreath(const SRing& A);

// {m x : x in X}
ElementSet power_map(const RingPtr& ring, const ElementSet& X, std::uint64_t m);
// {p x : x in X, |(x + H) cap X| not divisible by p}, H = {g : p g = 0}.
ElementSet frobenius_set(const RingPtr& ring, const ElementSet& X, std::uint32_t p);

// Every class is invariant under the units of R_Q.
bool is_rational(const SRing& A, const PrimeSet& Q);
// The constant |X cap (x + H)| for x in X. Throws InvalidArgument unless H is
// an A-ideal and Falsification if the count varies.
std::uint64_t coset_count(const SRing& A, Ideal H, const ElementSet& X);

}  // namespace schur
