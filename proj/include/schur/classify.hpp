#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur/cgring.hpp"
#include "schur/sring.hpp"

namespace schur {

enum class DecompositionKind { PureTensor, RationalWreath, RationalTensorRank2, NotApplicable };
enum class FactorRole { Cyclotomic, Rank2, General };

std::string to_string(DecompositionKind kind);
std::string to_string(FactorRole role);

struct Factor {
  PrimeSet primes;
  // S-ring over ring.sub_ring(primes)
  SRing sring;
  FactorRole role = FactorRole::General;
};

struct Decomposition {
  DecompositionKind kind = DecompositionKind::NotApplicable;
  std::string reason;
  // Ordered by least prime; their primes partition the primes of the ring.
  std::vector<Factor> factors;
  std::optional<WreathCert> wreath;
  // Group K with cyclotomic factor cyc(K), as a subgroup of the factor ring.
  std::optional<UnitSubgroup> cyclotomic_group;
};

// Tensor product of factors whose primes partition those of the ring.
SRing reassemble(const RingPtr& ring, const std::vector<Factor>& factors);

// Maximal proper A-ideals and minimal nonzero A-ideals.
std::vector<Ideal> maximal_a_ideals(const SRing& A);
std::vector<Ideal> minimal_a_ideals(const SRing& A);

// A = A_Q (x) A_Q' with A_Q of rank 2 over the non-field R_Q, for some
// nonempty Q (Q may be every prime, with A_Q' over the zero ring). Returns the
// least such Q in size-then-lexicographic order.
std::optional<PrimeSet> rank2_nonfield_factor(const SRing& A);

// Tensor factorization of a pure S-ring over an odd ring into rank-2 factors
// over non-fields and one pure cyclotomic factor. NotApplicable for even
// characteristic or a non-pure input. Throws Falsification if a step fails.
Decomposition decompose_pure(const SRing& A);

// For S-rings whose classes are all invariant under R^x: a nontrivial wreath
// certificate, else a tensor split with a rank-2 factor. Throws
// InvalidArgument for a non-rational input and Falsification if neither
// exists.
Decomposition classify_rational(const SRing& A);

struct NondenseReport {
  // Some maximal ideal of R is not an A-ideal.
  bool applicable = false;
  bool ok = true;
  std::string branch;
  std::optional<WreathCert> wreath;
  std::optional<PrimeSet> rank2_primes;
  // Four-way equivalence, evaluated when A is pure.
  bool pure = false;
  std::optional<bool> pure_indecomposable, dual_pure_indecomposable, max_ideals_match, min_ideals_match;
  std::vector<std::string> failures;
};

NondenseReport check_nondense_structure(const SRing& A);

struct QuotientPurityReport {
  bool applicable = false;
  std::string reason;
  bool quotient_pure = false;
  bool ok = true;
};

// Needs odd characteristic, A pure, every maximal ideal an A-ideal, J an
// A-ideal with J_p != R_p for every p.
QuotientPurityReport check_quotient_purity(const SRing& A, Ideal J);

}  // namespace schur
