#include "schur/classify.hpp"

#include <algorithm>

#include "schur/duality.hpp"
#include "schur/errors.hpp"

namespace schur {
namespace {

// Nonempty subsets of P ordered by size, then lexicographically.
std::vector<PrimeSet> prime_subsets(const PrimeSet& P) {
  std::vector<PrimeSet> out;
  for (std::uint32_t mask = 1; mask < (1u << P.size()); ++mask) {
    PrimeSet Q;
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (mask >> i & 1) Q.push_back(P[i]);
    }
    out.push_back(std::move(Q));
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeSet& a, const PrimeSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

PrimeSet minus(const PrimeSet& P, const PrimeSet& Q) {
  PrimeSet out;
  std::set_difference(P.begin(), P.end(), Q.begin(), Q.end(), std::back_inserter(out));
  return out;
}

PrimeSet unite(const PrimeSet& P, const PrimeSet& Q) {
  PrimeSet out;
  std::set_union(P.begin(), P.end(), Q.begin(), Q.end(), std::back_inserter(out));
  return out;
}

bool is_field(const CGRing& R) { return R.components().size() == 1 && R.components()[0].is_field(); }

bool pure_indecomposable(const SRing& A) { return is_pure(A) && !rank2_nonfield_factor(A); }

}  // namespace

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::PureTensor:
      return "PureTensor";
    case DecompositionKind::RationalWreath:
      return "RationalWreath";
    case DecompositionKind::RationalTensorRank2:
      return "RationalTensorRank2";
    case DecompositionKind::NotApplicable:
      return "NotApplicable";
  }
  return "";
}

std::string to_string(FactorRole role) {
  switch (role) {
    case FactorRole::Cyclotomic:
      return "cyclotomic";
    case FactorRole::Rank2:
      return "rank2";
    case FactorRole::General:
      return "general";
  }
  return "";
}

SRing reassemble(const RingPtr& ring, const std::vector<Factor>& factors) {
  if (factors.empty()) throw InvalidArgument("no factors to reassemble");
  PrimeSet covered;
  for (const auto& f : factors) {
    if (f.primes.empty() || minus(f.primes, covered) != f.primes) {
      throw InvalidArgument("factor prime sets overlap or are empty");
    }
    covered = unite(covered, f.primes);
  }
  if (covered != ring->prime_set()) throw InvalidArgument("factor primes do not cover " + ring->spec());
  if (factors.size() == 1) return SRing::from_partition(ring, factors[0].sring.classes());
  const auto& first = factors.front();
  const auto rest_primes = minus(ring->prime_set(), first.primes);
  const std::vector<Factor> rest(factors.begin() + 1, factors.end());
  return tensor_over(ring, first.primes, first.sring, reassemble(ring->sub_ring(rest_primes), rest));
}

std::vector<Ideal> maximal_a_ideals(const SRing& A) {
  const CGRing& R = *A.ring();
  const auto ideals = a_ideals(A);
  std::vector<Ideal> out;
  for (auto I : ideals) {
    if (I == R.whole()) continue;
    const bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](Ideal J) {
      return J != I && J != R.whole() && R.includes(J, I);
    });
    if (maximal) out.push_back(I);
  }
  return out;
}

std::vector<Ideal> minimal_a_ideals(const SRing& A) {
  const CGRing& R = *A.ring();
  const auto ideals = a_ideals(A);
  std::vector<Ideal> out;
  for (auto I : ideals) {
    if (I == R.zero_ideal()) continue;
    const bool minimal = std::none_of(ideals.begin(), ideals.end(), [&](Ideal J) {
      return J != I && J != R.zero_ideal() && R.includes(I, J);
    });
    if (minimal) out.push_back(I);
  }
  return out;
}

std::optional<PrimeSet> rank2_nonfield_factor(const SRing& A) {
  const CGRing& R = *A.ring();
  const auto all = R.prime_set();
  for (const auto& Q : prime_subsets(all)) {
    if (is_field(*R.sub_ring(Q))) continue;
    if (Q == all) {
      if (A.rank() == 2) return Q;
      continue;
    }
    const auto split = is_tensor_over(A, Q);
    if (split.ok && split.on_q->rank() == 2) return Q;
  }
  return std::nullopt;
}

Decomposition decompose_pure(const SRing& A) {
  const auto& ring = A.ring();
  Decomposition out;
  if (!ring->is_odd()) {
    out.reason = "characteristic " + std::to_string(ring->characteristic()) + " is even";
    return out;
  }
  if (!is_pure(A)) {
    out.reason = "not pure: the class of 1 is invariant under " + std::to_string(IL_of(A).m) + "R";
    return out;
  }
  out.kind = DecompositionKind::PureTensor;

  // finest tensor blocks, each containing the least remaining prime
  PrimeSet remaining = ring->prime_set();
  SRing current = A;
  PrimeSet dense_primes;
  std::vector<SRing> dense_blocks;
  std::vector<PrimeSet> dense_block_primes;
  while (!remaining.empty()) {
    const auto p = remaining.front();
    std::optional<SRing> block, rest;
    PrimeSet block_primes;
    std::vector<PrimeSet> candidates{{p}};
    for (const auto& Q : prime_subsets(minus(remaining, {p}))) candidates.push_back(unite({p}, Q));
    for (const auto& cand : candidates) {
      if (cand == remaining) {
        block = current;
        block_primes = cand;
        break;
      }
      auto split = is_tensor_over(current, cand);
      if (split.ok) {
        block = std::move(split.on_q);
        rest = std::move(split.on_complement);
        block_primes = cand;
        break;
      }
    }
    const bool nonfield = !is_field(*block->ring());
    if (block->rank() == 2 && nonfield) {
      out.factors.push_back({block_primes, *block, FactorRole::Rank2});
    } else {
      dense_blocks.push_back(*block);
      dense_block_primes.push_back(block_primes);
      dense_primes = unite(dense_primes, block_primes);
    }
    remaining = minus(remaining, block_primes);
    if (rest) current = *rest;
  }

  if (!dense_blocks.empty()) {
    const auto sub = ring->sub_ring(dense_primes);
    std::vector<Factor> parts;
    for (std::size_t i = 0; i < dense_blocks.size(); ++i) {
      parts.push_back({dense_block_primes[i], dense_blocks[i], FactorRole::General});
    }
    const auto D = reassemble(sub, parts);
    if (!is_dense(D) || !is_pure(D)) {
      throw Falsification("remainder over " + sub->spec() + " is not dense and pure");
    }
    const auto& one_class = D.classes()[D.class_of(sub->one())];
    std::optional<UnitSubgroup> K;
    try {
      K = UnitSubgroup::from_members(sub, one_class);
    } catch (const InvalidArgument& e) {
      throw Falsification("class of 1 over " + sub->spec() + " is not a unit subgroup: " + e.what());
    }
    if (!(cyclotomic(*K) == D)) {
      throw Falsification("dense pure remainder over " + sub->spec() + " is not cyclotomic");
    }
    out.cyclotomic_group = K;
    out.factors.push_back({dense_primes, D, FactorRole::Cyclotomic});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.primes.front() < b.primes.front(); });
  if (!(reassemble(ring, out.factors) == A)) throw Falsification("factors do not reassemble to the input");
  return out;
}

Decomposition classify_rational(const SRing& A) {
  const auto& ring = A.ring();
  if (!is_rational(A, ring->prime_set())) throw InvalidArgument("S-ring is not rational");
  Decomposition out;
  for (const auto& cert : wreath_pairs(A)) {
    if (cert.nontrivial) {
      out.kind = DecompositionKind::RationalWreath;
      out.wreath = cert;
      return out;
    }
  }
  if (A.rank() == 2) {
    out.kind = DecompositionKind::RationalTensorRank2;
    out.factors.push_back({ring->prime_set(), A, FactorRole::Rank2});
    return out;
  }
  const auto all = ring->prime_set();
  for (const auto& Q : prime_subsets(all)) {
    if (Q == all) continue;
    const auto split = is_tensor_over(A, Q);
    if (!split.ok || (split.on_q->rank() != 2 && split.on_complement->rank() != 2)) continue;
    out.kind = DecompositionKind::RationalTensorRank2;
    const auto Qc = minus(all, Q);
    Factor a{Q, *split.on_q, split.on_q->rank() == 2 ? FactorRole::Rank2 : FactorRole::General};
    Factor b{Qc, *split.on_complement, split.on_complement->rank() == 2 ? FactorRole::Rank2 : FactorRole::General};
    if (b.primes.front() < a.primes.front()) std::swap(a, b);
    out.factors = {a, b};
    return out;
  }
  throw Falsification("rational S-ring with neither a nontrivial wreath certificate nor a rank-2 tensor factor");
}

NondenseReport check_nondense_structure(const SRing& A) {
  const CGRing& R = *A.ring();
  NondenseReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.failures.push_back(std::move(message));
  };
  auto sorted = [](std::vector<Ideal> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto max_r = sorted(R.maximal_ideals());
  const auto max_a = sorted(maximal_a_ideals(A));
  report.applicable = max_a != max_r;
  if (report.applicable) {
    for (const auto& cert : wreath_pairs(A)) {
      if (cert.nontrivial) {
        report.wreath = cert;
        break;
      }
    }
    report.rank2_primes = rank2_nonfield_factor(A);
    if (report.wreath) {
      report.branch = "wreath";
    } else if (report.rank2_primes) {
      report.branch = "tensor";
    } else {
      report.branch = "none";
      fail("some maximal ideal is not an A-ideal, yet there is no nontrivial wreath certificate and no rank-2 factor");
    }
  } else {
    report.branch = "not applicable";
  }

  report.pure = is_pure(A);
  if (report.pure) {
    const auto D = dual_sring(A);
    report.pure_indecomposable = pure_indecomposable(A);
    report.dual_pure_indecomposable = pure_indecomposable(D);
    report.max_ideals_match = max_a == max_r;
    report.min_ideals_match = sorted(minimal_a_ideals(A)) == sorted(R.minimal_ideals());
    const bool v = *report.pure_indecomposable;
    if (*report.dual_pure_indecomposable != v || *report.max_ideals_match != v || *report.min_ideals_match != v) {
      fail("pure S-ring: indecomposability, dual indecomposability and the maximal and minimal ideal conditions disagree");
    }
  }
  return report;
}

QuotientPurityReport check_quotient_purity(const SRing& A, Ideal J) {
  const CGRing& R = *A.ring();
  QuotientPurityReport report;
  if (!R.is_odd()) {
    report.reason = "characteristic " + std::to_string(R.characteristic()) + " is even";
    return report;
  }
  if (!R.is_ideal(J)) throw InvalidArgument(std::to_string(J.m) + " does not divide the characteristic");
  if (!is_pure(A)) {
    report.reason = "S-ring is not pure";
    return report;
  }
  for (auto M : R.maximal_ideals()) {
    if (!A.is_a_ideal(M)) {
      report.reason = "maximal ideal " + std::to_string(M.m) + "R is not an A-ideal";
      return report;
    }
  }
  if (!A.is_a_ideal(J)) {
    report.reason = std::to_string(J.m) + "R is not an A-ideal";
    return report;
  }
  for (auto p : R.prime_set()) {
    if (J.m % p != 0) {
      report.reason = std::to_string(J.m) + "R contains the component R_" + std::to_string(p);
      return report;
    }
  }
  report.applicable = true;
  report.quotient_pure = is_pure(quotient_sring(A, J));
  report.ok = report.quotient_pure;
  return report;
}

}  // namespace schur
