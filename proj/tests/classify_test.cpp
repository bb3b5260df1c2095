#include "schur/classify.hpp"

#include <gtest/gtest.h>

#include <map>

#include "schur/construct.hpp"
#include "schur/errors.hpp"
#include "support/corpus.hpp"

namespace schur {
namespace {

using testing::make_corpus;
using testing::subgroups_by_joining;

// Partition of R by the tuple of factor classes of the projections, which is
// the tensor product of the factors by definition.
Partition product_partition(const RingPtr& R, const std::vector<Factor>& factors) {
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t x = 0; x < R->size(); ++x) {
    std::vector<std::uint32_t> key;
    for (const auto& f : factors) key.push_back(f.sring.class_of(R->to_sub(R->project(x, f.primes), f.primes)));
    blocks[key].push_back(x);
  }
  Partition out;
  for (auto& [k, v] : blocks) out.push_back(std::move(v));
  return canonical_partition(std::move(out));
}

// Orbits of K computed by multiplying by every member.
Partition orbits_by_multiplication(const UnitSubgroup& K) {
  const auto& R = K.ring();
  std::vector<int> seen(R->size(), 0);
  Partition out;
  for (std::uint32_t x = 0; x < R->size(); ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> orbit;
    for (auto k : K.members()) orbit.insert(R->mul(k, x));
    for (auto y : orbit) seen[y] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return canonical_partition(std::move(out));
}

bool pure_by_ideal_scan(const CGRing& R, const ElementSet& X) {
  for (auto I : R.ideals()) {
    if (I == R.zero_ideal()) continue;
    const auto elems = R.elements(I).indices();
    bool stable = true;
    X.for_each([&](std::uint32_t x) {
      for (auto g : elems) stable = stable && X.contains(R.add(x, g));
    });
    if (stable) return false;
  }
  return true;
}

bool invariant_under_all_units(const SRing& A) {
  const auto& R = *A.ring();
  for (auto u : R.units()) {
    for (std::uint32_t x = 0; x < R.size(); ++x) {
      if (A.class_of(R.mul(u, x)) != A.class_of(x)) return false;
    }
  }
  return true;
}

void expect_valid_pure_decomposition(const SRing& A, const Decomposition& D, const std::string& label) {
  ASSERT_EQ(D.kind, DecompositionKind::PureTensor) << label << ": " << D.reason;
  EXPECT_EQ(product_partition(A.ring(), D.factors), A.classes()) << label;
  EXPECT_EQ(reassemble(A.ring(), D.factors), A) << label;
  std::size_t cyclotomic_factors = 0;
  for (const auto& f : D.factors) {
    EXPECT_TRUE(testing::is_sring_by_definition(*f.sring.ring(), f.sring.classes())) << label;
    if (f.role == FactorRole::Rank2) {
      EXPECT_EQ(f.sring.rank(), 2u);
      const auto& comps = f.sring.ring()->components();
      EXPECT_TRUE(comps.size() > 1 || !comps[0].is_field()) << label;
    } else {
      ASSERT_EQ(f.role, FactorRole::Cyclotomic);
      ++cyclotomic_factors;
      ASSERT_TRUE(D.cyclotomic_group);
      EXPECT_EQ(orbits_by_multiplication(*D.cyclotomic_group), f.sring.classes()) << label;
      EXPECT_TRUE(pure_by_ideal_scan(*f.sring.ring(), D.cyclotomic_group->set())) << label;
    }
  }
  EXPECT_LE(cyclotomic_factors, 1u);
}

TEST(Decompose, CyclotomicOfPureGroupIsOneFactor) {
  const auto R = CGRing::parse("GR(9)xGR(5)");
  std::size_t pure_groups = 0;
  for (const auto& K : subgroups_by_joining(R)) {
    if (!pure_by_ideal_scan(*R, K.set())) continue;
    ++pure_groups;
    const auto A = cyclotomic(K);
    const auto D = decompose_pure(A);
    expect_valid_pure_decomposition(A, D, "cyc");
    // no rank-2 factor over a non-field can split off a dense S-ring
    ASSERT_EQ(D.factors.size(), 1u);
    EXPECT_EQ(D.factors[0].role, FactorRole::Cyclotomic);
    EXPECT_EQ(*D.cyclotomic_group, K);
  }
  EXPECT_GT(pure_groups, 0u);
}

TEST(Decompose, SplitsRankTwoFactor) {
  const auto r9 = schur_closure(CGRing::parse("GR(9)"), {});
  const auto z25 = CGRing::parse("GR(25)");
  const auto pm = UnitSubgroup::from_members(z25, std::vector<std::uint32_t>{1, 24});
  const auto A = tensor(r9, cyclotomic(pm));
  const auto D = decompose_pure(A);
  expect_valid_pure_decomposition(A, D, "rank2 x cyc");
  ASSERT_EQ(D.factors.size(), 2u);
  EXPECT_EQ(D.factors[0].primes, PrimeSet{3});
  EXPECT_EQ(D.factors[0].role, FactorRole::Rank2);
  EXPECT_EQ(D.factors[1].primes, PrimeSet{5});
  EXPECT_EQ(D.factors[1].role, FactorRole::Cyclotomic);
  EXPECT_EQ(D.cyclotomic_group->order(), 2u);
}

TEST(Decompose, RankTwoOverProductIsOneFactor) {
  const auto A = schur_closure(CGRing::parse("GR(3)xGR(5)"), {});
  const auto D = decompose_pure(A);
  expect_valid_pure_decomposition(A, D, "rank2 over fields");
  ASSERT_EQ(D.factors.size(), 1u);
  EXPECT_EQ(D.factors[0].role, FactorRole::Rank2);
  EXPECT_FALSE(D.cyclotomic_group);
}

TEST(Decompose, NotApplicable) {
  const auto z9 = CGRing::parse("GR(9)");
  const auto non_pure = SRing::from_partition(z9, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}});
  EXPECT_EQ(decompose_pure(non_pure).kind, DecompositionKind::NotApplicable);
  const auto even = cyclotomic(UnitSubgroup::trivial(CGRing::parse("GR(4,2)")));
  const auto D = decompose_pure(even);
  EXPECT_EQ(D.kind, DecompositionKind::NotApplicable);
  EXPECT_NE(D.reason.find("even"), std::string::npos);
}

TEST(Decompose, PureSRingsOverOddRings) {
  std::size_t pure = 0, dense_pure = 0;
  for (std::string spec : {"GR(9)xGR(25)", "GR(27)", "GR(9)xGR(5)", "GR(3)xGR(5)xGR(7)"}) {
    for (const auto& [label, A] : make_corpus({spec}, 25, 7)) {
      if (!is_pure(A)) continue;
      ++pure;
      const auto D = decompose_pure(A);
      expect_valid_pure_decomposition(A, D, label);
      if (is_dense(A)) {
        ++dense_pure;
        // dense pure S-rings are cyclotomic for the class of 1
        const auto& one_class = A.classes()[A.class_of(A.ring()->one())];
        EXPECT_EQ(orbits_by_multiplication(UnitSubgroup::from_members(A.ring(), one_class)), A.classes()) << label;
      }
      // with every maximal ideal an A-ideal the class of 1 is a pure subgroup
      bool all_max = true;
      for (auto M : A.ring()->maximal_ideals()) all_max = all_max && A.is_a_ideal(M);
      if (all_max) {
        const auto& one_class = A.classes()[A.class_of(A.ring()->one())];
        EXPECT_NO_THROW(UnitSubgroup::from_members(A.ring(), one_class)) << label;
        EXPECT_TRUE(pure_by_ideal_scan(*A.ring(), A.ring()->make_set(one_class))) << label;
      }
    }
  }
  EXPECT_GE(pure, 20u);
  EXPECT_GT(dense_pure, 0u);
}

TEST(Decompose, TensorsWithRankTwoFactors) {
  // pure S-rings over GR(9) and GR(25), each tensored with rank 2 on the other side
  const auto z9 = CGRing::parse("GR(9)");
  const auto z25 = CGRing::parse("GR(25)");
  std::vector<SRing> left, right;
  for (const auto& e : make_corpus({"GR(9)"}, 6, 9)) {
    if (is_pure(e.A)) left.push_back(e.A);
  }
  for (const auto& e : make_corpus({"GR(25)"}, 6, 9)) {
    if (is_pure(e.A)) right.push_back(e.A);
  }
  const auto r9 = schur_closure(z9, {});
  const auto r25 = schur_closure(z25, {});
  std::size_t mixed = 0;
  auto run = [&](const SRing& A, std::size_t expected_rank2) {
    const auto D = decompose_pure(A);
    expect_valid_pure_decomposition(A, D, "tensor");
    std::size_t rank2 = 0;
    for (const auto& f : D.factors) rank2 += f.role == FactorRole::Rank2;
    EXPECT_EQ(rank2, expected_rank2);
    mixed += rank2 > 0 && D.cyclotomic_group.has_value();
  };
  for (const auto& B : right) run(tensor(r9, B), B == r25 ? 2 : 1);
  for (const auto& B : left) run(tensor(B, r25), B == r9 ? 2 : 1);
  EXPECT_GE(mixed, 10u);
}

TEST(ClassifyRational, Examples) {
  const auto z9 = CGRing::parse("GR(9)");
  const auto A = SRing::from_partition(z9, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}});
  const auto D = classify_rational(A);
  EXPECT_EQ(D.kind, DecompositionKind::RationalWreath);
  EXPECT_EQ(*D.wreath, (WreathCert{{3}, {3}, true}));

  const auto r9 = schur_closure(z9, {});
  const auto B = tensor(r9, cyclotomic(UnitSubgroup::whole(CGRing::parse("GR(25)"))));
  // this S-ring satisfies both alternatives; the wreath certificate wins
  const auto DB = classify_rational(B);
  EXPECT_EQ(DB.kind, DecompositionKind::RationalWreath);
  EXPECT_TRUE(DB.wreath->nontrivial);
  EXPECT_TRUE(is_tensor_over(B, {3}).ok);

  const auto F = tensor(schur_closure(CGRing::parse("GR(3)"), {}), schur_closure(CGRing::parse("GR(5)"), {}));
  const auto DF = classify_rational(F);
  EXPECT_EQ(DF.kind, DecompositionKind::RationalTensorRank2);
  EXPECT_EQ(product_partition(F.ring(), DF.factors), F.classes());

  EXPECT_EQ(classify_rational(r9).kind, DecompositionKind::RationalTensorRank2);
  EXPECT_THROW(classify_rational(cyclotomic(UnitSubgroup::trivial(z9))), InvalidArgument);
}

TEST(ClassifyRational, EveryRationalSRingIsClassified) {
  std::size_t rational = 0;
  std::map<DecompositionKind, std::size_t> kinds;
  for (std::string spec : {"GR(9)", "GR(4,2)", "GR(8)", "GR(4)xGR(9)", "GR(2)xGR(3)xGR(5)", "GR(27)", "GR(25)",
                           "GR(3)xGR(7)", "GR(4)xGR(7)"}) {
    const auto R = CGRing::parse(spec);
    std::vector<SRing> candidates;
    for (const auto& e : make_corpus({spec}, 8, 21)) candidates.push_back(e.A);
    // closures of unions of sets mR^x
    const auto whole = UnitSubgroup::whole(R);
    const auto orbits = unit_orbit_partition(whole);
    std::mt19937 rng(5);
    for (int k = 0; k < 12; ++k) {
      ElementSet seed(R->size());
      for (const auto& o : orbits) {
        if (rng() % 2) {
          for (auto x : o) seed.insert(x);
        }
      }
      candidates.push_back(schur_closure(R, {seed}));
    }
    for (const auto& A : candidates) {
      ASSERT_LE(R->characteristic(), 36u);
      const bool rat = invariant_under_all_units(A);
      EXPECT_EQ(rat, is_rational(A, R->prime_set())) << spec;
      if (!rat) {
        EXPECT_THROW(classify_rational(A), InvalidArgument);
        continue;
      }
      ++rational;
      const auto D = classify_rational(A);
      ++kinds[D.kind];
      if (D.kind == DecompositionKind::RationalWreath) {
        ASSERT_TRUE(D.wreath);
        EXPECT_TRUE(D.wreath->nontrivial);
        const auto certs = wreath_pairs(A);
        EXPECT_NE(std::find(certs.begin(), certs.end(), *D.wreath), certs.end());
      } else {
        ASSERT_EQ(D.kind, DecompositionKind::RationalTensorRank2) << spec;
        EXPECT_EQ(product_partition(R, D.factors), A.classes()) << spec;
        EXPECT_TRUE(std::any_of(D.factors.begin(), D.factors.end(), [](const Factor& f) { return f.sring.rank() == 2; }));
      }
    }
  }
  EXPECT_GE(rational, 20u);
  EXPECT_GT(kinds[DecompositionKind::RationalWreath], 0u);
  EXPECT_GT(kinds[DecompositionKind::RationalTensorRank2], 0u);
}

TEST(IdealExtremes, MatchInclusionScan) {
  for (const auto& [label, A] : make_corpus({"GR(9)", "GR(4)xGR(9)", "GR(8)xGR(3)"}, 6, 3)) {
    const auto& R = *A.ring();
    const auto ideals = a_ideals(A);
    auto subset = [&](Ideal I, Ideal J) { return R.elements(I).is_subset_of(R.elements(J)); };
    std::vector<Ideal> maximal, minimal;
    for (auto I : ideals) {
      if (R.ideal_size(I) != R.size() &&
          std::none_of(ideals.begin(), ideals.end(), [&](Ideal J) {
            return J != I && R.ideal_size(J) != R.size() && subset(I, J);
          })) {
        maximal.push_back(I);
      }
      if (R.ideal_size(I) != 1 && std::none_of(ideals.begin(), ideals.end(), [&](Ideal J) {
            return J != I && R.ideal_size(J) != 1 && subset(J, I);
          })) {
        minimal.push_back(I);
      }
    }
    EXPECT_EQ(maximal_a_ideals(A), maximal) << label;
    EXPECT_EQ(minimal_a_ideals(A), minimal) << label;
  }
}

TEST(Nondense, Examples) {
  const auto r9 = schur_closure(CGRing::parse("GR(9)"), {});
  const auto report = check_nondense_structure(r9);
  EXPECT_TRUE(report.applicable);
  EXPECT_TRUE(report.ok);
  EXPECT_EQ(report.branch, "tensor");
  EXPECT_EQ(*report.rank2_primes, PrimeSet{3});

  const auto c = build_theorem_210809a(2, 2, 3, 1);
  const auto dense = check_nondense_structure(c.sring);
  EXPECT_FALSE(dense.applicable);
  EXPECT_EQ(dense.branch, "not applicable");
  EXPECT_TRUE(dense.ok);
  EXPECT_FALSE(dense.pure);
}

TEST(Nondense, HoldsOnCorpus) {
  std::size_t applicable = 0, pure = 0;
  for (const auto& [label, A] : make_corpus({"GR(9)", "GR(4,2)", "GR(4)xGR(9)", "GR(9)xGR(5)", "GR(27)", "GR(8)xGR(3)"}, 10, 17)) {
    const auto report = check_nondense_structure(A);
    EXPECT_TRUE(report.ok) << label << ": " << (report.failures.empty() ? "" : report.failures.front());
    applicable += report.applicable;
    pure += report.pure;
    if (report.applicable) EXPECT_NE(report.branch, "none") << label;
  }
  EXPECT_GT(applicable, 0u);
  EXPECT_GT(pure, 0u);
}

TEST(QuotientPurity, Examples) {
  const auto R = CGRing::parse("GR(9)xGR(25)");
  const auto pm = UnitSubgroup::generated(R, std::vector<std::uint32_t>{R->neg(R->one())});
  const auto A = cyclotomic(pm);
  const auto zero = check_quotient_purity(A, R->zero_ideal());
  EXPECT_TRUE(zero.applicable);
  EXPECT_TRUE(zero.quotient_pure);
  EXPECT_EQ(quotient_sring(A, R->zero_ideal()).classes(), A.classes());
  const auto bad = check_quotient_purity(A, Ideal{3});
  EXPECT_FALSE(bad.applicable);

  const auto even = check_quotient_purity(cyclotomic(UnitSubgroup::trivial(CGRing::parse("GR(8)"))), Ideal{4});
  EXPECT_FALSE(even.applicable);
  EXPECT_NE(even.reason.find("even"), std::string::npos);
}

TEST(QuotientPurity, ExhaustiveOverSubgroups) {
  const auto R = CGRing::parse("GR(9)xGR(25)");
  std::size_t checked = 0;
  for (const auto& K : subgroups_by_joining(R)) {
    if (!pure_by_ideal_scan(*R, K.set())) continue;
    const auto A = cyclotomic(K);
    for (auto J : R->ideals()) {
      const auto report = check_quotient_purity(A, J);
      const bool admissible = J.m % 3 == 0 && J.m % 5 == 0;
      EXPECT_EQ(report.applicable, admissible);
      if (!report.applicable) continue;
      ++checked;
      EXPECT_TRUE(report.ok);
      // the class of 1 in the quotient, checked by an ideal scan
      const auto Q = quotient_sring(A, J);
      const auto& Rq = *Q.ring();
      EXPECT_TRUE(pure_by_ideal_scan(Rq, Rq.make_set(Q.classes()[Q.class_of(Rq.one())])));
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace schur
