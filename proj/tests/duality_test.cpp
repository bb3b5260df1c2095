#include "schur/duality.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "schur/errors.hpp"
#include "support/corpus.hpp"

namespace schur {
namespace {

using testing::CorpusEntry;
using testing::make_corpus;
using testing::subgroups_by_joining;

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Phi_c = prod_{d | c} (x^d - 1)^mu(c/d): multiply the positive factors,
// then divide by the negative ones one at a time.
IntPoly phi_by_mobius(std::uint64_t c) {
  IntPoly num{1};
  std::vector<std::uint64_t> den;
  for (std::uint64_t d = 1; d <= c; ++d) {
    if (c % d) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(c / d);
    if (mu == 1) num = multiply(num, f);
    if (mu == -1) den.push_back(d);
  }
  for (auto d : den) {
    // divide by x^d - 1: q_k = a_{k+d} + q_{k+d}
    IntPoly q(num.size() - d, 0);
    for (std::size_t k = q.size(); k-- > 0;) q[k] = num[k + d] + (k + d < q.size() ? q[k + d] : 0);
    num = q;
  }
  return num;
}

std::complex<double> evaluate(const CycInt& z) {
  std::complex<double> out = 0;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    out += static_cast<double>(z.coeffs()[i]) * std::polar(1.0, 2 * std::numbers::pi * i / z.conductor());
  }
  return out;
}

std::complex<double> float_char_sum(const CharacterTable& t, std::uint32_t r, const ElementSet& S) {
  std::complex<double> out = 0;
  S.for_each([&](std::uint32_t s) {
    out += std::polar(1.0, 2 * std::numbers::pi * t.exponent(t.ring()->mul(r, s)) / t.conductor());
  });
  return out;
}

// Dual partition from floating-point sums with a tolerance.
Partition float_dual(const SRing& A) {
  const CharacterTable t(A.ring());
  std::vector<std::vector<std::complex<double>>> keys;
  Partition blocks;
  for (std::uint32_t r = 0; r < A.ring()->size(); ++r) {
    std::vector<std::complex<double>> key;
    for (std::size_t i = 0; i < A.rank(); ++i) key.push_back(float_char_sum(t, r, A.class_set(i)));
    std::size_t b = 0;
    for (; b < keys.size(); ++b) {
      double d = 0;
      for (std::size_t i = 0; i < key.size(); ++i) d = std::max(d, std::abs(key[i] - keys[b][i]));
      if (d < 1e-7) break;
    }
    if (b == keys.size()) {
      keys.push_back(key);
      blocks.emplace_back();
    }
    blocks[b].push_back(r);
  }
  return canonical_partition(blocks);
}

const std::vector<CorpusEntry>& corpus() {
  static const auto c = make_corpus({"GR(9)", "GR(4,2)", "GR(8)xGR(3)", "GR(4)xGR(9)", "GR(9)xGR(5)", "GR(25)"}, 6);
  return c;
}

TEST(CyclotomicPolynomial, Examples) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
  IntPoly phi36(13, 0);
  phi36[0] = 1;
  phi36[6] = -1;
  phi36[12] = 1;
  EXPECT_EQ(cyclotomic_polynomial(36), phi36);
  EXPECT_THROW(cyclotomic_polynomial(0), InvalidArgument);
}

TEST(CyclotomicPolynomial, MatchesMobiusProduct) {
  for (std::uint64_t c = 1; c <= 240; ++c) EXPECT_EQ(cyclotomic_polynomial(c), phi_by_mobius(c)) << c;
  // first coefficient outside {-1, 0, 1} occurs at 105
  const auto p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(*std::min_element(p105.begin(), p105.end()), -2);
}

TEST(CycInt, ArithmeticMatchesComplexEvaluation) {
  for (std::uint64_t c : {1u, 4u, 9u, 12u, 36u, 45u}) {
    for (std::uint64_t a = 0; a < c; ++a) {
      const auto za = CycInt::zeta_power(c, a);
      EXPECT_LT(std::abs(evaluate(za) - std::polar(1.0, 2 * std::numbers::pi * a / c)), 1e-9);
      for (std::uint64_t b = 0; b < c; b += 3) {
        EXPECT_EQ(za * CycInt::zeta_power(c, b), CycInt::zeta_power(c, a + b));
      }
    }
    // sum of all c-th roots of unity
    CycInt total = CycInt::integer(c, 0);
    for (std::uint64_t a = 0; a < c; ++a) total = total + CycInt::zeta_power(c, a);
    EXPECT_EQ(total.is_zero(), c > 1);
  }
}

TEST(Character, ExponentIsAdditiveAndFaithful) {
  for (std::string spec : {"GR(9)", "GR(4,2)", "GR(4,2)xGR(9)", "GR(8,2)xGR(3)", "GR(9,2)"}) {
    const auto R = CGRing::parse(spec);
    const CharacterTable t(R);
    for (std::uint32_t x = 0; x < R->size(); ++x) {
      const std::uint32_t y = (x * 31 + 7) % R->size();
      EXPECT_EQ(t.exponent(R->add(x, y)), (t.exponent(x) + t.exponent(y)) % t.conductor());
    }
    // distinct labels give distinct characters
    std::set<std::vector<std::uint64_t>> rows;
    for (std::uint32_t r = 0; r < R->size(); ++r) {
      std::vector<std::uint64_t> row;
      for (std::uint32_t x = 0; x < R->size(); ++x) row.push_back(t.exponent(R->mul(r, x)));
      rows.insert(row);
    }
    EXPECT_EQ(rows.size(), R->size()) << spec;
  }
}

TEST(CharSum, Examples) {
  const auto z9 = CGRing::parse("GR(9)");
  EXPECT_TRUE(char_sum(z9, 1, z9->make_set(std::vector<std::uint32_t>{1, 4, 7})).is_zero());
  const auto R = CGRing::parse("GR(4,2)xGR(9)");
  const CharacterTable t(R);
  const auto S = R->make_set(std::vector<std::uint32_t>{1, 5, 17, 100});
  EXPECT_EQ(t.char_sum(0, S), CycInt::integer(36, 4));
  for (auto u : R->units()) EXPECT_TRUE(t.char_sum(u, R->full_set()).is_zero());
}

TEST(CharSum, MatchesFloatingPointAndHermitianSymmetry) {
  const auto R = CGRing::parse("GR(4,2)xGR(9)");
  const CharacterTable t(R);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet S(R->size());
    for (int i = 0; i < 10; ++i) S.insert(rng() % R->size());
    const std::uint32_t r = rng() % R->size();
    const auto exact = t.char_sum(r, S);
    EXPECT_LT(std::abs(evaluate(exact) - float_char_sum(t, r, S)), 1e-8);
    ElementSet negS(R->size());
    S.for_each([&](std::uint32_t s) { negS.insert(R->neg(s)); });
    EXPECT_EQ(t.char_sum(R->neg(r), S), t.char_sum(r, negS));
  }
}

TEST(Dual, Examples) {
  const auto R = CGRing::parse("GR(4,2)xGR(9)");
  const auto full = cyclotomic(UnitSubgroup::trivial(R));
  EXPECT_EQ(dual_sring(full), full);
  const auto rank2 = schur_closure(R, {});
  EXPECT_EQ(dual_sring(rank2), rank2);
}

TEST(Dual, CyclotomicIsSelfDualAndInvolutive) {
  for (std::string spec : {"GR(9)", "GR(4,2)", "GR(25)", "GR(4,2)xGR(9)"}) {
    const auto R = CGRing::parse(spec);
    for (const auto& K : subgroups_by_joining(R)) {
      const auto C = cyclotomic(K);
      const auto D = dual_sring(C);
      EXPECT_EQ(D, C) << spec;
      EXPECT_EQ(dual_sring(D), C);
    }
  }
}

TEST(Dual, MatchesFloatingPointDual) {
  for (const auto& [label, A] : corpus()) {
    EXPECT_EQ(dual_sring(A).classes(), float_dual(A)) << label;
  }
}

TEST(Dual, TheoremsHoldOnCorpus) {
  for (const auto& [label, A] : corpus()) {
    const auto report = check_duality_theorems(A);
    EXPECT_TRUE(report.ok) << label << ": " << (report.failures.empty() ? "" : report.failures.front());
  }
}

TEST(Dual, ThreadCountDoesNotChangeResult) {
  for (const auto& [label, A] : corpus()) EXPECT_EQ(dual_sring(A, 1), dual_sring(A, 3)) << label;
}

TEST(Dual, WreathExampleSwapsPerps) {
  const auto z9 = CGRing::parse("GR(9)");
  const auto A = SRing::from_partition(z9, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}});
  const auto D = dual_sring(A);
  EXPECT_EQ(D, A);
  const auto certs = wreath_pairs(D);
  EXPECT_NE(std::find(certs.begin(), certs.end(), WreathCert{z9->perp({3}), z9->perp({3}), true}), certs.end());
}

TEST(Dual, TensorOfDualsIsDualOfTensor) {
  const auto R1 = CGRing::parse("GR(4,2)");
  const auto R2 = CGRing::parse("GR(9)");
  std::mt19937 rng(11);
  const auto s1 = subgroups_by_joining(R1);
  const auto s2 = subgroups_by_joining(R2);
  for (int trial = 0; trial < 8; ++trial) {
    const auto A1 = schur_closure(R1, {testing::random_orbit_union(R1, s1, rng)});
    const auto A2 = schur_closure(R2, {testing::random_orbit_union(R2, s2, rng)});
    EXPECT_EQ(dual_sring(tensor(A1, A2)), tensor(dual_sring(A1), dual_sring(A2)));
  }
}

TEST(Separation, Examples) {
  const auto z9 = CGRing::parse("GR(9)");
  const CharacterTable t(z9);
  const auto principal = UnitSubgroup::from_members(z9, std::vector<std::uint32_t>{1, 4, 7});
  const auto coset = z9->make_set(std::vector<std::uint32_t>{1, 4, 7});
  const auto none = separation_check(t, coset, ElementSet(9), principal);
  EXPECT_FALSE(none.separating_unit);
  EXPECT_FALSE(none.nonzero_unit);

  const auto teich = UnitSubgroup::from_members(z9, std::vector<std::uint32_t>{1, 8});
  const auto pair = z9->make_set(std::vector<std::uint32_t>{1, 8});
  const auto res = separation_check(t, pair, ElementSet(9), teich);
  ASSERT_TRUE(res.nonzero_unit);
  EXPECT_FALSE(t.char_sum(*res.nonzero_unit, pair).is_zero());
  const auto single = separation_check(t, z9->make_set(std::vector<std::uint32_t>{1}),
                                       z9->make_set(std::vector<std::uint32_t>{8}), teich);
  EXPECT_TRUE(single.separating_unit);
  EXPECT_THROW(separation_check(t, pair, z9->make_set(std::vector<std::uint32_t>{2}), teich), InvalidArgument);
  EXPECT_THROW(separation_check(t, ElementSet(9), pair, teich), EmptySet);
}

}  // namespace
}  // namespace schur
