#include "schur/construct.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>

#include "schur/errors.hpp"
#include "support/corpus.hpp"

namespace schur {
namespace {

// Subgroups of the unit group found by testing every subset for closure.
std::size_t subgroup_count_by_subsets(const RingPtr& R) {
  const auto& U = R->units();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << U.size()); ++mask) {
    std::vector<std::uint32_t> S;
    for (std::size_t i = 0; i < U.size(); ++i) {
      if (mask >> i & 1) S.push_back(U[i]);
    }
    std::set<std::uint32_t> members(S.begin(), S.end());
    if (!members.count(R->one())) continue;
    bool closed = true;
    for (auto a : S) {
      for (auto b : S) closed = closed && members.count(R->mul(a, b));
    }
    count += closed;
  }
  return count;
}

// Direct evaluation of the defining conditions for the fibre-product groups,
// independent of the library's own bookkeeping.
struct Oracle {
  RingPtr R;
  std::uint32_t p, q;

  std::uint32_t order_of(std::size_t k, std::uint32_t a) const {
    const auto& G = R->components()[k];
    std::uint32_t n = 1;
    for (std::uint32_t x = a; x != 1; x = G.mul(x, a)) ++n;
    return n;
  }
};

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void expect_consistent(const Construction& c) {
  const auto& R = c.ring;
  const std::uint64_t P = ipow(c.p, c.d), Q = ipow(c.q, c.e);
  EXPECT_EQ(R->size(), P * P * Q * Q);
  EXPECT_EQ(c.K.order(), P * Q * c.p * c.q);
  EXPECT_EQ(c.K_1.order(), P * c.p * Q);
  EXPECT_EQ(c.K_2.order(), P * Q * c.q);
  EXPECT_EQ(c.L_1.order(), c.q);
  EXPECT_EQ(c.L_2.order(), c.p);
  EXPECT_TRUE(c.K_1.set().is_subset_of(c.K.set()));
  EXPECT_TRUE(c.K_2.set().is_subset_of(c.K.set()));

  // K_1 has index p in K and K_2 has index q, so both are normal; their
  // intersection has order |K_1||K_2| / |K|.
  EXPECT_EQ((c.K_1.set() & c.K_2.set()).size(), c.K_1.order() * c.K_2.order() / c.K.order());

  // Every unit class is a K_1-orbit and every nonunit class a K_2-orbit.
  for (const auto& cls : c.sring.classes()) {
    const auto& G = R->is_unit(cls[0]) ? c.K_1 : c.K_2;
    EXPECT_EQ(G.orbit(cls[0]), R->make_set(cls));
  }
  EXPECT_TRUE(testing::is_sring_by_definition(*R, c.sring.classes()));
  EXPECT_TRUE(is_dense(c.sring));
  EXPECT_FALSE(is_pure(c.sring));
  EXPECT_EQ(IL_of(c.sring), (Ideal{std::uint64_t{c.p} * c.q * c.q}));
  for (const auto& cert : wreath_pairs(c.sring)) EXPECT_FALSE(cert.nontrivial);
  for (const auto& ch : c.checks) EXPECT_TRUE(ch.ok) << ch.name << ": " << ch.detail;
}

TEST(Subgroups, MatchSubsetEnumeration) {
  for (std::string spec : {"GR(9)", "GR(4,2)", "GR(8)", "GR(16)", "GR(2)xGR(9)", "GR(4)xGR(5)", "GR(13)", "GR(7)"}) {
    const auto R = CGRing::parse(spec);
    const auto subs = all_subgroups(UnitSubgroup::whole(R));
    EXPECT_EQ(subs.size(), subgroup_count_by_subsets(R)) << spec;
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& H : subs) distinct.insert(H.members());
    EXPECT_EQ(distinct.size(), subs.size());
    EXPECT_EQ(subs.size(), testing::subgroups_by_joining(R).size()) << spec;
  }
  EXPECT_EQ(all_subgroups(UnitSubgroup::whole(CGRing::parse("GR(4,2)"))).size(), 10u);
  EXPECT_EQ(all_subgroups(UnitSubgroup::whole(CGRing::parse("GR(9)"))).size(), 4u);
  EXPECT_THROW(all_subgroups(UnitSubgroup::whole(CGRing::parse("GR(9,2)")), 16), SizeLimitExceeded);
}

TEST(Subgroups, DirectAndSubdirectProducts) {
  const auto R = CGRing::parse("GR(4)xGR(9)");
  const auto left = UnitSubgroup::from_members(R, std::vector<std::uint32_t>{R->one(), R->compose(std::vector<std::uint32_t>{3, 1})});
  const auto right = subgroup_generated(R, std::vector<std::uint32_t>{R->compose(std::vector<std::uint32_t>{1, 2})});
  EXPECT_EQ(right.order(), 6u);
  EXPECT_EQ(direct_product(left, right), UnitSubgroup::whole(R));
  EXPECT_THROW(direct_product(right, right), InvalidArgument);

  // diagonal of Z_2 x Z_2 through the sign maps
  auto sign_left = [&](std::uint32_t x) { return R->part(x, 0) == 3 ? 1u : 0u; };
  auto sign_right = [&](std::uint32_t x) {
    const auto b = R->part(x, 1);
    return R->components()[1].pow(b, 3) == 8 ? 1u : 0u;
  };
  const auto diag = subdirect({left, right, 2, sign_left, sign_right});
  EXPECT_EQ(diag.order(), 6u);
  EXPECT_TRUE(diag.contains(R->compose(std::vector<std::uint32_t>{3, 8})));
  EXPECT_FALSE(diag.contains(R->compose(std::vector<std::uint32_t>{3, 1})));
  EXPECT_THROW(subdirect({left, right, 3, sign_left, sign_right}), InvalidArgument);
}

TEST(Construction, SmallestInstance) {
  const auto c = build_theorem_210809a(2, 2, 3, 1);
  EXPECT_EQ(c.ring->size(), 144u);
  EXPECT_EQ(c.K.order(), 72u);
  EXPECT_EQ(c.K_1.order(), 24u);
  EXPECT_EQ(c.K_2.order(), 36u);
  EXPECT_EQ(c.T_p.order(), 3u);
  EXPECT_EQ(c.T_q.order(), 2u);
  EXPECT_EQ(IL_of(c.sring), Ideal{18});
  EXPECT_FALSE(is_tensor_over(c.sring, {2}).ok);
  EXPECT_TRUE(c.ok());
  expect_consistent(c);
}

TEST(Construction, MirroredInstance) {
  const auto c = build_theorem_210809a(3, 1, 2, 2);
  EXPECT_EQ(c.ring->size(), 144u);
  EXPECT_EQ(IL_of(c.sring), Ideal{12});
  expect_consistent(c);
}

TEST(Construction, LargerInstances) {
  for (auto [p, d, q, e] : std::vector<std::array<std::uint32_t, 4>>{{2, 2, 3, 2}, {3, 2, 2, 2}, {2, 4, 3, 1}}) {
    const auto c = build_theorem_210809a(p, d, q, e);
    expect_consistent(c);
  }
}

TEST(Construction, GroupsSatisfyDefiningConditions) {
  const auto c = build_theorem_210809a(2, 2, 3, 1);
  const Oracle o{c.ring, 2, 3};
  const auto& R = c.ring;
  // T_p, T_q: Teichmueller elements of orders dividing q, p
  for (auto t : c.T_p.members()) {
    EXPECT_EQ(R->part(t, 1), 1u);
    EXPECT_EQ(3u % o.order_of(0, R->part(t, 0)), 0u);
  }
  for (auto t : c.T_q.members()) EXPECT_EQ(2u % o.order_of(1, R->part(t, 1)), 0u);
  // U'_q is the kernel of a nonzero map to Z_3 with U_q a complement.
  EXPECT_EQ(c.U_q_prime.order() * c.U_q.order(), c.principal_q.order());
  EXPECT_EQ((c.U_q.set() & c.U_q_prime.set()).size(), 1u);
  // L_1 projects onto T_p and onto U_q
  std::set<std::uint32_t> lp, lq;
  for (auto x : c.L_1.members()) {
    lp.insert(R->part(x, 0));
    lq.insert(R->part(x, 1));
  }
  EXPECT_EQ(lp.size(), 3u);
  EXPECT_EQ(lq.size(), 3u);
}

TEST(Construction, RejectsBadParameters) {
  EXPECT_THROW(build_theorem_210809a(2, 1, 3, 1), InvalidArgument);
  EXPECT_THROW(build_theorem_210809a(2, 2, 2, 1), InvalidArgument);
  EXPECT_THROW(build_theorem_210809a(4, 1, 3, 1), InvalidArgument);
  EXPECT_THROW(build_theorem_210809a(2, 2, 3, 0), InvalidArgument);
  EXPECT_THROW(build_theorem_210809a(2, 2, 3, 1, true, 0, 100), SizeLimitExceeded);
}

}  // namespace
}  // namespace schur
