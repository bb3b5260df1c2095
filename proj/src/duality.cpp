#include "schur/duality.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "schur/errors.hpp"
#include "schur/parallel.hpp"

namespace schur {
namespace {

// Exact quotient of a by the monic polynomial b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t coef = a[k];
    q[k - db] = coef;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= coef * b[i];
  }
  return q;
}

void reduce_in_place(IntPoly& v, const IntPoly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > deg;) {
    const std::int64_t coef = v[k];
    if (coef == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) v[k - deg + i] -= coef * phi[i];
  }
  v.resize(deg);
}

const IntPoly& cached_phi(std::uint64_t c) {
  static std::mutex mutex;
  static std::map<std::uint64_t, IntPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(c);
  if (it == cache.end()) it = cache.emplace(c, cyclotomic_polynomial(c)).first;
  return it->second;
}

std::string perp_pair(Ideal a, Ideal b) { return "(" + std::to_string(a.m) + "R, " + std::to_string(b.m) + "R)"; }

}  // namespace

IntPoly cyclotomic_polynomial(std::uint64_t c) {
  if (c == 0) throw InvalidArgument("cyclotomic polynomial of order 0");
  IntPoly p(c + 1, 0);
  p[0] = -1;
  p[c] = 1;
  for (std::uint64_t d = 1; d < c; ++d) {
    if (c % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

IntPoly reduce_mod_cyclotomic(std::uint64_t c, const IntPoly& counts) {
  IntPoly v = counts;
  const auto& phi = cached_phi(c);
  if (v.size() < phi.size()) v.resize(phi.size(), 0);
  reduce_in_place(v, phi);
  return v;
}

CycInt::CycInt(std::uint64_t c, IntPoly poly) : c_(c), coeffs_(reduce_mod_cyclotomic(c, poly)) {}

CycInt CycInt::integer(std::uint64_t c, std::int64_t n) { return CycInt(c, IntPoly{n}); }

CycInt CycInt::zeta_power(std::uint64_t c, std::uint64_t k) {
  IntPoly p(c, 0);
  p[k % c] = 1;
  return CycInt(c, std::move(p));
}

bool CycInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t v) { return v == 0; });
}

CycInt CycInt::operator+(const CycInt& o) const {
  if (c_ != o.c_) throw InvalidArgument("cyclotomic integers of different conductors");
  CycInt r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  if (c_ != o.c_) throw InvalidArgument("cyclotomic integers of different conductors");
  CycInt r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  if (c_ != o.c_) throw InvalidArgument("cyclotomic integers of different conductors");
  IntPoly prod(coeffs_.size() + o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return CycInt(c_, std::move(prod));
}

CharacterTable::CharacterTable(RingPtr ring) : ring_(std::move(ring)), c_(ring_->characteristic()) {
  const CGRing& R = *ring_;
  e_.assign(R.size(), 0);
  for (std::uint32_t x = 0; x < R.size(); ++x) {
    std::uint64_t e = 0;
    for (std::size_t k = 0; k < R.component_count(); ++k) {
      const auto& comp = R.components()[k];
      const std::uint64_t weight = c_ / comp.characteristic();
      e = (e + weight * comp.trace(R.part(x, k))) % c_;
    }
    e_[x] = e;
  }
  // chi is faithful iff its kernel contains no minimal ideal.
  for (auto I : R.minimal_ideals()) {
    bool trivial = true;
    R.elements(I).for_each([&](std::uint32_t x) { trivial = trivial && e_[x] == 0; });
    if (trivial) throw Falsification("generating character is trivial on the ideal " + std::to_string(I.m) + "R");
  }
  const auto& phi = cached_phi(c_);
  if (c_ * (phi.size() - 1) > (std::uint64_t{1} << 22)) return;
  powers_.reserve(c_);
  for (std::uint64_t k = 0; k < c_; ++k) {
    IntPoly v(std::max<std::size_t>(k + 1, phi.size()), 0);
    v[k] = 1;
    reduce_in_place(v, phi);
    powers_.push_back(std::move(v));
  }
}

IntPoly CharacterTable::exponent_counts(std::uint32_t r, const ElementSet& S) const {
  IntPoly counts(c_, 0);
  S.for_each([&](std::uint32_t s) { ++counts[e_[ring_->mul(r, s)]]; });
  return counts;
}

IntPoly CharacterTable::char_sum_coeffs(std::uint32_t r, const ElementSet& S) const {
  const auto counts = exponent_counts(r, S);
  if (powers_.empty()) return reduce_mod_cyclotomic(c_, counts);
  IntPoly out(powers_[0].size(), 0);
  for (std::uint64_t k = 0; k < c_; ++k) {
    if (counts[k] == 0) continue;
    const auto& row = powers_[k];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += counts[k] * row[i];
  }
  return out;
}

CycInt CharacterTable::char_sum(std::uint32_t r, const ElementSet& S) const {
  return CycInt(c_, char_sum_coeffs(r, S));
}

CycInt char_sum(const RingPtr& ring, std::uint32_t r, const ElementSet& S) {
  return CharacterTable(ring).char_sum(r, S);
}

SRing dual_sring(const SRing& A, unsigned threads) {
  const CharacterTable table(A.ring());
  const std::uint32_t n = A.ring()->size();
  std::vector<IntPoly> keys(n);
  parallel_for(n, threads == 0 ? default_threads() : threads, [&](std::size_t r) {
    IntPoly key;
    for (std::size_t i = 0; i < A.rank(); ++i) {
      const auto sum = table.char_sum_coeffs(static_cast<std::uint32_t>(r), A.class_set(i));
      key.insert(key.end(), sum.begin(), sum.end());
    }
    keys[r] = std::move(key);
  });
  std::map<IntPoly, std::uint32_t> ids;
  Partition blocks;
  for (std::uint32_t r = 0; r < n; ++r) {
    auto [it, fresh] = ids.emplace(keys[r], static_cast<std::uint32_t>(blocks.size()));
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(r);
  }
  if (blocks.size() != A.rank()) {
    throw Falsification("dual partition has rank " + std::to_string(blocks.size()) + " but the S-ring has rank " +
                        std::to_string(A.rank()));
  }
  return SRing::from_partition(A.ring(), std::move(blocks));
}

DualityReport check_duality_theorems(const SRing& A) {
  DualityReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.failures.push_back(std::move(message));
  };
  const CGRing& R = *A.ring();
  const SRing D = dual_sring(A);

  if (!verify_sring(D.ring(), D.classes()).ok) fail("dual partition is not an S-ring");
  if (!(dual_sring(D) == A)) fail("dual of the dual differs from the S-ring");

  std::vector<Ideal> expected;
  for (auto I : a_ideals(A)) expected.push_back(R.perp(I));
  std::sort(expected.begin(), expected.end());
  auto dual_ideals = a_ideals(D);
  std::sort(dual_ideals.begin(), dual_ideals.end());
  if (expected != dual_ideals) fail("dual A-ideals are not the perps of the A-ideals");

  std::set<std::pair<std::uint64_t, std::uint64_t>> certs, dual_certs;
  for (const auto& c : wreath_pairs(A)) certs.insert({R.perp(c.J).m, R.perp(c.I).m});
  for (const auto& c : wreath_pairs(D)) dual_certs.insert({c.I.m, c.J.m});
  for (const auto& [i, j] : certs) {
    if (!dual_certs.count({i, j})) fail("certificate " + perp_pair({i}, {j}) + " missing on the dual");
  }
  for (const auto& [i, j] : dual_certs) {
    if (!certs.count({i, j})) fail("dual certificate " + perp_pair({i}, {j}) + " has no counterpart");
  }

  const auto primes = R.prime_set();
  for (std::uint32_t mask = 1; mask + 1 < (1u << primes.size()); ++mask) {
    PrimeSet Q;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1u << i)) Q.push_back(primes[i]);
    }
    const auto split = is_tensor_over(A, Q);
    const auto dual_split = is_tensor_over(D, Q);
    if (split.ok != dual_split.ok) {
      fail("tensor decomposability over a prime subset differs between the S-ring and its dual");
      continue;
    }
    if (split.ok && (!(dual_sring(*split.on_q) == *dual_split.on_q) ||
                     !(dual_sring(*split.on_complement) == *dual_split.on_complement))) {
      fail("dual of a tensor factor differs from the factor of the dual");
    }
  }

  for (auto J : a_ideals(A)) {
    try {
      if (!(dual_sring(quotient_sring(A, J)) == restrict_to(D, R.perp(J)))) {
        fail("dual of the quotient by " + std::to_string(J.m) + "R differs from the restriction of the dual");
      }
      if (!(dual_sring(restrict_to(A, J)) == quotient_sring(D, R.perp(J)))) {
        fail("dual of the restriction to " + std::to_string(J.m) + "R differs from the quotient of the dual");
      }
    } catch (const Error& e) {
      fail(std::string("quotient/restriction exchange failed: ") + e.what());
    }
  }

  if (is_pure(A) && !is_pure(D)) fail("dual of a pure S-ring is not pure");
  return report;
}

SeparationResult separation_check(const CharacterTable& table, const ElementSet& S, const ElementSet& S2,
                                  const UnitSubgroup& K) {
  if (S.empty()) throw EmptySet("separation check needs a nonempty S");
  const auto orbit = K.orbit(S.first());
  if (!S.is_subset_of(orbit) || !S2.is_subset_of(orbit)) {
    throw InvalidArgument("S and S2 must lie in a single K-orbit");
  }
  SeparationResult result;
  for (auto r : table.ring()->units()) {
    const auto a = table.char_sum_coeffs(r, S);
    if (!result.separating_unit && a != table.char_sum_coeffs(r, S2)) result.separating_unit = r;
    if (!result.nonzero_unit && std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v != 0; })) {
      result.nonzero_unit = r;
    }
    if (result.separating_unit && result.nonzero_unit) break;
  }
  return result;
}

}  // namespace schur
