#include "schur/cgring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "schur/errors.hpp"

namespace schur {

namespace {

constexpr std::uint32_t kGlobalTableLimit = 1024;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Parses "GR(" number ["^" number] ["," number] ")" starting at pos.
struct SpecParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
      ++pos;
    }
    if (pos == start) fail("expected a number");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring spec '" + std::string(s) + "': " + what + " at offset " + std::to_string(pos));
  }
};

// Splits q = p^n with p prime; nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t n = 0;
    while (q % p == 0) {
      q /= p;
      ++n;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), n};
  }
  return std::pair{static_cast<std::uint32_t>(q), 1u};
}

}  // namespace

CGRing::CGRing(std::vector<GaloisRing> components) : components_(std::move(components)) {
  strides_.reserve(components_.size());
  std::uint64_t size = 1;
  for (const auto& c : components_) {
    strides_.push_back(static_cast<std::uint32_t>(size));
    size *= c.order();
    if (size > default_max_ring_order() && size > (std::uint64_t{1} << 31)) {
      throw SizeLimitExceeded("CG-ring order exceeds index range");
    }
    characteristic_ *= c.characteristic();
    primes_.push_back(c.p());
  }
  size_ = static_cast<std::uint32_t>(size);
  one_ = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) one_ += strides_[k];

  neg_table_.resize(size_);
  for (std::uint32_t x = 0; x < size_; ++x) {
    std::uint32_t r = 0;
    for (std::size_t k = 0; k < components_.size(); ++k) r += components_[k].neg(part(x, k)) * strides_[k];
    neg_table_[x] = r;
  }

  unit_set_ = ElementSet(size_);
  for (std::uint32_t x = 0; x < size_; ++x) {
    bool unit = true;
    for (std::size_t k = 0; k < components_.size() && unit; ++k) unit = components_[k].is_unit(part(x, k));
    if (unit) {
      units_.push_back(x);
      unit_set_.insert(x);
    }
  }

  if (size_ <= kGlobalTableLimit) {
    add_table_.resize(std::size_t{size_} * size_);
    mul_table_.resize(std::size_t{size_} * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      for (std::uint32_t b = 0; b < size_; ++b) {
        std::uint32_t s = 0, m = 0;
        for (std::size_t k = 0; k < components_.size(); ++k) {
          s += components_[k].add(part(a, k), part(b, k)) * strides_[k];
          m += components_[k].mul(part(a, k), part(b, k)) * strides_[k];
        }
        add_table_[std::size_t{a} * size_ + b] = s;
        mul_table_[std::size_t{a} * size_ + b] = m;
      }
    }
  }

  // Greedy generators of R^x.
  ElementSet covered(size_);
  covered.insert(one_);
  std::vector<std::uint32_t> members{one_};
  for (auto u : units_) {
    if (covered.contains(u)) continue;
    unit_generators_.push_back(u);
    const ElementSet before = covered;
    const std::vector<std::uint32_t> base = members;
    for (std::uint32_t power = u; !before.contains(power); power = mul(power, u)) {
      for (auto h : base) {
        const std::uint32_t v = mul(power, h);
        if (!covered.contains(v)) {
          covered.insert(v);
          members.push_back(v);
        }
      }
    }
  }
}

RingPtr CGRing::make(std::vector<GaloisRing> components) {
  if (components.empty()) throw InvalidArgument("CG-ring needs at least one component");
  std::set<std::uint32_t> seen;
  for (const auto& c : components) {
    if (!seen.insert(c.p()).second) {
      throw InvalidArgument("CG-ring components share the prime " + std::to_string(c.p()));
    }
  }
  return RingPtr(new CGRing(std::move(components)));
}

RingPtr CGRing::trivial() { return RingPtr(new CGRing({})); }

RingPtr CGRing::parse(std::string_view spec, std::uint64_t max_order) {
  SpecParser ps{spec};
  std::vector<GaloisRing> comps;
  while (true) {
    ps.skip_ws();
    if (!(ps.eat('G') && ps.eat('R'))) ps.fail("expected 'GR'");
    ps.expect('(');
    std::uint64_t q = ps.number();
    if (ps.eat('^')) {
      const std::uint64_t e = ps.number();
      if (e == 0 || e > 40) ps.fail("bad exponent");
      if (!is_prime(q)) ps.fail(std::to_string(q) + " is not prime");
      std::uint64_t v = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        v *= q;
        if (v > (std::uint64_t{1} << 40)) ps.fail("characteristic too large");
      }
      q = v;
    }
    std::uint64_t d = 1;
    if (ps.eat(',')) d = ps.number();
    ps.expect(')');
    const auto pn = prime_power(q);
    if (!pn) ps.fail(std::to_string(q) + " is not a prime power");
    if (d == 0 || d > 64) ps.fail("bad residue degree");
    comps.push_back(GaloisRing::make(pn->first, pn->second, static_cast<std::uint32_t>(d), max_order));
    ps.skip_ws();
    if (ps.pos == spec.size()) break;
    if (!ps.eat('x')) ps.fail("expected 'x' between components");
  }
  return make(std::move(comps));
}

PrimeSet CGRing::prime_set() const {
  PrimeSet q = primes_;
  std::sort(q.begin(), q.end());
  return q;
}

std::optional<std::size_t> CGRing::component_of(std::uint32_t p) const {
  for (std::size_t k = 0; k < primes_.size(); ++k) {
    if (primes_[k] == p) return k;
  }
  return std::nullopt;
}

std::string CGRing::spec() const {
  std::string s;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += "x";
    s += components_[k].spec();
  }
  return s;
}

std::uint32_t CGRing::compose(std::span<const std::uint32_t> parts) const {
  std::uint32_t x = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) x += parts[k] * strides_[k];
  return x;
}

std::uint32_t CGRing::embed_unit(std::size_t k, std::uint32_t value) const {
  return one_ - strides_[k] + value * strides_[k];
}

std::uint32_t CGRing::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * size_ + b];
  std::uint32_t s = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    s += components_[k].add(part(a, k), part(b, k)) * strides_[k];
  }
  return s;
}

std::uint32_t CGRing::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * size_ + b];
  std::uint32_t s = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    s += components_[k].mul(part(a, k), part(b, k)) * strides_[k];
  }
  return s;
}

std::uint32_t CGRing::scale(std::uint32_t a, std::uint64_t m) const {
  std::uint32_t s = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    s += components_[k].scale(part(a, k), m) * strides_[k];
  }
  return s;
}

std::uint32_t CGRing::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = one_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t CGRing::inv(std::uint32_t a) const {
  if (!is_unit(a)) throw NotAUnit(spec() + ": element " + std::to_string(a) + " is not a unit");
  std::uint32_t r = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) r += components_[k].inv(part(a, k)) * strides_[k];
  return r;
}

std::vector<Ideal> CGRing::ideals() const {
  std::vector<Ideal> out;
  for (std::uint64_t m = 1; m <= characteristic_; ++m) {
    if (characteristic_ % m == 0) out.push_back({m});
  }
  return out;
}

std::vector<std::uint32_t> CGRing::exponents(Ideal I) const {
  if (!is_ideal(I)) throw InvalidArgument(std::to_string(I.m) + " does not divide " + std::to_string(characteristic_));
  std::vector<std::uint32_t> k(components_.size(), 0);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    std::uint64_t m = I.m;
    while (m % primes_[i] == 0 && k[i] < components_[i].n()) {
      m /= primes_[i];
      ++k[i];
    }
  }
  return k;
}

Ideal CGRing::from_exponents(std::span<const std::uint32_t> k) const {
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < components_.size(); ++i) m *= ipow(primes_[i], k[i]);
  return {m};
}

bool CGRing::contains(Ideal I, std::uint32_t x) const {
  const auto k = exponents(I);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].valuation(part(x, i)) < k[i]) return false;
  }
  return true;
}

ElementSet CGRing::elements(Ideal I) const {
  const auto k = exponents(I);
  ElementSet out(size_);
  for (std::uint32_t x = 0; x < size_; ++x) {
    bool in = true;
    for (std::size_t i = 0; i < components_.size() && in; ++i) in = components_[i].valuation(part(x, i)) >= k[i];
    if (in) out.insert(x);
  }
  return out;
}

std::uint32_t CGRing::ideal_size(Ideal I) const {
  const auto k = exponents(I);
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    s *= ipow(primes_[i], (components_[i].n() - k[i]) * components_[i].d());
  }
  return static_cast<std::uint32_t>(s);
}

Ideal CGRing::sum(Ideal I, Ideal J) const { return {std::gcd(I.m, J.m)}; }

Ideal CGRing::intersection(Ideal I, Ideal J) const { return {std::lcm(I.m, J.m)}; }

std::vector<Ideal> CGRing::maximal_ideals() const {
  std::vector<Ideal> out;
  for (auto p : prime_set()) out.push_back({p});
  return out;
}

std::vector<Ideal> CGRing::minimal_ideals() const {
  std::vector<Ideal> out;
  for (auto p : prime_set()) out.push_back({characteristic_ / p});
  return out;
}

Ideal CGRing::I0() const {
  std::uint64_t m = 1;
  for (const auto& c : components_) m *= c.characteristic() / c.p();
  return {m};
}

Ideal CGRing::component_ideal(const PrimeSet& Q) const {
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!std::binary_search(Q.begin(), Q.end(), primes_[i])) m *= components_[i].characteristic();
  }
  return {m};
}

Ideal CGRing::IL(const ElementSet& X) const {
  if (X.empty()) throw EmptySet("IL of the empty set");
  const auto members = X.indices();
  std::vector<std::uint32_t> k(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& comp = components_[i];
    k[i] = comp.n();
    for (std::uint32_t j = 0; j < comp.n(); ++j) {
      bool closed = true;
      for (auto g : comp.ideal_generators(j)) {
        const std::uint32_t shift = g * strides_[i];
        for (auto x : members) {
          if (!X.contains(add(x, shift))) {
            closed = false;
            break;
          }
        }
        if (!closed) break;
      }
      if (closed) {
        k[i] = j;
        break;
      }
    }
  }
  return from_exponents(k);
}

Ideal CGRing::IU(const ElementSet& X) const {
  if (X.empty()) throw EmptySet("IU of the empty set");
  std::vector<std::uint32_t> k(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    std::uint32_t v = components_[i].n();
    X.for_each([&](std::uint32_t x) { v = std::min(v, components_[i].valuation(part(x, i))); });
    k[i] = v;
  }
  return from_exponents(k);
}

Ideal CGRing::annihilator(const ElementSet& X) const {
  if (X.empty()) return whole();
  std::vector<std::uint32_t> k(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    std::uint32_t v = components_[i].n();
    X.for_each([&](std::uint32_t x) { v = std::min(v, components_[i].valuation(part(x, i))); });
    k[i] = components_[i].n() - v;
  }
  return from_exponents(k);
}

std::vector<bool> CGRing::component_mask(const PrimeSet& Q) const {
  std::vector<bool> mask(components_.size());
  for (auto p : Q) {
    const auto k = component_of(p);
    if (!k) throw InvalidArgument("prime " + std::to_string(p) + " is not in P(R) of " + spec());
    mask[*k] = true;
  }
  return mask;
}

std::uint32_t CGRing::project(std::uint32_t x, const PrimeSet& Q) const {
  const auto mask = component_mask(Q);
  std::uint32_t r = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (mask[k]) r += part(x, k) * strides_[k];
  }
  return r;
}

ElementSet CGRing::project(const ElementSet& X, const PrimeSet& Q) const {
  const auto mask = component_mask(Q);
  ElementSet out(size_);
  X.for_each([&](std::uint32_t x) {
    std::uint32_t r = 0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      if (mask[k]) r += part(x, k) * strides_[k];
    }
    out.insert(r);
  });
  return out;
}

RingPtr CGRing::sub_ring(const PrimeSet& Q) const {
  const auto mask = component_mask(Q);
  std::vector<GaloisRing> comps;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (mask[k]) comps.push_back(components_[k]);
  }
  if (comps.empty()) return trivial();
  return RingPtr(new CGRing(std::move(comps)));
}

std::uint32_t CGRing::to_sub(std::uint32_t x, const PrimeSet& Q) const {
  const auto mask = component_mask(Q);
  std::uint32_t r = 0, s = 1;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (!mask[k]) continue;
    r += part(x, k) * s;
    s *= components_[k].order();
  }
  return r;
}

std::uint32_t CGRing::from_sub(std::uint32_t y, const PrimeSet& Q) const {
  const auto mask = component_mask(Q);
  std::uint32_t r = 0;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (!mask[k]) continue;
    r += (y % components_[k].order()) * strides_[k];
    y /= components_[k].order();
  }
  return r;
}

Quotient CGRing::quotient(Ideal I) const {
  const auto k = exponents(I);
  std::vector<GaloisRing> comps;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (k[i] == 0) continue;
    const auto& c = components_[i];
    comps.push_back(k[i] == c.n() ? c : GaloisRing::make(c.p(), k[i], c.d(), std::uint64_t{c.order()}));
    kept.push_back(i);
  }
  Quotient q;
  q.ideal = I;
  q.ring = comps.empty() ? trivial() : RingPtr(new CGRing(std::move(comps)));
  q.map.resize(size_);
  q.section.assign(q.ring->size(), 0);
  std::vector<bool> seen(q.ring->size(), false);
  for (std::uint32_t x = 0; x < size_; ++x) {
    std::uint32_t y = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const auto& src = components_[kept[j]];
      const auto& dst = q.ring->components()[j];
      GrElement e = src.element(part(x, kept[j]));
      for (auto& c : e.coeffs) c %= dst.characteristic();
      y += dst.index(e) * q.ring->stride(j);
    }
    q.map[x] = y;
    if (!seen[y]) {
      seen[y] = true;
      q.section[y] = x;
    }
  }
  return q;
}

IdealRing CGRing::ideal_ring(std::uint64_t m) const {
  if (m == 0 || characteristic_ % m != 0) {
    throw InvalidArgument(std::to_string(m) + " does not divide the characteristic " + std::to_string(characteristic_));
  }
  const Quotient q = quotient(annihilator(make_set(std::vector<std::uint32_t>{scale(one_, m)})));
  IdealRing r;
  r.ring = q.ring;
  r.m = m;
  r.f = q.map;
  r.to_ideal.resize(q.ring->size());
  r.from_ideal.assign(size_, 0);
  for (std::uint32_t y = 0; y < q.ring->size(); ++y) {
    const std::uint32_t x = scale(q.section[y], m);
    r.to_ideal[y] = x;
    r.from_ideal[x] = y;
  }
  return r;
}

ElementSet CGRing::full_set() const {
  ElementSet s(size_);
  for (std::uint32_t x = 0; x < size_; ++x) s.insert(x);
  return s;
}

// ---------------------------------------------------------------------------

UnitSubgroup::UnitSubgroup(RingPtr ring, ElementSet set, std::vector<std::uint32_t> generators)
    : ring_(std::move(ring)), set_(std::move(set)), members_(set_.indices()), generators_(std::move(generators)) {}

UnitSubgroup UnitSubgroup::from_members(RingPtr ring, std::span<const std::uint32_t> members) {
  ElementSet s = ring->make_set(members);
  if (!s.contains(ring->one())) throw InvalidArgument("subgroup must contain 1");
  const auto xs = s.indices();
  for (auto x : xs) {
    if (!ring->is_unit(x)) throw InvalidArgument("element " + std::to_string(x) + " is not a unit");
  }
  for (auto x : xs) {
    for (auto y : xs) {
      if (!s.contains(ring->mul(x, y))) {
        throw InvalidArgument("set is not multiplicatively closed: " + std::to_string(x) + "*" +
                              std::to_string(y));
      }
    }
  }
  return UnitSubgroup(std::move(ring), std::move(s), {});
}

UnitSubgroup UnitSubgroup::generated(RingPtr ring, std::span<const std::uint32_t> generators) {
  UnitSubgroup g = trivial(std::move(ring));
  for (auto x : generators) {
    if (!g.ring_->is_unit(x)) throw InvalidArgument("generator " + std::to_string(x) + " is not a unit");
    if (!g.contains(x)) g = g.join(x);
  }
  return g;
}

UnitSubgroup UnitSubgroup::whole(RingPtr ring) {
  ElementSet s = ring->unit_set();
  auto gens = ring->unit_generators();
  return UnitSubgroup(std::move(ring), std::move(s), std::move(gens));
}

UnitSubgroup UnitSubgroup::trivial(RingPtr ring) {
  ElementSet s(ring->size());
  s.insert(ring->one());
  return UnitSubgroup(std::move(ring), std::move(s), {});
}

UnitSubgroup UnitSubgroup::join(std::uint32_t g) const {
  ElementSet s = set_;
  std::uint32_t power = g;
  while (!set_.contains(power)) {
    for (auto h : members_) s.insert(ring_->mul(power, h));
    power = ring_->mul(power, g);
  }
  auto gens = generators_;
  gens.push_back(g);
  return UnitSubgroup(ring_, std::move(s), std::move(gens));
}

ElementSet UnitSubgroup::orbit(std::uint32_t x) const {
  ElementSet s(ring_->size());
  for (auto k : members_) s.insert(ring_->mul(k, x));
  return s;
}

Partition unit_orbit_partition(const UnitSubgroup& K) {
  const auto& R = *K.ring();
  std::vector<bool> done(R.size(), false);
  Partition out;
  for (std::uint32_t x = 0; x < R.size(); ++x) {
    if (done[x]) continue;
    auto orbit = K.orbit(x).indices();
    for (auto y : orbit) done[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

Partition canonical_partition(Partition blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

std::vector<std::uint32_t> principal_ranks(const UnitSubgroup& L) {
  const auto& R = *L.ring();
  std::vector<std::uint32_t> ranks(R.component_count(), 0);
  for (std::size_t k = 0; k < R.component_count(); ++k) {
    const auto& comp = R.components()[k];
    // Elements of L that are 1 off component k, principal on it, of order | p.
    std::uint64_t torsion = 0;
    for (auto u : L.members()) {
      bool ok = true;
      for (std::size_t j = 0; j < R.component_count() && ok; ++j) {
        if (j != k) ok = R.part(u, j) == 1;
      }
      if (!ok) continue;
      const std::uint32_t uk = R.part(u, k);
      if (comp.valuation(comp.add(uk, comp.neg(1))) < 1) continue;
      if (comp.pow(uk, comp.p()) == 1) ++torsion;
    }
    std::uint32_t r = 0;
    while (torsion > 1) {
      torsion /= comp.p();
      ++r;
    }
    ranks[k] = r;
  }
  return ranks;
}

bool is_pure_by_rank(const UnitSubgroup& L) {
  const auto& R = *L.ring();
  if (!R.is_odd()) throw InvalidArgument("rank purity criterion needs odd characteristic");
  const auto ranks = principal_ranks(L);
  for (std::size_t k = 0; k < R.component_count(); ++k) {
    const auto& comp = R.components()[k];
    if (comp.is_field()) continue;
    if (ranks[k] >= comp.d()) return false;
  }
  return true;
}

}  // namespace schur
