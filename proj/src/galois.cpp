#include "schur/galois.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "schur/errors.hpp"

namespace schur {

namespace {

constexpr std::uint32_t kTableLimit = 1024;

using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inverse_mod_prime(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inverse_mod_prime(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::int64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = mod(a[shift + i] - factor * b[i], p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::int64_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > bound / base) return bound + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t default_max_ring_order() {
  if (const char* env = std::getenv("SCHUR_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 20;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f_in, std::uint32_t p) {
  Poly f(f_in.begin(), f_in.end());
  for (auto& c : f) c = mod(c, p);
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // h = x^{p^k} mod f
  Poly h{0, 1};
  for (std::size_t k = 1; k <= d / 2; ++k) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;  // x^{p^k} = x mod f: factor of degree | k
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

GaloisRing GaloisRing::make(std::uint32_t p, std::uint32_t n, std::uint32_t d,
                            std::uint64_t max_order) {
  if (!is_prime(p)) throw InvalidArgument("GR: " + std::to_string(p) + " is not prime");
  if (n == 0 || d == 0) throw InvalidArgument("GR: n and d must be positive");
  const std::uint64_t bound = std::min<std::uint64_t>(max_order, std::numeric_limits<std::uint32_t>::max());
  const std::uint64_t order = checked_pow(p, std::uint64_t{n} * d, bound);
  if (order > bound) {
    throw SizeLimitExceeded("GR(" + std::to_string(p) + "^" + std::to_string(n) + "," +
                            std::to_string(d) + ") exceeds the ring order bound " +
                            std::to_string(bound));
  }

  GaloisRing r;
  r.p_ = p;
  r.n_ = n;
  r.d_ = d;
  r.char_ = static_cast<std::uint32_t>(checked_pow(p, n, bound));
  r.order_ = static_cast<std::uint32_t>(order);

  const std::uint64_t candidates = checked_pow(p, d, bound);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::vector<std::uint32_t> f(d + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[d] = 1;
    if (is_irreducible_mod_p(f, p)) {
      r.modulus_ = std::move(f);
      break;
    }
  }
  if (r.modulus_.empty()) throw Error("GR: no irreducible polynomial found");

  if (r.order_ <= kTableLimit) {
    const std::uint32_t q = r.order_;
    r.mul_table_.resize(std::size_t{q} * q);
    std::vector<GrElement> elems(q);
    for (std::uint32_t a = 0; a < q; ++a) elems[a] = r.element(a);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = a; b < q; ++b) {
        const std::uint32_t v = r.index(r.mul_raw(elems[a], elems[b]));
        r.mul_table_[std::size_t{a} * q + b] = v;
        r.mul_table_[std::size_t{b} * q + a] = v;
      }
    }
    r.frob_table_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) r.frob_table_[a] = r.frobenius_raw(a);
  }
  return r;
}

std::uint32_t GaloisRing::unit_count() const { return order_ - order_ / static_cast<std::uint32_t>(checked_pow(p_, d_, order_)); }

std::string GaloisRing::spec() const {
  std::string s = "GR(" + std::to_string(char_);
  if (d_ != 1) s += "," + std::to_string(d_);
  return s + ")";
}

GrElement GaloisRing::element(std::uint32_t index) const {
  GrElement a;
  a.coeffs.resize(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    a.coeffs[i] = index % char_;
    index /= char_;
  }
  return a;
}

std::uint32_t GaloisRing::index(const GrElement& a) const {
  std::uint32_t idx = 0;
  for (std::uint32_t i = d_; i-- > 0;) idx = idx * char_ + a.coeffs[i];
  return idx;
}

GrElement GaloisRing::add(const GrElement& a, const GrElement& b) const {
  GrElement r;
  r.coeffs.resize(d_);
  for (std::uint32_t i = 0; i < d_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % char_;
  return r;
}

GrElement GaloisRing::neg(const GrElement& a) const {
  GrElement r;
  r.coeffs.resize(d_);
  for (std::uint32_t i = 0; i < d_; ++i) r.coeffs[i] = (char_ - a.coeffs[i]) % char_;
  return r;
}

GrElement GaloisRing::mul_raw(const GrElement& a, const GrElement& b) const {
  const std::uint64_t m = char_;
  std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < d_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % m;
    }
  }
  // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
  for (std::size_t k = prod.size(); k-- > d_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < d_; ++i) {
      prod[k - d_ + i] = (prod[k - d_ + i] + (m - c) * modulus_[i]) % m;
    }
  }
  GrElement r;
  r.coeffs.assign(prod.begin(), prod.begin() + d_);
  return r;
}

GrElement GaloisRing::mul(const GrElement& a, const GrElement& b) const {
  if (!mul_table_.empty()) return element(mul(index(a), index(b)));
  return mul_raw(a, b);
}

GrElement GaloisRing::inv(const GrElement& a) const { return element(inv(index(a))); }

GrElement GaloisRing::frobenius(const GrElement& a) const { return element(frobenius(index(a))); }

std::uint32_t GaloisRing::trace(const GrElement& a) const { return trace(index(a)); }

std::uint32_t GaloisRing::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += ((a % char_ + b % char_) % char_) * scale;
    a /= char_;
    b /= char_;
    scale *= char_;
  }
  return r;
}

std::uint32_t GaloisRing::neg(std::uint32_t a) const {
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += ((char_ - a % char_) % char_) * scale;
    a /= char_;
    scale *= char_;
  }
  return r;
}

std::uint32_t GaloisRing::scale(std::uint32_t a, std::uint64_t k) const {
  k %= char_;
  std::uint32_t r = 0, s = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += static_cast<std::uint32_t>((a % char_) * k % char_) * s;
    a /= char_;
    s *= char_;
  }
  return r;
}

std::uint32_t GaloisRing::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * order_ + b];
  return index(mul_raw(element(a), element(b)));
}

std::uint32_t GaloisRing::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool GaloisRing::is_unit(std::uint32_t a) const { return valuation(a) == 0; }

std::uint32_t GaloisRing::valuation(std::uint32_t a) const {
  std::uint32_t best = n_;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t c = a % char_;
    a /= char_;
    if (c == 0) continue;
    std::uint32_t v = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

std::uint32_t GaloisRing::inv(std::uint32_t a) const {
  if (!is_unit(a)) {
    throw NotAUnit(spec() + ": element " + std::to_string(a) + " is not a unit");
  }
  return pow(a, unit_count() - 1);
}

std::uint32_t GaloisRing::teichmuller(std::uint32_t a) const {
  const std::uint64_t q = checked_pow(p_, d_, std::numeric_limits<std::uint64_t>::max() / 2);
  std::uint32_t t = a;
  for (std::uint32_t i = 0; i + 1 < n_; ++i) {
    const std::uint32_t next = pow(t, q);
    if (next == t) break;
    t = next;
  }
  return t;
}

std::uint32_t GaloisRing::frobenius_raw(std::uint32_t a) const {
  // a = sum_i t_i p^i with Teichmueller digits t_i; sigma(a) = sum_i t_i^p p^i.
  std::uint32_t result = 0;
  std::uint32_t cur = a;
  std::uint64_t p_pow = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t t = teichmuller(cur);
    result = add(result, scale(pow(t, p_), p_pow));
    const GrElement diff = element(add(cur, neg(t)));
    GrElement shifted;
    shifted.coeffs.resize(d_);
    for (std::uint32_t k = 0; k < d_; ++k) shifted.coeffs[k] = diff.coeffs[k] / p_;
    cur = index(shifted);
    p_pow *= p_;
  }
  return result;
}

std::uint32_t GaloisRing::frobenius(std::uint32_t a) const {
  if (!frob_table_.empty()) return frob_table_[a];
  return frobenius_raw(a);
}

std::uint32_t GaloisRing::trace(std::uint32_t a) const {
  std::uint32_t sum = 0, cur = a;
  for (std::uint32_t i = 0; i < d_; ++i) {
    sum = add(sum, cur);
    cur = frobenius(cur);
  }
  if (sum >= char_) throw Error(spec() + ": trace left the prime subring");
  return sum;
}

std::vector<std::uint32_t> GaloisRing::units() const {
  std::vector<std::uint32_t> out;
  out.reserve(unit_count());
  for (std::uint32_t a = 0; a < order_; ++a) {
    if (is_unit(a)) out.push_back(a);
  }
  return out;
}

std::vector<std::uint32_t> GaloisRing::teichmuller_group() const {
  const std::uint64_t q = checked_pow(p_, d_, std::numeric_limits<std::uint64_t>::max() / 2);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < order_; ++a) {
    if (is_unit(a) && pow(a, q) == a) out.push_back(a);
  }
  return out;
}

std::vector<std::uint32_t> GaloisRing::principal_units() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < order_; ++a) {
    const std::uint32_t b = add(a, neg(1));
    if (valuation(b) >= 1) out.push_back(a);
  }
  return out;
}

std::vector<std::uint32_t> GaloisRing::ideal_generators(std::uint32_t k) const {
  std::vector<std::uint32_t> out;
  if (k >= n_) return out;
  const std::uint32_t pk = static_cast<std::uint32_t>(checked_pow(p_, k, char_));
  std::uint32_t s = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out.push_back(pk * s);
    s *= char_;
  }
  return out;
}

}  // namespace schur
