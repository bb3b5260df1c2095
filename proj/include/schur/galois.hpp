#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schur {

// Element of GR(p^n,d): coefficient i multiplies x^i, each in [0, p^n).
struct GrElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const GrElement&, const GrElement&) = default;
};

// Upper bound on p^{nd} accepted by GaloisRing::make. Reads SCHUR_MAX_ORDER
// from the environment, falling back to 2^20.
std::uint64_t default_max_ring_order();

bool is_prime(std::uint64_t n);

// Galois ring GR(p^n,d) = Z_{p^n}[x]/(f) with f monic of degree d and
// irreducible mod p.
//
// Elements are addressed by their index sum_i a_i (p^n)^i, which is also the
// serialization order. All operations are pure; the ring never changes after
// construction.
class GaloisRing {
 public:
  // Picks the smallest monic irreducible of degree d over GF(p) (ordered by
  // sum_i c_i p^i over the non-leading coefficients) and lifts it unchanged.
  static GaloisRing make(std::uint32_t p, std::uint32_t n, std::uint32_t d,
                         std::uint64_t max_order = default_max_ring_order());

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t d() const { return d_; }
  // p^n
  std::uint32_t characteristic() const { return char_; }
  // p^{nd}
  std::uint32_t order() const { return order_; }
  std::uint32_t unit_count() const;
  bool is_field() const { return n_ == 1; }
  // Monic modulus, low degree first, length d+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // "GR(4,2)", "GR(9)".
  std::string spec() const;

  GrElement element(std::uint32_t index) const;
  std::uint32_t index(const GrElement& a) const;

  GrElement add(const GrElement& a, const GrElement& b) const;
  GrElement neg(const GrElement& a) const;
  GrElement mul(const GrElement& a, const GrElement& b) const;
  // Throws NotAUnit when a lies in pR.
  GrElement inv(const GrElement& a) const;
  GrElement frobenius(const GrElement& a) const;
  std::uint32_t trace(const GrElement& a) const;

  // Index-level arithmetic used by the rest of the library.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t frobenius(std::uint32_t a) const;
  std::uint32_t trace(std::uint32_t a) const;
  // Integer multiple k*a.
  std::uint32_t scale(std::uint32_t a, std::uint64_t k) const;

  bool is_unit(std::uint32_t a) const;
  // Largest k <= n with a in p^k R.
  std::uint32_t valuation(std::uint32_t a) const;
  // The Teichmueller representative congruent to a mod p (0 for a in pR).
  std::uint32_t teichmuller(std::uint32_t a) const;

  std::vector<std::uint32_t> units() const;
  // Cyclic group of order p^d - 1, sorted by index.
  std::vector<std::uint32_t> teichmuller_group() const;
  // 1 + pR, sorted by index.
  std::vector<std::uint32_t> principal_units() const;

  // Index of the element a + p^k x^i style generators: the additive basis
  // p^k x^i, i < d, of the ideal p^k R.
  std::vector<std::uint32_t> ideal_generators(std::uint32_t k) const;

  friend bool operator==(const GaloisRing& a, const GaloisRing& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.d_ == b.d_ && a.modulus_ == b.modulus_;
  }

 private:
  GaloisRing() = default;
  GrElement mul_raw(const GrElement& a, const GrElement& b) const;
  std::uint32_t frobenius_raw(std::uint32_t a) const;

  std::uint32_t p_ = 0, n_ = 0, d_ = 0, char_ = 0, order_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Populated when order_ is small; indexed a * order_ + b.
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> frob_table_;
};

// Monic irreducibility over GF(p) via gcd(x^{p^k} - x, f) for k <= d/2.
// Coefficients low degree first, leading coefficient 1.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);

}  // namespace schur
