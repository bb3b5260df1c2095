#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/cgring.hpp"
#include "schur/sring.hpp"

namespace schur {

// Integer coefficients, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

// The c-th cyclotomic polynomial, by dividing x^c - 1 by Phi_d for the proper
// divisors d of c.
IntPoly cyclotomic_polynomial(std::uint64_t c);

// Element of Z[zeta_c] = Z[x]/(Phi_c), stored as phi(c) coefficients.
class CycInt {
 public:
  CycInt() = default;
  // Reduces an arbitrary polynomial modulo Phi_c.
  CycInt(std::uint64_t c, IntPoly poly);
  static CycInt integer(std::uint64_t c, std::int64_t n);
  static CycInt zeta_power(std::uint64_t c, std::uint64_t k);

  std::uint64_t conductor() const { return c_; }
  const IntPoly& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  friend bool operator==(const CycInt&, const CycInt&) = default;

 private:
  std::uint64_t c_ = 1;
  IntPoly coeffs_;
};

// Reduces sum_k counts[k] x^k modulo Phi_c; counts has length c.
IntPoly reduce_mod_cyclotomic(std::uint64_t c, const IntPoly& counts);

// The generating character chi(x) = zeta_c^e(x) with
// e(x) = sum_p (c / c_p) Tr_p(x_p) mod c, and chi^(r)(x) = chi(r x).
class CharacterTable {
 public:
  // Throws Falsification if chi is not faithful.
  explicit CharacterTable(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::uint64_t conductor() const { return c_; }
  std::uint64_t exponent(std::uint32_t x) const { return e_[x]; }
  // Exponent counts (|{s in S : e(r s) = k}|)_k, length c.
  IntPoly exponent_counts(std::uint32_t r, const ElementSet& S) const;
  CycInt char_sum(std::uint32_t r, const ElementSet& S) const;
  // Coefficient vector of char_sum(r, S), for use as a comparison key.
  IntPoly char_sum_coeffs(std::uint32_t r, const ElementSet& S) const;

 private:
  RingPtr ring_;
  std::uint64_t c_ = 1;
  std::vector<std::uint64_t> e_;
  // Row k holds x^k mod Phi_c.
  std::vector<IntPoly> powers_;
};

CycInt char_sum(const RingPtr& ring, std::uint32_t r, const ElementSet& S);

// Partition of R (labels of characters) by equal sums on every class.
// Throws Falsification if the rank changes.
SRing dual_sring(const SRing& A, unsigned threads = 0);

struct DualityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Involution, ideal correspondence I -> I^perp, wreath certificates (I, J) ->
// (J^perp, I^perp), tensor splits, quotient/restriction exchange and purity.
DualityReport check_duality_theorems(const SRing& A);

struct SeparationResult {
  // A unit r with char_sum(r, S) != char_sum(r, S2).
  std::optional<std::uint32_t> separating_unit;
  // A unit r with char_sum(r, S) != 0; any unit character then has the
  // nonzero translate rS after relabeling.
  std::optional<std::uint32_t> nonzero_unit;
};

// Throws InvalidArgument unless S is nonempty and S, S2 lie in the K-orbit
// of an element of S.
SeparationResult separation_check(const CharacterTable& table, const ElementSet& S, const ElementSet& S2,
                                  const UnitSubgroup& K);

}  // namespace schur
