#pragma once

#include <cstdint>
#include <vector>

#include "sda/bits.hpp"
#include "sda/code.hpp"

namespace sda {

/// Element of P, the ring of even-weight polynomials in GF(2)[x]/(x^p − 1)
/// (the cyclic code generated by x − 1). When s(p) = p − 1 the check
/// polynomial 1 + x + … + x^{p−1} is irreducible and P ≅ GF(2^{p−1}).
///
/// Elements stay in the length-p coefficient basis throughout: the circulant
/// generator-matrix blocks and the x → x^t coordinate moves are literal in
/// this basis. Coefficient i of x^i is bit i; p ≤ 63.
class PElement {
 public:
  PElement() = default;
  PElement(std::uint32_t p, std::uint64_t coeff_bits);
  static PElement from_bitvector(std::uint32_t p, const BitVector& v);

  /// The identity of P: e(x) = x + x^2 + … + x^{p−1}.
  static PElement identity(std::uint32_t p);
  static PElement zero(std::uint32_t p) { return PElement(p, 0); }
  /// The monomial-like unit x^i · e(x).
  static PElement x_times_identity(std::uint32_t p, std::uint32_t i);

  std::uint32_t p() const { return p_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  std::size_t weight() const;
  BitVector to_bitvector() const;

  bool operator==(const PElement&) const = default;

  friend PElement operator+(PElement a, const PElement& b);
  /// Cyclic convolution mod x^p − 1.
  friend PElement operator*(const PElement& a, const PElement& b);

  /// The substitution x → x^t (t coprime to p); a ring automorphism of P.
  PElement substitute(std::uint64_t t) const;
  /// Multiplication by the monomial x^t (a cyclic coefficient shift).
  PElement shifted(std::uint32_t t) const;
  /// x → x^{−1}; equals the field power a^{2^{(p−1)/2}} when s(p) = p − 1.
  PElement conjugate() const { return substitute(p_ - 1); }

 private:
  std::uint32_t p_ = 0;
  std::uint64_t bits_ = 0;
};

/// Square-and-multiply; pow(a, 0) = e(x).
PElement pow(const PElement& a, BigInt exponent);

/// Least s with 2^s ≡ 1 mod p; throws on composite p.
std::uint32_t mult_order_of_2(std::uint32_t p);

/// The multiplicative structure of P for a given prime. Field mode (unit
/// group of order 2^{p−1} − 1) requires s = p − 1.
struct PField {
  std::uint32_t p = 0;
  std::uint32_t s = 0;          // multiplicative order of 2 mod p
  BigInt group_order = 0;       // 2^{p−1} − 1
  std::vector<BigInt> factors;  // distinct prime factors of group_order

  bool field_mode() const { return s + 1 == p; }

  /// Precomputed factor table for p in {3,5,7,11,23,29,59}; other p falls
  /// back to trial division up to a bound and throws beyond it.
  static PField make(std::uint32_t p);
};

/// Multiplicative order of a nonzero element in field mode.
BigInt element_order(const PField& field, const PElement& a);

/// Element of multiplicative order 2^{p−1} − 1, found from seeded random
/// candidates and verified against every prime factor of the group order.
PElement find_primitive(const PField& field, std::uint64_t seed);

/// Hermitian inner product Σ u_i · v_i^q over equal-length tuples.
PElement hermitian_ip(const std::vector<PElement>& u,
                      const std::vector<PElement>& v, const BigInt& q);

/// Conjugation form Σ u_i · v_i(x^{−1}); agrees with hermitian_ip at
/// q = 2^{(p−1)/2} exactly when s(p) = p − 1, and is the duality that holds
/// for σ-decompositions of self-dual codes in general.
PElement conjugate_ip(const std::vector<PElement>& u,
                      const std::vector<PElement>& v);

}  // namespace sda
