#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sda/bits.hpp"
#include "sda/code.hpp"
#include "sda/modfield.hpp"

namespace sda {

/// Permutation of coordinates {0, …, n−1}; images[i] is where i goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Either one line of n space-separated 1-based images or cycle notation
  /// "(1 2 3)(4 5 6)"; fixed points may be omitted in cycle form if n is given.
  static Permutation parse(const std::string& text, std::size_t n = 0);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  std::uint64_t order() const;
  bool has_prime_order() const;

  /// vσ: the image vector has (vσ)_{σ(i)} = v_i.
  BitVector apply(const BitVector& v) const;
  BinaryCode apply(const BinaryCode& c) const;

  std::string to_cycle_string() const;  // 1-based, fixed points omitted

 private:
  std::vector<std::size_t> images_;
};

/// Cycle type p-(c;f) of a prime-order σ with the coordinate partition:
/// cycles[i] lists Ω_{i+1} in σ-orbit order starting at its smallest element,
/// fixed_points lists Ω_{c+1}, …, Ω_{c+f}.
struct CycleStructure {
  std::uint32_t p = 0;
  std::size_t c = 0;
  std::size_t f = 0;
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> fixed_points;

  std::size_t n() const { return p * c + f; }
};

/// Throws on non-prime order. Requires odd p for everything downstream.
CycleStructure cycle_structure(const Permutation& sigma);

/// Build a cycle structure directly from an explicit partition (used by
/// subset sweeps, where no permutation on the small code exists).
CycleStructure make_cycle_structure(std::uint32_t p,
                                    std::vector<std::vector<std::size_t>> cycles,
                                    std::vector<std::size_t> fixed_points);

class SigmaNotAutomorphism : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical-RREF equality of C and Cσ.
bool is_automorphism(const BinaryCode& c, const Permutation& sigma);

struct Decomposition {
  BinaryCode F;  // fixed subcode {v : vσ = v}
  BinaryCode E;  // even subcode  {v : wt(v|Ω_i) even for all i}
  CycleStructure structure;
};

/// The direct-sum decomposition C = F ⊕ E; throws SigmaNotAutomorphism.
Decomposition decompose(const BinaryCode& c, const Permutation& sigma);

BinaryCode fixed_subcode(const BinaryCode& c, const Permutation& sigma);
BinaryCode even_subcode(const BinaryCode& c, const CycleStructure& s);

/// π: sample one coordinate per orbit (the first, fixed for determinism).
/// Image coordinates are ordered cycles first, then fixed points; length c+f.
/// Throws if F is not σ-fixed.
BinaryCode project_pi(const BinaryCode& F, const CycleStructure& s);

/// π⁻¹: expand each coordinate in cycle_coords (a subset of D's coordinate
/// set, size c) into p copies. Output layout: the p-blocks of the cycle
/// coordinates in increasing order, then the remaining (fixed) coordinates
/// in increasing order. wt(π⁻¹(v)) = p·x + y with x, y the cycle/fixed ones.
BinaryCode expand_pi_inverse(const BinaryCode& D,
                             const std::vector<std::size_t>& cycle_coords,
                             std::uint32_t p);

/// φ applied to a generating set of E: each generator row restricted to the
/// cycle blocks, read as c polynomials in P. Throws if some restriction has
/// odd weight (input not in the even subcode).
std::vector<std::vector<PElement>> phi_map(const BinaryCode& E,
                                           const CycleStructure& s);

struct SelfDualConditionsReport {
  bool pi_self_dual = false;       // condition (a)
  bool phi_hermitian_self_dual = false;  // condition (b)
  bool field_mode = false;         // s(p) = p − 1; the iff regime
  std::size_t pi_length = 0;
  std::size_t phi_gf2_dimension = 0;

  bool both() const { return pi_self_dual && phi_hermitian_self_dual; }
};

/// Checks (a) π(F) self-dual of length c+f and (b) φ(E*) self-dual under the
/// hermitian form u·v = Σ u_i v̄_i with v̄(x) = v(x^{−1}).  When s(p) = p−1
/// the conjugation is the field power v ↦ v^{2^{(p−1)/2}} and (a) ∧ (b) is
/// equivalent to self-duality of C; outside that regime the report still
/// carries both booleans but field_mode is false.
SelfDualConditionsReport check_selfdual_conditions(const BinaryCode& c,
                                                   const Permutation& sigma);

/// The cycle/fixed block decomposition of a self-dual π-image: subcodes
/// supported on the first c resp. last f coordinates plus completion rows.
struct BalanceBlocks {
  std::size_t c = 0, f = 0;
  std::size_t k1 = 0, k2 = 0;
  BitMatrix A, B, D, E;  // gen = (A 0 / 0 B / D E)
  BinaryCode code_A, code_AD;  // length c; A⊥ = A_D
  BinaryCode code_B, code_BE;  // length f; B⊥ = B_E
};

/// Throws std::invalid_argument if piF is not self-dual of length c+f.
BalanceBlocks balance_blocks(const BinaryCode& piF, std::size_t c, std::size_t f);

struct IdentityFormResult {
  std::optional<BitMatrix> matrix;  // (I | E') when forced
  std::string reason;               // why not, when absent
};

/// The (I | E') generator forced when c = f < d; reports the obstruction
/// (nonzero A or B block) otherwise. Throws if c != f or piF ill-sized.
IdentityFormResult has_identity_form(const BinaryCode& piF, std::size_t c,
                                     std::size_t f, std::size_t d);

}  // namespace sda
