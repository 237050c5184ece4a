#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sda/bits.hpp"

namespace sda {

using BigInt = boost::multiprecision::cpp_int;

/// Exact codeword counts by weight; index i holds A_i.
struct WeightDistribution {
  std::vector<BigInt> counts;  // size n+1

  BigInt total() const;
  std::size_t min_nonzero_weight() const;  // throws if only the zero word
  bool operator==(const WeightDistribution&) const = default;
};

class DimensionTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A binary linear code held by a canonical (RREF) generator matrix.
/// Equal row spaces compare equal, so code equality is a matrix compare.
class BinaryCode {
 public:
  BinaryCode() = default;
  /// Canonicalizes the spanning set; rank deficient input just drops rows.
  explicit BinaryCode(const BitMatrix& spanning_rows);

  std::size_t length() const { return gen_.matrix.col_count(); }
  std::size_t dimension() const { return gen_.rank; }

  const BitMatrix& generator() const { return gen_.matrix; }
  const RrefResult& generator_rref() const { return gen_; }

  bool contains(const BitVector& v) const { return in_row_space(gen_, v); }

  bool operator==(const BinaryCode& o) const {
    return gen_.matrix == o.gen_.matrix;
  }

  /// Code with coordinates permuted: coordinate perm[j] of the image is
  /// coordinate j of this code.
  BinaryCode permuted(const std::vector<std::size_t>& perm) const;

 private:
  RrefResult gen_;
};

inline constexpr std::size_t kEnumerationDimCap = 28;

BinaryCode dual(const BinaryCode& c);
bool is_self_orthogonal(const BinaryCode& c);
bool is_self_dual(const BinaryCode& c);
/// Every codeword weight divisible by 4. Uses the generator criterion when
/// the code is self-orthogonal, full enumeration (dim cap) otherwise.
bool is_doubly_even(const BinaryCode& c);

/// Exact counts by Gray-code enumeration of all 2^k codewords.
WeightDistribution weight_distribution(const BinaryCode& c,
                                       std::size_t dim_cap = kEnumerationDimCap);

/// Minimum nonzero codeword weight, exhaustive; use lowweight:: for k > cap.
std::size_t min_weight(const BinaryCode& c,
                       std::size_t dim_cap = kEnumerationDimCap);

/// Mallows–Sloane/Rains bound on the minimum distance of a self-dual code.
std::size_t extremal_bound(std::size_t n);

/// The unique extremal Type II weight enumerator of length n (n ≡ 0 mod 8):
/// the combination of g2 = x^8+14x^4y^4+y^8 and g3 = x^4y^4(x^4−y^4)^4 with
/// A_0 = 1 and A_4 = … = A_{4⌊n/24⌋} = 0. Exact big-integer coefficients.
WeightDistribution extremal_type2_enumerator(std::size_t n);

/// Extended quadratic residue code of length q+1; requires q prime with
/// q ≡ ±1 mod 8 (2 a quadratic residue mod q). Coordinates are the cyclic
/// exponents 0..q−1 followed by the parity coordinate.
BinaryCode extended_qr(std::size_t q);

/// The [32,16,8] second-order Reed–Muller code RM(2,5).
BinaryCode reed_muller_2_5();

/// Code file format: line 1 "n k", then k lines of n characters from {0,1};
/// '#' starts a comment line. Throws std::runtime_error with a line number
/// on parse errors and on header/rank mismatch.
BinaryCode load_code(std::istream& in);
BinaryCode load_code_file(const std::string& path);
void save_code(std::ostream& out, const BinaryCode& c,
               const std::string& comment = "");

/// Embedded codes by name: golay24, qr48, c81..c85, x24, y24, z24.
BinaryCode registry(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace sda
