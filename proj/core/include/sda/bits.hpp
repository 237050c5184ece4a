#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sda {

/// Bit-packed vector over GF(2).
///
/// Coordinate i lives in word i/64, bit i%64 (little-endian within the
/// logical coordinate sequence). Trailing bits beyond size() are kept zero;
/// every mutating operation restores that invariant. Circulant construction
/// and the code file format both depend on this bit order.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : len_(n), words_((n + 63) / 64, 0) {}

  /// Parse from a string of '0'/'1' characters.
  static BitVector from_string(const std::string& s);

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (auto x : words_) w += std::popcount(x);
    return w;
  }

  bool is_zero() const {
    for (auto x : words_)
      if (x) return false;
    return true;
  }

  void operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  }
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  /// Parity of the standard inner product <a,b>.
  friend bool dot(const BitVector& a, const BitVector& b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
  }

  /// |supp(a) ∩ supp(b)|.
  friend std::size_t intersection_weight(const BitVector& a, const BitVector& b) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      w += std::popcount(a.words_[i] & b.words_[i]);
    return w;
  }

  /// Index of the lowest set bit, or size() if zero.
  std::size_t lowest_set() const;

  bool operator==(const BitVector& o) const = default;
  /// Lexicographic by coordinate (coordinate 0 most significant).
  bool lex_less(const BitVector& o) const;

  std::string to_string() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t* word_data() { return words_.data(); }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RrefResult;

/// Dense bit-packed matrix over GF(2), one BitVector per row.
/// Lengths in this project max out at 120 columns, so dense is fine.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  /// Rows given as '0'/'1' strings, all of equal length.
  static BitMatrix from_strings(std::initializer_list<const char*> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  void append_row(BitVector v);

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  bool operator==(const BitMatrix& o) const = default;

  BitMatrix transpose() const;

  /// m with columns permuted: column perm[j] of the result is column j of m.
  BitMatrix permute_columns(const std::vector<std::size_t>& perm) const;

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // reduced row echelon form, zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Full Gauss–Jordan reduction. The reduced form is unique per row space,
/// which makes canonical generator matrices (and so code equality) cheap.
RrefResult rref(const BitMatrix& m);

/// Basis of {x : m·xᵀ = 0}; row count = cols − rank(m).
BitMatrix kernel_basis(const BitMatrix& m);

/// Standard GF(2) product; throws std::invalid_argument on dimension mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Row vector times matrix.
BitVector vec_mul(const BitVector& v, const BitMatrix& m);

/// True if v reduces to zero against an RREF basis (membership test).
bool in_row_space(const RrefResult& rref_basis, BitVector v);

}  // namespace sda
