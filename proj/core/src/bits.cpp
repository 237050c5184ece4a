#include "sda/bits.hpp"

#include <algorithm>
#include <sstream>

namespace sda {

BitVector BitVector::from_string(const std::string& s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("BitVector::from_string: bad character");
  }
  return v;
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
  return len_;
}

bool BitVector::lex_less(const BitVector& o) const {
  // Coordinate 0 is most significant, i.e. compare supports front to back.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] == o.words_[i]) continue;
    std::uint64_t diff = words_[i] ^ o.words_[i];
    std::size_t bit = std::countr_zero(diff);
    return (o.words_[i] >> bit) & 1;  // o has the earlier 1 -> o is "larger"
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<const char*> rows) {
  std::vector<std::string> v;
  for (auto* r : rows) v.emplace_back(r);
  return from_strings(v);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  BitMatrix m;
  for (const auto& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(BitVector v) {
  if (rows_.empty())
    cols_ = v.size();
  else if (v.size() != cols_)
    throw std::invalid_argument("BitMatrix::append_row: column mismatch");
  rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_)
    throw std::invalid_argument("permute_columns: size mismatch");
  BitMatrix out(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(r, perm[c], true);
  return out;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& r : rows_) os << r.to_string() << '\n';
  return os.str();
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res;
  std::vector<BitVector> rows;
  rows.reserve(m.row_count());
  for (std::size_t i = 0; i < m.row_count(); ++i) rows.push_back(m.row(i));

  std::size_t r = 0;
  for (std::size_t col = 0; col < m.col_count() && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && !rows[piv].get(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  res.matrix = BitMatrix(0, 0);
  for (std::size_t i = 0; i < r; ++i) res.matrix.append_row(std::move(rows[i]));
  if (r == 0) res.matrix = BitMatrix(0, m.col_count());
  return res;
}

BitMatrix kernel_basis(const BitMatrix& m) {
  const std::size_t n = m.col_count();
  RrefResult rr = rref(m);

  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;

  BitMatrix ker(0, n);
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVector v(n);
    v.set(free_col, true);
    for (std::size_t i = 0; i < rr.rank; ++i)
      if (rr.matrix.get(i, free_col)) v.set(rr.pivots[i], true);
    ker.append_row(std::move(v));
  }
  return ker;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.col_count() != b.row_count())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  BitMatrix out(a.row_count(), b.col_count());
  for (std::size_t r = 0; r < a.row_count(); ++r)
    for (std::size_t c = 0; c < a.col_count(); ++c)
      if (a.get(r, c)) out.row(r) ^= b.row(c);
  return out;
}

BitVector vec_mul(const BitVector& v, const BitMatrix& m) {
  if (v.size() != m.row_count())
    throw std::invalid_argument("vec_mul: dimension mismatch");
  BitVector out(m.col_count());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) out ^= m.row(i);
  return out;
}

bool in_row_space(const RrefResult& rref_basis, BitVector v) {
  for (std::size_t i = 0; i < rref_basis.rank; ++i)
    if (v.get(rref_basis.pivots[i])) v ^= rref_basis.matrix.row(i);
  return v.is_zero();
}

}  // namespace sda
