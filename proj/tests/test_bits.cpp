#include <doctest.h>

#include <random>

#include "sda/bits.hpp"

using namespace sda;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1) m.set(r, c, true);
  return m;
}

// Coordinate-by-coordinate boolean multiplication oracle.
BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.row_count(), b.col_count());
  for (std::size_t i = 0; i < a.row_count(); ++i)
    for (std::size_t j = 0; j < b.col_count(); ++j) {
      bool acc = false;
      for (std::size_t k = 0; k < a.col_count(); ++k)
        acc ^= a.get(i, k) && b.get(k, j);
      out.set(i, j, acc);
    }
  return out;
}

}  // namespace

TEST_CASE("rref identity and zero") {
  auto id = BitMatrix::identity(3);
  auto rr = rref(id);
  CHECK(rr.matrix == id);
  CHECK(rr.rank == 3);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});

  auto zr = rref(BitMatrix(2, 4));
  CHECK(zr.rank == 0);
  CHECK(zr.pivots.empty());
  CHECK(zr.matrix.row_count() == 0);
  CHECK(zr.matrix.col_count() == 4);
}

TEST_CASE("rref dependent rows") {
  auto m = BitMatrix::from_strings({"1100", "0110", "1010"});
  auto rr = rref(m);
  CHECK(rr.rank == 2);  // third row = sum of the first two
}

TEST_CASE("rref idempotent and row-space preserving") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(1 + rng() % 12, 1 + rng() % 20, rng);
    auto rr = rref(m);
    auto rr2 = rref(rr.matrix);
    CHECK(rr2.matrix == rr.matrix);
    CHECK(rr2.pivots == rr.pivots);
    for (std::size_t r = 0; r < m.row_count(); ++r)
      CHECK(in_row_space(rr, m.row(r)));
  }
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(BitMatrix::identity(4)).row_count() == 0);
  CHECK(kernel_basis(BitMatrix(1, 3)).row_count() == 3);

  auto m = BitMatrix::from_strings({"1111"});
  auto k = kernel_basis(m);
  REQUIRE(k.row_count() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(k.row(i).weight() % 2 == 0);
    CHECK_FALSE(dot(k.row(i), m.row(0)));
  }
}

TEST_CASE("kernel property and rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 18;
    auto m = random_matrix(rows, cols, rng);
    auto rr = rref(m);
    auto k = kernel_basis(m);
    CHECK(rr.rank + k.row_count() == cols);
    for (std::size_t i = 0; i < k.row_count(); ++i)
      for (std::size_t r = 0; r < rows; ++r)
        CHECK_FALSE(dot(m.row(r), k.row(i)));
    CHECK(rref(k).rank == k.row_count());
  }
}

TEST_CASE("mat_mul basics and characteristic 2") {
  auto a = BitMatrix::from_strings({"110", "011"});
  CHECK(mat_mul(a, BitMatrix::identity(3)) == a);

  auto ones = BitMatrix::from_strings({"11"});
  auto col = BitMatrix::from_strings({"1", "1"});
  CHECK(mat_mul(ones, col).get(0, 0) == false);  // 1 + 1 = 0

  CHECK_THROWS_AS(mat_mul(a, a), std::invalid_argument);
}

TEST_CASE("mat_mul agrees with the naive oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(5, 5, rng);
    auto b = random_matrix(5, 5, rng);
    CHECK(mat_mul(a, b) == naive_mul(a, b));
  }
}

TEST_CASE("bit packing is invisible across word boundaries") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rows = 1 + rng() % 64, cols = 65 + rng() % 66;  // up to 130
    auto a = random_matrix(rows, cols, rng);
    auto rr = rref(a);
    // Pivot staircase, scanning coordinates like the boolean oracle would.
    for (std::size_t i = 0; i < rr.rank; ++i) {
      CHECK(rr.matrix.get(i, rr.pivots[i]));
      for (std::size_t j = 0; j < rr.rank; ++j)
        if (j != i) CHECK_FALSE(rr.matrix.get(j, rr.pivots[i]));
      for (std::size_t c = 0; c < rr.pivots[i]; ++c)
        CHECK_FALSE(rr.matrix.get(i, c));
    }
    // Weight equals the coordinate count.
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < cols; ++c) w += a.get(r, c);
      CHECK(a.row(r).weight() == w);
    }
  }
}

TEST_CASE("vector string round trip and lex order") {
  auto v = BitVector::from_string("01101");
  CHECK(v.to_string() == "01101");
  CHECK(v.weight() == 3);
  CHECK(v.lowest_set() == 1);
  auto w = BitVector::from_string("10000");
  CHECK(w.lex_less(v) == false);
  CHECK(v.lex_less(w) == true);  // v starts with 0
}
