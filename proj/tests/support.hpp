#pragma once

#include <random>
#include <stdexcept>

#include "sda/bits.hpp"
#include "sda/code.hpp"

namespace sda::testsupport {

inline BinaryCode random_code(std::size_t n, std::size_t k,
                              std::mt19937_64& rng) {
  while (true) {
    BitMatrix m(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng() & 1) m.set(r, c, true);
    BinaryCode code(m);
    if (code.dimension() == k) return code;
  }
}

/// Uniform-ish random self-dual code of even length n via a neighbor walk
/// from the direct sum of [2,1] repetition codes: C -> <C ∩ x⊥, x> for a
/// random even-weight x ∉ C keeps self-duality at every step.
inline BinaryCode random_self_dual(std::size_t n, std::mt19937_64& rng,
                                   std::size_t steps = 24) {
  if (n % 2 != 0) throw std::invalid_argument("length must be even");
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < n / 2; ++i) {
    BitVector v(n);
    v.set(2 * i, true);
    v.set(2 * i + 1, true);
    rows.push_back(v);
  }
  for (std::size_t step = 0; step < steps; ++step) {
    BitVector x(n);
    do {
      for (std::size_t j = 0; j < n; ++j) x.set(j, rng() & 1);
      if (x.weight() % 2 != 0) x.set(0, !x.get(0));
    } while (x.weight() == 0);
    // x ∈ C = C⊥ would make the step a no-op; skip it.
    BitMatrix g(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t j = 0; j < n; ++j) g.set(r, j, rows[r].get(j));
    if (in_row_space(rref(g), x)) continue;
    std::size_t pivot = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (dot(rows[r], x)) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;  // unreachable for self-dual C
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != pivot && dot(rows[r], x)) rows[r] ^= rows[pivot];
    rows[pivot] = x;
  }
  BitMatrix g(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) g.set(r, j, rows[r].get(j));
  return BinaryCode(g);
}

}  // namespace sda::testsupport
