#include "sda/lowweight.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace sda {

std::uint64_t derive_task_seed(std::uint64_t master_seed, std::uint64_t task_index) {
  // splitmix64 over the combined pair.
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (task_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// One information-set round: permute columns, reduce to systematic-ish form,
// then scan all information patterns of weight 1..window. Rows of the
// reduced matrix are codewords of the permuted code, so candidates are
// un-permuted sums of rows.
template <typename Emit>
void lee_brickell_round(const BinaryCode& c, std::size_t window,
                        std::mt19937_64& rng, Emit emit) {
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  BitMatrix g = c.generator().permute_columns(perm);
  RrefResult rr = rref(g);

  // Invert the permutation once so candidates can be mapped back.
  std::vector<std::size_t> inv(n);
  for (std::size_t j = 0; j < n; ++j) inv[perm[j]] = j;
  auto unpermute = [&](const BitVector& v) {
    BitVector out(n);
    for (std::size_t j = 0; j < n; ++j)
      if (v.get(j)) out.set(inv[j], true);
    return out;
  };

  for (std::size_t i = 0; i < rr.rank; ++i)
    emit(unpermute(rr.matrix.row(i)));
  if (window >= 2) {
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = i + 1; j < rr.rank; ++j)
        emit(unpermute(rr.matrix.row(i) ^ rr.matrix.row(j)));
  }
  if (window >= 3) {
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = i + 1; j < rr.rank; ++j) {
        BitVector ij = rr.matrix.row(i) ^ rr.matrix.row(j);
        for (std::size_t l = j + 1; l < rr.rank; ++l)
          emit(unpermute(ij ^ rr.matrix.row(l)));
      }
  }
  (void)k;
}

Witness verified(const BinaryCode& c, BitVector v, std::uint64_t iters) {
  if (!c.contains(v))
    throw std::runtime_error("lowweight: candidate fails membership check");
  Witness w;
  w.weight = v.weight();
  w.codeword = std::move(v);
  w.iterations_used = iters;
  return w;
}

}  // namespace

std::optional<Witness> find_below(const BinaryCode& c, std::size_t target,
                                  const SearchBudget& budget) {
  if (target < 1) throw std::invalid_argument("find_below: target >= 1");
  if (c.dimension() == 0) return std::nullopt;
  std::mt19937_64 rng(budget.seed);
  for (std::uint64_t it = 1; it <= budget.max_iterations; ++it) {
    std::optional<BitVector> hit;
    lee_brickell_round(c, budget.window_size, rng, [&](const BitVector& v) {
      if (!hit && !v.is_zero() && v.weight() < target) hit = v;
    });
    if (hit) return verified(c, std::move(*hit), it);
  }
  return std::nullopt;
}

Witness find_min_weight_word(const BinaryCode& c, std::size_t upper_hint,
                             const SearchBudget& budget) {
  if (c.dimension() == 0)
    throw std::invalid_argument("find_min_weight_word: zero code");
  std::mt19937_64 rng(budget.seed);
  BitVector best;
  std::size_t best_w = c.length() + 1;
  std::uint64_t best_it = 0;
  for (std::uint64_t it = 1; it <= budget.max_iterations; ++it) {
    lee_brickell_round(c, budget.window_size, rng, [&](const BitVector& v) {
      const std::size_t w = v.weight();
      if (w > 0 && w < best_w) {
        best_w = w;
        best = v;
        best_it = it;
      }
    });
    if (best_w <= upper_hint && upper_hint > 0) break;
  }
  return verified(c, std::move(best), best_it);
}

}  // namespace sda
