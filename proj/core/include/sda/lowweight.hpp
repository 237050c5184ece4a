#pragma once

#include <cstdint>
#include <optional>

#include "sda/code.hpp"

namespace sda {

/// Budget for a probabilistic low-weight search. Identical (code, budget)
/// inputs give identical transcripts.
struct SearchBudget {
  std::uint64_t max_iterations = 2000;
  std::size_t window_size = 2;  // Lee–Brickell information-pattern weight
  std::uint64_t seed = 0;
};

/// An explicit low-weight codeword; always re-verified against the
/// generator RREF before being returned.
struct Witness {
  BitVector codeword;
  std::size_t weight = 0;
  std::uint64_t iterations_used = 0;
};

/// Derived seed for task `task_index` of a sweep under `master_seed`, so
/// parallel schedules cannot change results (splitmix64 hash of the pair).
std::uint64_t derive_task_seed(std::uint64_t master_seed, std::uint64_t task_index);

/// Lee–Brickell search for a codeword of weight < target. Absence of a
/// witness is NOT a proof of minimum distance >= target.
std::optional<Witness> find_below(const BinaryCode& c, std::size_t target,
                                  const SearchBudget& budget);

/// Runs the full budget and keeps the lightest codeword seen.
Witness find_min_weight_word(const BinaryCode& c, std::size_t upper_hint,
                             const SearchBudget& budget);

}  // namespace sda
