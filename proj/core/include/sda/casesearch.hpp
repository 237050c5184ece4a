#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sda/code.hpp"
#include "sda/decomp.hpp"
#include "sda/lowweight.hpp"
#include "sda/modfield.hpp"

namespace sda {

// ---------------------------------------------------------------------------
// The p = 59 candidate family.

/// |<δ(x)>| / 59 = (2^29 + 1)/59; the doubling-orbit modulus for k.
inline constexpr std::uint32_t kP59Modulus = 9099507;

struct OrbitSummary {
  std::vector<std::uint32_t> representatives;  // minimal element per orbit
  std::size_t count_with_zero = 0;             // orbits of Z_m incl. {0}
  std::size_t count_without_zero = 0;
  /// Which convention matches the recorded count 156889 ("with-zero",
  /// "without-zero", or "neither").
  std::string matching_convention;
};

/// Orbits of multiplication by 2 on Z_9099507, minimal representative each.
OrbitSummary p59_orbit_representatives();

struct P59Candidate {
  std::uint32_t k = 0;
  PElement b;       // δ(x)^k
  BinaryCode code;  // the assembled [120, 60] code
};

/// The order-59 automorphism the family is built around:
/// (0..58)(59..117) with fixed points 118, 119.
Permutation p59_sigma();

/// Assemble the candidate generator matrix for exponent k: two fixed-subcode
/// rows plus circulant blocks [e(x)] and [δ(x)^k] with δ = α^{2^29−1}.
/// Verifies that α is primitive-compatible (b^{2^29+1} = e), that the code is
/// a self-dual [120,60], and that the π/φ self-duality conditions hold.
P59Candidate build_p59_candidate(std::uint32_t k, const PElement& alpha);

/// Equivalence moves on a φ-module generator tuple: the substitution
/// x → x^t followed by per-coordinate multiplication by x^{t_j}.
std::vector<PElement> equivalence_moves(const std::vector<PElement>& gen,
                                        std::uint64_t t,
                                        const std::vector<std::uint32_t>& tj);

// ---------------------------------------------------------------------------
// Sweep reports.

struct TaskRecord {
  std::uint64_t id = 0;       // orbit representative k, or subset bitmask
  bool refuted = false;
  std::string route;          // "below-d", "mod4", "mod-p", or "" if unresolved
  std::size_t witness_weight = 0;  // expanded weight of the witness, if refuted
  /// Lightest expanded weight >= d_target not divisible by 4 (0 if none):
  /// a violation that survives even if every light vector were explained
  /// away. Subset sweeps with the mod-4 obstruction fill this in; the
  /// smallest value the weight map admits at p = 7, f = 8 is 30.
  std::size_t heavy_mod4_weight = 0;
  std::uint64_t iterations = 0;
};

struct SweepReport {
  std::string label;
  std::uint64_t master_seed = 0;
  std::size_t total_tasks = 0;
  std::vector<TaskRecord> records;  // in task order; size = completed

  std::size_t completed() const { return records.size(); }
  std::size_t refuted() const;
  std::size_t unresolved() const { return completed() - refuted(); }
};

/// Called after each completed task, in task order (deterministic regardless
/// of worker scheduling).
using RecordSink = std::function<void(const TaskRecord&)>;

struct SweepOptions {
  unsigned jobs = 1;
  std::uint64_t master_seed = 0;
  std::size_t start_index = 0;             // resume cursor
  std::vector<TaskRecord> prior_records;   // records before the cursor
  RecordSink sink;                         // optional
};

/// For each representative k: build the candidate (soundness gates included)
/// and run find_below(target = 24) with the task-derived seed; one retry with
/// a doubled budget before a task is left unresolved.
SweepReport p59_sweep(const std::vector<std::uint32_t>& reps,
                      const PElement& alpha, const SearchBudget& budget,
                      const SweepOptions& options);

// ---------------------------------------------------------------------------
// Fixed-point subset sweeps.

struct FixedPointSweepOptions {
  SweepOptions sweep;
  std::size_t sample = 0;    // 0 = all subsets
  bool mod4_obstruction = false;  // also refute on expanded weight != 0 mod 4
  std::size_t dim_cap = 20;
};

/// For each f-subset S of code0's coordinates (taken as the fixed points),
/// decide whether π⁻¹(code0, complement(S)) contains a vector of expanded
/// weight < d_target, or (optionally) of expanded weight not divisible by 4.
/// Exhaustive per subset: all codewords of code0 are scanned.
SweepReport fixed_point_sweep(const BinaryCode& code0, std::uint32_t p,
                              std::size_t f, std::size_t d_target,
                              const FixedPointSweepOptions& options);

/// Reconstruct the expanded witness for a subset-sweep record and re-verify
/// its weight; used by soundness tests and report tooling.
Witness expand_sweep_witness(const BinaryCode& code0, std::uint32_t p,
                             std::uint64_t subset_mask, std::size_t d_target,
                             bool mod4_obstruction);

// ---------------------------------------------------------------------------
// The Golay mod-7 obstruction for type 7-(16;8).

struct GolayMod7Record {
  std::uint64_t subset_mask = 0;
  BigInt a28_prime = 0;          // weight-28 count of the expanded fixed code
  bool congruent = false;        // A_28 ≡ a28_prime mod 7 (expected false)
};

struct GolayMod7Report {
  std::size_t total_tasks = 0;
  std::uint64_t master_seed = 0;
  std::vector<GolayMod7Record> records;
  bool all_inconsistent = true;  // every subset fails the congruence
};

/// For each 8-subset of the Golay's 24 coordinates: A'_28 of the expanded
/// fixed code versus A_28 = 6101289120 of the extremal enumerator mod 7.
/// sample = 0 runs all C(24,8) subsets.
GolayMod7Report golay_mod7_test(std::size_t sample, std::uint64_t master_seed,
                                unsigned jobs = 1);

/// Deterministic sample of `count` distinct f-subsets of {0..n−1} as
/// bitmasks, drawn from the master seed; count = 0 enumerates all.
std::vector<std::uint64_t> sample_subsets(std::size_t n, std::size_t f,
                                          std::size_t count,
                                          std::uint64_t master_seed);

}  // namespace sda
