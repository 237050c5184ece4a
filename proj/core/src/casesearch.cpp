#include "sda/casesearch.hpp"

#include "sda/exclusion.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace sda {

OrbitSummary p59_orbit_representatives() {
  OrbitSummary s;
  std::vector<bool> seen(kP59Modulus, false);
  for (std::uint32_t i = 0; i < kP59Modulus; ++i) {
    if (seen[i]) continue;
    s.representatives.push_back(i);
    std::uint64_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = (j * 2) % kP59Modulus;
    }
  }
  s.count_with_zero = s.representatives.size();
  s.count_without_zero = s.count_with_zero - 1;  // drop the {0} orbit
  if (s.count_with_zero == 156889)
    s.matching_convention = "with-zero";
  else if (s.count_without_zero == 156889)
    s.matching_convention = "without-zero";
  else
    s.matching_convention = "neither";
  return s;
}

Permutation p59_sigma() {
  std::vector<std::size_t> im(120);
  for (std::size_t i = 0; i < 59; ++i) im[i] = (i + 1) % 59;
  for (std::size_t i = 0; i < 59; ++i) im[59 + i] = 59 + (i + 1) % 59;
  im[118] = 118;
  im[119] = 119;
  return Permutation(std::move(im));
}

P59Candidate build_p59_candidate(std::uint32_t k, const PElement& alpha) {
  if (alpha.p() != 59)
    throw std::invalid_argument("build_p59_candidate: alpha must live in P_59");
  const PElement e = PElement::identity(59);
  const BigInt half = (BigInt(1) << 29) - 1;
  const PElement delta = pow(alpha, half);
  if (pow(delta, (BigInt(1) << 29) + 1) != e)
    throw std::invalid_argument("build_p59_candidate: alpha is not primitive");
  const PElement b = pow(delta, k);

  BitMatrix gen(0, 120);
  {
    BitVector r0(120), r1(120);
    for (std::size_t i = 0; i < 59; ++i) r0.set(i, true);
    r0.set(118, true);
    for (std::size_t i = 0; i < 59; ++i) r1.set(59 + i, true);
    r1.set(119, true);
    gen.append_row(std::move(r0));
    gen.append_row(std::move(r1));
  }
  for (std::uint32_t i = 0; i < 58; ++i) {
    const std::uint64_t le = e.shifted(i).bits();
    const std::uint64_t lb = b.shifted(i).bits();
    BitVector row(120);
    for (std::uint32_t j = 0; j < 59; ++j) {
      if ((le >> j) & 1) row.set(j, true);
      if ((lb >> j) & 1) row.set(59 + j, true);
    }
    gen.append_row(std::move(row));
  }

  P59Candidate cand;
  cand.k = k;
  cand.b = b;
  cand.code = BinaryCode(gen);
  if (cand.code.dimension() != 60)
    throw std::runtime_error("build_p59_candidate: rank != 60");
  if (!is_self_dual(cand.code))
    throw std::runtime_error("build_p59_candidate: code is not self-dual");
  SelfDualConditionsReport rep = check_selfdual_conditions(cand.code, p59_sigma());
  if (!rep.both())
    throw std::runtime_error("build_p59_candidate: pi/phi self-duality gate failed");
  return cand;
}

std::vector<PElement> equivalence_moves(const std::vector<PElement>& gen,
                                        std::uint64_t t,
                                        const std::vector<std::uint32_t>& tj) {
  if (gen.empty()) throw std::invalid_argument("equivalence_moves: empty tuple");
  const std::uint32_t p = gen[0].p();
  if (t < 1 || t > p - 1)
    throw std::invalid_argument("equivalence_moves: need 1 <= t <= p-1");
  if (tj.size() != gen.size())
    throw std::invalid_argument("equivalence_moves: tj size mismatch");
  std::vector<PElement> out;
  for (std::size_t j = 0; j < gen.size(); ++j) {
    if (tj[j] > p - 1)
      throw std::invalid_argument("equivalence_moves: tj out of range");
    out.push_back(gen[j].substitute(t).shifted(tj[j]));
  }
  return out;
}

std::size_t SweepReport::refuted() const {
  std::size_t r = 0;
  for (const auto& rec : records) r += rec.refuted;
  return r;
}

namespace {

// Runs fn over ids[start..] in fixed-size blocks; workers race within a
// block but records are committed (and sunk) in task order.
SweepReport run_tasks(std::string label, const std::vector<std::uint64_t>& ids,
                      const SweepOptions& options,
                      const std::function<TaskRecord(std::uint64_t)>& fn) {
  SweepReport report;
  report.label = std::move(label);
  report.master_seed = options.master_seed;
  report.total_tasks = ids.size();
  report.records = options.prior_records;

  const std::size_t block = 100;
  const unsigned jobs = std::max(1u, options.jobs);
  for (std::size_t base = options.start_index; base < ids.size(); base += block) {
    const std::size_t end = std::min(base + block, ids.size());
    std::vector<TaskRecord> block_records(end - base);
    std::atomic<std::size_t> next{base};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < end;)
        block_records[i - base] = fn(ids[i]);
    };
    if (jobs == 1 || end - base == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto& rec : block_records) {
      report.records.push_back(rec);
      if (options.sink) options.sink(rec);
    }
  }
  return report;
}

}  // namespace

SweepReport p59_sweep(const std::vector<std::uint32_t>& reps,
                      const PElement& alpha, const SearchBudget& budget,
                      const SweepOptions& options) {
  std::vector<std::uint64_t> ids(reps.begin(), reps.end());
  auto task = [&](std::uint64_t k) {
    TaskRecord rec;
    rec.id = k;
    P59Candidate cand = build_p59_candidate(static_cast<std::uint32_t>(k), alpha);
    SearchBudget b = budget;
    b.seed = derive_task_seed(options.master_seed, k);
    auto w = find_below(cand.code, 24, b);
    std::uint64_t iters = w ? w->iterations_used : b.max_iterations;
    if (!w) {  // one retry with a doubled budget
      b.max_iterations *= 2;
      b.seed = derive_task_seed(options.master_seed, k) + 1;
      w = find_below(cand.code, 24, b);
      iters += w ? w->iterations_used : b.max_iterations;
    }
    rec.iterations = iters;
    if (w) {
      rec.refuted = true;
      rec.route = "below-d";
      rec.witness_weight = w->weight;
    }
    return rec;
  };
  return run_tasks("p59", ids, options, task);
}

std::vector<std::uint64_t> sample_subsets(std::size_t n, std::size_t f,
                                          std::size_t count,
                                          std::uint64_t master_seed) {
  if (n > 63 || f > n) throw std::invalid_argument("sample_subsets: bad n, f");
  std::vector<std::uint64_t> out;
  if (count == 0) {
    if (f == 0) return {0};
    // Gosper's hack walks all f-subsets in increasing mask order.
    std::uint64_t mask = (std::uint64_t{1} << f) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      out.push_back(mask);
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
  }
  std::mt19937_64 rng(master_seed);
  std::set<std::uint64_t> seen;
  std::vector<std::size_t> coords(n);
  std::iota(coords.begin(), coords.end(), std::size_t{0});
  while (seen.size() < count) {
    std::shuffle(coords.begin(), coords.end(), rng);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < f; ++i) mask |= std::uint64_t{1} << coords[i];
    if (seen.insert(mask).second) out.push_back(mask);
  }
  return out;
}

namespace {

struct PackedCode {
  std::vector<std::uint64_t> words;    // all nonzero codewords
  std::vector<std::uint8_t> weights;
};

PackedCode pack_codewords(const BinaryCode& c, std::size_t dim_cap) {
  if (c.length() > 63)
    throw std::invalid_argument("fixed_point_sweep: code length > 63");
  if (c.dimension() > dim_cap)
    throw DimensionTooLarge("fixed_point_sweep: dimension exceeds cap");
  PackedCode pc;
  const std::uint64_t total = std::uint64_t{1} << c.dimension();
  pc.words.reserve(total - 1);
  pc.weights.reserve(total - 1);
  std::uint64_t cur = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= c.generator().row(std::countr_zero(i)).words()[0];
    pc.words.push_back(cur);
    pc.weights.push_back(static_cast<std::uint8_t>(std::popcount(cur)));
  }
  return pc;
}

// The per-subset decision: lightest expanded weight < d wins; otherwise the
// lightest expanded weight not divisible by 4 (when enabled).
struct SubsetDecision {
  bool refuted = false;
  std::string route;
  std::size_t weight = 0;
  std::uint64_t word = 0;
  std::size_t heavy_mod4 = 0;  // lightest ew >= d_target, ew % 4 != 0
};

SubsetDecision decide_subset(const PackedCode& pc, std::uint32_t p,
                             std::uint64_t fixed_mask, std::size_t d_target,
                             bool mod4) {
  SubsetDecision best_below, best_mod4;
  best_below.weight = best_mod4.weight = ~std::size_t{0};
  std::size_t heavy = ~std::size_t{0};
  for (std::size_t i = 0; i < pc.words.size(); ++i) {
    const std::uint64_t w = pc.words[i];
    const std::size_t y = std::popcount(w & fixed_mask);
    const std::size_t ew = std::size_t{p} * (pc.weights[i] - y) + y;
    if (ew < d_target && ew < best_below.weight)
      best_below = {true, "below-d", ew, w};
    if (mod4 && ew % 4 != 0) {
      if (ew < best_mod4.weight) best_mod4 = {true, "mod4", ew, w};
      if (ew >= d_target && ew < heavy) heavy = ew;
    }
  }
  SubsetDecision out;
  if (best_below.refuted)
    out = best_below;
  else if (best_mod4.refuted)
    out = best_mod4;
  out.heavy_mod4 = heavy == ~std::size_t{0} ? 0 : heavy;
  return out;
}

}  // namespace

SweepReport fixed_point_sweep(const BinaryCode& code0, std::uint32_t p,
                              std::size_t f, std::size_t d_target,
                              const FixedPointSweepOptions& options) {
  if (p % 2 == 0) throw std::invalid_argument("fixed_point_sweep: p must be odd");
  PackedCode pc = pack_codewords(code0, options.dim_cap);
  std::vector<std::uint64_t> subsets = sample_subsets(
      code0.length(), f, options.sample, options.sweep.master_seed);
  auto task = [&](std::uint64_t mask) {
    SubsetDecision d = decide_subset(pc, p, mask, d_target,
                                     options.mod4_obstruction);
    TaskRecord rec;
    rec.id = mask;
    rec.refuted = d.refuted;
    rec.route = d.route;
    rec.witness_weight = d.refuted ? d.weight : 0;
    rec.heavy_mod4_weight = d.heavy_mod4;
    rec.iterations = pc.words.size();
    return rec;
  };
  char label[64];
  std::snprintf(label, sizeof label, "%u-(%zu;%zu)", p,
                (code0.length() - f), f);
  return run_tasks(label, subsets, options.sweep, task);
}

Witness expand_sweep_witness(const BinaryCode& code0, std::uint32_t p,
                             std::uint64_t subset_mask, std::size_t d_target,
                             bool mod4_obstruction) {
  PackedCode pc = pack_codewords(code0, kEnumerationDimCap);
  SubsetDecision d =
      decide_subset(pc, p, subset_mask, d_target, mod4_obstruction);
  if (!d.refuted)
    throw std::runtime_error("expand_sweep_witness: subset is not refuted");

  std::vector<std::size_t> cycle_coords;
  for (std::size_t j = 0; j < code0.length(); ++j)
    if (!((subset_mask >> j) & 1)) cycle_coords.push_back(j);
  BinaryCode expanded = expand_pi_inverse(code0, cycle_coords, p);

  // Rebuild the expanded vector with the same column layout.
  std::vector<bool> is_cycle(code0.length());
  for (auto c : cycle_coords) is_cycle[c] = true;
  BitVector v(expanded.length());
  std::size_t cyc_seen = 0, fix_seen = 0;
  for (std::size_t j = 0; j < code0.length(); ++j) {
    const bool on = (d.word >> j) & 1;
    if (is_cycle[j]) {
      if (on)
        for (std::uint32_t t = 0; t < p; ++t) v.set(p * cyc_seen + t, true);
      ++cyc_seen;
    } else {
      if (on) v.set(p * cycle_coords.size() + fix_seen, true);
      ++fix_seen;
    }
  }
  if (!expanded.contains(v))
    throw std::runtime_error("expand_sweep_witness: witness not in expanded code");
  Witness w;
  w.weight = v.weight();
  if (w.weight != d.weight)
    throw std::runtime_error("expand_sweep_witness: weight mismatch");
  w.codeword = std::move(v);
  w.iterations_used = 1;
  return w;
}

GolayMod7Report golay_mod7_test(std::size_t sample, std::uint64_t master_seed,
                                unsigned jobs) {
  const BinaryCode golay = registry("golay24");
  PackedCode pc = pack_codewords(golay, kEnumerationDimCap);
  const BigInt a28 = extremal_type2_enumerator(120).counts[28];  // 6101289120

  GolayMod7Report rep;
  rep.master_seed = master_seed;
  std::vector<std::uint64_t> subsets = sample_subsets(24, 8, sample, master_seed);
  rep.total_tasks = subsets.size();
  rep.records.resize(subsets.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < subsets.size();) {
      const std::uint64_t mask = subsets[i];
      std::uint64_t count = 0;
      for (std::size_t w = 0; w < pc.words.size(); ++w) {
        const std::size_t y = std::popcount(pc.words[w] & mask);
        if (std::size_t{7} * (pc.weights[w] - y) + y == 28) ++count;
      }
      GolayMod7Record& r = rep.records[i];
      r.subset_mask = mask;
      r.a28_prime = count;
      r.congruent = mod_p_weight_test(a28, r.a28_prime, 7);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : rep.records)
    if (r.congruent) rep.all_inconsistent = false;
  return rep;
}

}  // namespace sda
