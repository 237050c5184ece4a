// One-shot generator for the classified codes embedded in the registry
// (z24, x24, y24, c83..c85). Random self-dual neighbor walks produce
// candidates; invariants documented in data/PROVENANCE.md pin the labels.
// Usage: gendata <output-dir>

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "sda/casesearch.hpp"
#include "sda/code.hpp"

using namespace sda;

namespace {

BitVector random_word(std::size_t n, std::mt19937_64& rng) {
  BitVector x(n);
  for (std::size_t j = 0; j < n; ++j) x.set(j, rng() & 1);
  return x;
}

/// Self-dual neighbor step C -> <C ∩ x⊥, x>; returns false if x was useless.
bool neighbor_step(std::vector<BitVector>& rows, const BitVector& x) {
  BitMatrix g(0, x.size());
  for (const auto& r : rows) g.append_row(r);
  if (in_row_space(rref(g), x)) return false;
  std::size_t pivot = rows.size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (dot(rows[r], x)) {
      pivot = r;
      break;
    }
  if (pivot == rows.size()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (r != pivot && dot(rows[r], x)) rows[r] ^= rows[pivot];
  rows[pivot] = x;
  return true;
}

std::vector<BitVector> code_rows(const BinaryCode& c) {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < c.dimension(); ++i)
    rows.push_back(c.generator().row(i));
  return rows;
}

BinaryCode to_code(const std::vector<BitVector>& rows) {
  BitMatrix g(0, rows.front().size());
  for (const auto& r : rows) g.append_row(r);
  return BinaryCode(g);
}

/// Coordinates not covered by the support of any weight-4 codeword.
std::vector<std::size_t> tetrad_free_coords(const BinaryCode& c) {
  std::vector<bool> covered(c.length(), false);
  const std::size_t k = c.dimension();
  BitVector w(c.length());
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << k); ++m) {
    w ^= c.generator().row(std::countr_zero(m));
    if (w.weight() == 4)
      for (std::size_t j = 0; j < c.length(); ++j)
        if (w.get(j)) covered[j] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < c.length(); ++j)
    if (!covered[j]) free.push_back(j);
  return free;
}

/// Triple support-intersection distribution of the weight-8 codewords; the
/// equivalence invariant separating the length-32 classes. (The pairwise
/// distribution is useless here: minimum-weight words of an extremal
/// doubly-even code form a 3-design, so it is identical for all five.)
std::map<int, long> triple_distribution(const BinaryCode& c) {
  std::vector<std::uint64_t> words;
  const std::size_t k = c.dimension();
  BitVector w(c.length());
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << k); ++m) {
    w ^= c.generator().row(std::countr_zero(m));
    if (w.weight() == 8) words.push_back(w.words()[0]);
  }
  std::map<int, long> dist;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const std::uint64_t ij = words[i] & words[j];
      if (!ij) continue;
      for (std::size_t l = j + 1; l < words.size(); ++l) {
        int t = std::popcount(ij & words[l]);
        if (t) ++dist[t];
      }
    }
  return dist;
}

void emit(const std::filesystem::path& dir, const std::string& name,
          const BinaryCode& c, const std::string& comment) {
  std::ofstream out(dir / (name + ".code"));
  save_code(out, c, comment);
  std::cout << "      {\"" << name << "\",\n       {\n";
  for (std::size_t i = 0; i < c.dimension(); ++i)
    std::cout << "           \"" << c.generator().row(i).to_string() << "\",\n";
  std::cout << "       }},\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gendata <output-dir>\n";
    return 64;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(20240817);

  // --- z24: the unique self-dual [24,12,6], reached as a weight-6 neighbor
  // of the extended Golay code.
  auto golay = registry("golay24");
  BinaryCode z24;
  for (long attempt = 1;; ++attempt) {
    if (attempt % 200 == 0) std::cerr << "z24 attempt " << attempt << "\n";
    BitVector x(24);
    std::vector<std::size_t> picks(24);
    std::iota(picks.begin(), picks.end(), 0);
    std::shuffle(picks.begin(), picks.end(), rng);
    for (int i = 0; i < 6; ++i) x.set(picks[i], true);
    auto rows = code_rows(golay);
    if (!neighbor_step(rows, x)) continue;
    auto cand = to_code(rows);
    if (is_self_dual(cand) && min_weight(cand) == 6) {
      z24 = cand;
      break;
    }
  }
  std::cout << "z24 found; A_6 = " << weight_distribution(z24).counts[6]
            << "\n";

  // --- x24 / y24: the two self-dual [24,12,4] classes with >= 8 coordinates
  // outside every weight-4 support. Random walks from z24. The label x24
  // goes to the class with exactly 8 free coordinates (A_4 = 4): its single
  // admissible fixed-point set carries a weight-30 expanded vector under
  // p = 7. The other class (A_4 = 2, 16 free coordinates) is y24.
  BinaryCode x24, y24;
  bool have_x = false, have_y = false;
  auto base = code_rows(z24);
  for (long attempt = 1; !have_x || !have_y; ++attempt) {
    if (attempt % 500 == 0)
      std::cerr << "x24/y24 attempt " << attempt << " (x=" << have_x
                << " y=" << have_y << ")\n";
    auto rows = base;
    for (int step = 0; step < 40; ++step) {
      BitVector x = random_word(24, rng);
      if (x.weight() % 2) x.flip(rng() % 24);
      neighbor_step(rows, x);
    }
    auto cand = to_code(rows);
    if (!is_self_dual(cand) || min_weight(cand) != 4) continue;
    auto free = tetrad_free_coords(cand);
    if (free.size() < 8) continue;
    auto a4 = weight_distribution(cand).counts[4];
    if (a4 == 4 && free.size() == 8 && !have_x) {
      // Confirm the weight-30 obstruction on the unique free 8-subset:
      // a weight-6 codeword meeting it in exactly 2 coordinates.
      std::uint64_t coords = 0;
      for (auto j : free) coords |= std::uint64_t(1) << j;
      bool w30 = false;
      BitVector w(24);
      for (std::uint64_t m = 1; m < (std::uint64_t(1) << 12); ++m) {
        w ^= cand.generator().row(std::countr_zero(m));
        if (w.weight() == 6 &&
            std::popcount(w.words()[0] & coords) == 2)
          w30 = true;
      }
      if (!w30) {
        std::cout << "warning: A_4=4 candidate without weight-30 vector?!\n";
        continue;
      }
      x24 = cand;
      have_x = true;
      std::cout << "x24 found; free coords = " << free.size() << "\n";
    } else if (a4 == 2 && free.size() == 16 && !have_y) {
      y24 = cand;
      have_y = true;
      std::cout << "y24 found; free coords = " << free.size() << "\n";
    }
  }

  // --- c83..c85: the extremal doubly-even [32,16,8] codes inequivalent to
  // the extended QR code (c81) and RM(2,5) (c82). Single doubly-even
  // neighbor steps that keep d = 8, from a growing pool of survivors;
  // classes separated by the triple distribution of the 620 weight-8 words.
  auto c81 = registry("c81");
  auto c82 = registry("c82");
  std::vector<std::map<int, long>> known{triple_distribution(c81),
                                         triple_distribution(c82)};
  std::vector<BinaryCode> found;
  std::vector<BinaryCode> pool{c81, c82};
  for (long attempt = 1; found.size() < 3; ++attempt) {
    if (attempt % 500 == 0)
      std::cerr << "c8x attempt " << attempt << " (found " << found.size()
                << ")\n";
    auto rows = code_rows(pool[rng() % pool.size()]);
    BitVector x(32);
    std::vector<std::size_t> picks(32);
    std::iota(picks.begin(), picks.end(), 0);
    std::shuffle(picks.begin(), picks.end(), rng);
    std::size_t wt = 4 * (1 + rng() % 3);
    for (std::size_t i = 0; i < wt; ++i) x.set(picks[i], true);
    if (!neighbor_step(rows, x)) continue;
    auto cand = to_code(rows);
    if (!is_self_dual(cand) || !is_doubly_even(cand)) continue;
    if (min_weight(cand) != 8) continue;
    auto inv = triple_distribution(cand);
    if (std::find(known.begin(), known.end(), inv) != known.end()) {
      if (pool.size() < 60) pool.push_back(cand);
      continue;
    }
    known.push_back(inv);
    pool.push_back(cand);
    found.push_back(cand);
    std::cout << "length-32 class " << found.size() + 2 << " found\n";
  }

  std::cout << "\n";
  emit(dir, "z24", z24, "self-dual [24,12,6]");
  emit(dir, "x24", x24, "self-dual [24,12,4], >= 8 tetrad-free coordinates");
  emit(dir, "y24", y24, "self-dual [24,12,4], >= 8 tetrad-free coordinates");
  emit(dir, "c83", found[0], "extremal doubly-even [32,16,8]");
  emit(dir, "c84", found[1], "extremal doubly-even [32,16,8]");
  emit(dir, "c85", found[2], "extremal doubly-even [32,16,8]");
  return 0;
}
