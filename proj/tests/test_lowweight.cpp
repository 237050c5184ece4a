#include <doctest.h>

#include <random>

#include "sda/lowweight.hpp"
#include "support.hpp"

using namespace sda;

TEST_CASE("derived task seeds are stable and spread out") {
  CHECK(derive_task_seed(1, 0) == derive_task_seed(1, 0));
  CHECK(derive_task_seed(1, 0) != derive_task_seed(1, 1));
  CHECK(derive_task_seed(1, 0) != derive_task_seed(2, 0));
  // No adjacent-index collisions in a modest window.
  std::uint64_t prev = derive_task_seed(7, 0);
  for (std::uint64_t i = 1; i < 1000; ++i) {
    auto s = derive_task_seed(7, i);
    CHECK(s != prev);
    prev = s;
  }
}

TEST_CASE("find_below on the golay code") {
  auto g = registry("golay24");
  SearchBudget b{.max_iterations = 500, .seed = 3};
  // Weight-8 words are plentiful: 759 of 4096.
  auto w = find_below(g, 12, b);
  REQUIRE(w.has_value());
  CHECK(w->weight == 8);
  CHECK(g.contains(w->codeword));
  CHECK(w->codeword.weight() == w->weight);
  // d = 8, so nothing below it exists to find.
  CHECK_FALSE(find_below(g, 8, b).has_value());
}

TEST_CASE("search transcripts are deterministic") {
  auto c = registry("qr48");
  SearchBudget b{.max_iterations = 300, .seed = 99};
  auto w1 = find_below(c, 16, b);
  auto w2 = find_below(c, 16, b);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->codeword == w2->codeword);
  CHECK(w1->iterations_used == w2->iterations_used);
}

TEST_CASE("find_min_weight_word matches exhaustive search on random codes") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 14 + rng() % 18;
    std::size_t k = 4 + rng() % std::min<std::size_t>(n - 4, 12);
    auto c = testsupport::random_code(n, k, rng);
    auto exact = min_weight(c);
    SearchBudget b{.max_iterations = 400, .seed = rng()};
    auto w = find_min_weight_word(c, 0, b);
    CHECK(w.weight == exact);
    CHECK(c.contains(w.codeword));
  }
}

TEST_CASE("upper hint short-circuits once attained") {
  auto g = registry("golay24");
  SearchBudget b{.max_iterations = 100000, .seed = 5};
  auto w = find_min_weight_word(g, 8, b);
  CHECK(w.weight == 8);
  CHECK(w.iterations_used < b.max_iterations);
}

TEST_CASE("window size 3 also finds minimum words") {
  std::mt19937_64 rng(21);
  auto c = testsupport::random_code(20, 10, rng);
  auto exact = min_weight(c);
  SearchBudget b{.max_iterations = 300, .window_size = 3, .seed = 8};
  CHECK(find_min_weight_word(c, 0, b).weight == exact);
}
