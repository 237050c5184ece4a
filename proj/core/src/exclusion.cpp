#include "sda/exclusion.hpp"

#include <sstream>

#include "sda/modfield.hpp"

namespace sda {

LemmaSet lemma_preset(const std::string& name) {
  // The published table applies the parity lemma BMW2 when building its
  // p = 3 and p = 5 rows (only even cycle counts are listed) even though it
  // invokes BMW2 against the 13 and 17 rows only afterwards. Including BMW2
  // here reproduces every arithmetically consistent row; the 13-(9;3) and
  // 17-(7;1) rows of the source are recoverable with an explicit lemma set
  // {L6a, L6b, BMW1}.
  if (name == "paper-table")
    return {Lemma::L6a, Lemma::L6b, Lemma::BMW1, Lemma::BMW2};
  if (name == "full")
    return {Lemma::L6a, Lemma::L6b, Lemma::BMW1, Lemma::BMW2, Lemma::BMW3};
  if (name == "none") return {};
  throw std::invalid_argument("unknown lemma preset: " + name);
}

std::string lemma_name(Lemma l) {
  switch (l) {
    case Lemma::L6a: return "L6a";
    case Lemma::L6b: return "L6b";
    case Lemma::BMW1: return "BMW1";
    case Lemma::BMW2: return "BMW2";
    case Lemma::BMW3: return "BMW3";
    case Lemma::APriori: return "a-priori";
  }
  return "?";
}

std::uint64_t g(std::uint64_t d, std::uint64_t s) {
  std::uint64_t sum = 0;
  std::uint64_t div = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    sum += (d + div - 1) / div;
    if (div <= d) div *= 2;  // beyond this every term is 1
  }
  return sum;
}

TypeVerdict filter_type(const TypeCandidate& t, std::size_t n, std::size_t d,
                        const LemmaSet& lemmas) {
  if (t.p * t.c + t.f != n)
    throw std::invalid_argument("filter_type: pc + f != n");
  TypeVerdict v;
  v.candidate = t;
  auto fail = [&](Lemma l, const std::string& detail) {
    v.survives = false;
    v.reasons.push_back({l, detail});
  };
  std::ostringstream os;

  // Not lemma-dependent: an order-p permutation with no p-cycles is the
  // identity, so c = 0 never yields an automorphism of prime order.
  if (t.c == 0)
    fail(Lemma::APriori, "c = 0 cannot arise from an order-p permutation");

  if (lemmas.count(Lemma::L6a)) {
    const std::uint64_t need = g(d, std::uint64_t(t.p - 1) * t.c / 2);
    if (std::uint64_t(t.p) * t.c < need) {
      os.str("");
      os << "pc = " << t.p * t.c << " < g(" << d << ", " << (t.p - 1) * t.c / 2
         << ") = " << need;
      fail(Lemma::L6a, os.str());
    }
  }
  if (lemmas.count(Lemma::L6b) && t.f > t.c) {
    const std::uint64_t need = g(d, (t.f - t.c) / 2);
    if (t.f < need) {
      os.str("");
      os << "f = " << t.f << " < g(" << d << ", " << (t.f - t.c) / 2
         << ") = " << need;
      fail(Lemma::L6b, os.str());
    }
  }
  if (lemmas.count(Lemma::BMW1)) {
    // Hypothesis: extremal code of length 24m + 2r, m >= 2, and p >= 5.
    const bool applies = n >= 48 && n % 2 == 0 && d == extremal_bound(n) && t.p >= 5;
    if (applies && t.c < t.f) {
      os.str("");
      os << "c = " << t.c << " < f = " << t.f;
      fail(Lemma::BMW1, os.str());
    }
  }
  if (lemmas.count(Lemma::BMW2)) {
    if (mult_order_of_2(t.p) % 2 == 0 && t.c % 2 != 0) {
      os.str("");
      os << "s(" << t.p << ") = " << mult_order_of_2(t.p)
         << " is even but c = " << t.c << " is odd";
      fail(Lemma::BMW2, os.str());
    }
  }
  if (lemmas.count(Lemma::BMW3)) {
    if (t.c == t.f && t.p + t.c < d) {
      os.str("");
      os << "c = f = " << t.c << " and p + c = " << t.p + t.c << " < d = " << d;
      fail(Lemma::BMW3, os.str());
    }
  }
  return v;
}

std::vector<TypeVerdict> feasible_types(std::size_t n, std::size_t d,
                                        std::uint32_t p, const LemmaSet& lemmas) {
  std::vector<TypeVerdict> out;
  for (std::size_t c = 0; p * c <= n; ++c)
    out.push_back(filter_type({p, c, n - p * c}, n, d, lemmas));
  return out;
}

std::vector<std::uint32_t> surviving_primes(std::size_t n, std::size_t d) {
  const LemmaSet full = lemma_preset("full");
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 3; p <= n; ++p) {
    bool prime = true;
    for (std::uint32_t i = 2; i * i <= p; ++i)
      if (p % i == 0) prime = false;
    if (!prime || p == 2) continue;
    for (const auto& v : feasible_types(n, d, p, full)) {
      if (v.survives && v.candidate.c > 0) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

bool mod_p_weight_test(const BigInt& extremal_a, const BigInt& observed_a_prime,
                       std::uint32_t p) {
  return (extremal_a - observed_a_prime) % p == 0;
}

const std::vector<CaseVerdict>& case_refutations_120() {
  static const std::vector<CaseVerdict> cases = {
      {{59, 2, 2},
       CaseMethod::ComputerSearch,
       "orbit sweep over the 156889 doubling orbits finds a codeword of "
       "weight < 24 for every candidate generator matrix"},
      {{5, 22, 10},
       CaseMethod::ComputerSearch,
       "10-subset sweeps over the five extremal [32,16,8] codes all yield "
       "expanded codewords of weight < 24"},
      {{7, 16, 8},
       CaseMethod::ComputerSearch,
       "Golay case fails the mod-7 congruence at weight 28; Z24/X24/Y24 "
       "cases refuted by 8-subset sweeps"},
      {{5, 20, 20},
       CaseMethod::LiteratureProse,
       "doubly-even (I|E') row-weight argument; prose proof, not executable"},
      {{3, 30, 30},
       CaseMethod::LiteratureProse,
       "support-intersection argument on (I|E); prose proof, not executable"},
  };
  return cases;
}

std::vector<std::pair<std::uint32_t, std::vector<TypeCandidate>>>
final_type_table_120() {
  const LemmaSet full = lemma_preset("full");
  std::vector<std::pair<std::uint32_t, std::vector<TypeCandidate>>> table;
  for (std::uint32_t p : surviving_primes(120, 24)) {
    std::vector<TypeCandidate> kept;
    for (const auto& v : feasible_types(120, 24, p, full)) {
      if (!v.survives || v.candidate.c == 0) continue;
      bool refuted = false;
      for (const auto& cv : case_refutations_120())
        if (cv.candidate.p == p && cv.candidate.c == v.candidate.c &&
            cv.candidate.f == v.candidate.f)
          refuted = true;
      if (!refuted) kept.push_back(v.candidate);
    }
    if (!kept.empty()) table.emplace_back(p, std::move(kept));
  }
  return table;
}

}  // namespace sda
