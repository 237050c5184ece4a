#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sda/code.hpp"

namespace sda {

/// A candidate cycle type p-(c;f) at length n = pc + f.
struct TypeCandidate {
  std::uint32_t p = 0;
  std::size_t c = 0;
  std::size_t f = 0;
};

/// The individually selectable exclusion lemmas.
///  L6a:  pc >= g(d, (p-1)c/2)
///  L6b:  f  >= g(d, (f-c)/2) for f > c
///  BMW1: c >= f for extremal codes of length 24m+2r, m >= 2, p >= 5
///  BMW2: s(p) even forces c even
///  BMW3: no type with c = f and p + c < d
enum class Lemma { L6a, L6b, BMW1, BMW2, BMW3, APriori };

using LemmaSet = std::set<Lemma>;

/// Preset "paper-table" = {L6a, L6b, BMW1, BMW2}; preset "full" adds BMW3.
LemmaSet lemma_preset(const std::string& name);
std::string lemma_name(Lemma l);

struct ExclusionReason {
  Lemma lemma;
  std::string detail;  // the violated inequality, with numbers
};

struct TypeVerdict {
  TypeCandidate candidate;
  bool survives = true;
  std::vector<ExclusionReason> reasons;
};

/// g(d, s) = Σ_{i=0}^{s−1} ⌈d/2^i⌉; g(d, 0) = 0.
std::uint64_t g(std::uint64_t d, std::uint64_t s);

/// Applies each selected lemma; the verdict lists every violated condition.
/// BMW1 is applied only when its hypothesis (n = 24m+2r, m >= 2, p >= 5,
/// extremal) holds for the given (n, d).
TypeVerdict filter_type(const TypeCandidate& t, std::size_t n, std::size_t d,
                        const LemmaSet& lemmas);

/// All (c, f) with pc + f = n, ordered by c, each filtered.
std::vector<TypeVerdict> feasible_types(std::size_t n, std::size_t d,
                                        std::uint32_t p, const LemmaSet& lemmas);

/// All odd primes p <= n with a surviving type under the full lemma set.
std::vector<std::uint32_t> surviving_primes(std::size_t n, std::size_t d);

/// Fixed-subcode congruence: A_i(C) ≡ A_i(F_σ(C)) mod p.
bool mod_p_weight_test(const BigInt& extremal_a, const BigInt& observed_a_prime,
                       std::uint32_t p);

/// How a type beyond the lemma filters was settled.
enum class CaseMethod { ComputerSearch, LiteratureProse };

struct CaseVerdict {
  TypeCandidate candidate;
  CaseMethod method;
  std::string note;
};

/// The recorded refutations of types that survive the lemma filters at
/// (120, 24) but are excluded by the case computations (the p = 59 orbit
/// sweep, the subset sweeps for 5-(22;10) and 7-(16;8)) or by prose-only
/// arguments reproduced from the literature.
const std::vector<CaseVerdict>& case_refutations_120();

/// The final odd-prime type table at (n, d) = (120, 24): lemma filters under
/// the full preset, minus the recorded case refutations. Keys are primes,
/// values the surviving (c, f) pairs.
std::vector<std::pair<std::uint32_t, std::vector<TypeCandidate>>>
final_type_table_120();

}  // namespace sda
