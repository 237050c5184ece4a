#include "sda/code.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sda/registry_data.hpp"

namespace sda {

using boost::multiprecision::cpp_rational;

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) return i;
  throw std::runtime_error("min_nonzero_weight: zero code");
}

BinaryCode::BinaryCode(const BitMatrix& spanning_rows)
    : gen_(rref(spanning_rows)) {}

BinaryCode BinaryCode::permuted(const std::vector<std::size_t>& perm) const {
  return BinaryCode(gen_.matrix.permute_columns(perm));
}

BinaryCode dual(const BinaryCode& c) {
  return BinaryCode(kernel_basis(c.generator()));
}

bool is_self_orthogonal(const BinaryCode& c) {
  const auto& g = c.generator();
  for (std::size_t i = 0; i < g.row_count(); ++i)
    for (std::size_t j = i; j < g.row_count(); ++j)
      if (dot(g.row(i), g.row(j))) return false;
  return true;
}

bool is_self_dual(const BinaryCode& c) {
  return 2 * c.dimension() == c.length() && is_self_orthogonal(c);
}

bool is_doubly_even(const BinaryCode& c) {
  if (is_self_orthogonal(c)) {
    // wt(u+v) = wt(u)+wt(v)-2|u∩v| and |u∩v| is even here, so generator
    // weights mod 4 decide the whole code.
    const auto& g = c.generator();
    for (std::size_t i = 0; i < g.row_count(); ++i)
      if (g.row(i).weight() % 4 != 0) return false;
    return true;
  }
  WeightDistribution wd = weight_distribution(c);
  for (std::size_t w = 1; w < wd.counts.size(); ++w)
    if (wd.counts[w] != 0 && w % 4 != 0) return false;
  return true;
}

namespace {

// Gray-code walk over all 2^k codewords; visit(weight) per nonzero word.
template <typename Visit>
void enumerate_weights(const BinaryCode& c, std::size_t dim_cap, Visit visit) {
  const std::size_t k = c.dimension();
  if (k > dim_cap)
    throw DimensionTooLarge("enumeration dimension " + std::to_string(k) +
                            " exceeds cap " + std::to_string(dim_cap));
  BitVector cur(c.length());
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= c.generator().row(std::countr_zero(i));
    visit(cur.weight());
  }
}

}  // namespace

WeightDistribution weight_distribution(const BinaryCode& c, std::size_t dim_cap) {
  WeightDistribution wd;
  wd.counts.assign(c.length() + 1, 0);
  wd.counts[0] = 1;
  std::vector<std::uint64_t> counts(c.length() + 1, 0);
  enumerate_weights(c, dim_cap, [&](std::size_t w) { ++counts[w]; });
  for (std::size_t w = 1; w <= c.length(); ++w) wd.counts[w] += counts[w];
  return wd;
}

std::size_t min_weight(const BinaryCode& c, std::size_t dim_cap) {
  if (c.dimension() == 0) throw std::runtime_error("min_weight: zero code");
  std::size_t best = c.length() + 1;
  enumerate_weights(c, dim_cap, [&](std::size_t w) {
    if (w < best) best = w;
  });
  return best;
}

std::size_t extremal_bound(std::size_t n) {
  if (n % 2 != 0 || n < 2)
    throw std::invalid_argument("extremal_bound: length must be even, >= 2");
  if (n % 24 == 22) return 4 * (n / 24) + 6;
  return 4 * (n / 24) + 4;
}

namespace {

// Polynomials in u = y^4 with exact integer coefficients.
using UPoly = std::vector<BigInt>;

UPoly poly_mul(const UPoly& a, const UPoly& b) {
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UPoly poly_pow(const UPoly& a, std::size_t e) {
  UPoly r{1};
  for (std::size_t i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

}  // namespace

WeightDistribution extremal_type2_enumerator(std::size_t n) {
  if (n == 0 || n % 8 != 0)
    throw std::invalid_argument("extremal_type2_enumerator: n must be a positive multiple of 8");

  const UPoly g2{1, 14, 1};            // x^8 + 14 x^4 y^4 + y^8 at x = 1
  const UPoly g3{0, 1, -4, 6, -4, 1};  // x^4 y^4 (x^4 - y^4)^4 at x = 1
  const std::size_t m = n / 24;

  std::vector<UPoly> basis;
  for (std::size_t b = 0; b <= m; ++b) {
    UPoly p = poly_mul(poly_pow(g2, (n - 24 * b) / 8), poly_pow(g3, b));
    p.resize(n / 4 + 1, 0);
    basis.push_back(std::move(p));
  }

  // Solve for the combination with A_0 = 1 and A_4 = ... = A_{4m} = 0.
  const std::size_t dim = m + 1;
  std::vector<std::vector<cpp_rational>> aug(dim,
                                             std::vector<cpp_rational>(dim + 1, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t b = 0; b < dim; ++b) aug[j][b] = basis[b][j];
    aug[j][dim] = (j == 0) ? 1 : 0;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && aug[piv][col] == 0) ++piv;
    if (piv == dim) throw std::runtime_error("gleason system is singular");
    std::swap(aug[col], aug[piv]);
    cpp_rational inv = aug[col][col];
    for (auto& x : aug[col]) x /= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      cpp_rational f = aug[r][col];
      for (std::size_t x = 0; x <= dim; ++x) aug[r][x] -= f * aug[col][x];
    }
  }

  UPoly w(n / 4 + 1, 0);
  for (std::size_t b = 0; b < dim; ++b) {
    cpp_rational a = aug[b][dim];
    if (denominator(a) != 1)
      throw std::runtime_error("gleason solve produced a non-integer coefficient");
    for (std::size_t j = 0; j < w.size(); ++j)
      w[j] += numerator(a) * basis[b][j];
  }

  WeightDistribution wd;
  wd.counts.assign(n + 1, 0);
  for (std::size_t j = 0; j < w.size(); ++j) wd.counts[4 * j] = w[j];
  return wd;
}

namespace {

BinaryCode extend_cyclic_with_parity(const std::vector<BitVector>& shifts,
                                     std::size_t q) {
  BitMatrix m(0, q + 1);
  for (const auto& s : shifts) {
    BitVector r(q + 1);
    for (std::size_t i = 0; i < q; ++i) r.set(i, s.get(i));
    r.set(q, s.weight() % 2 != 0);
    m.append_row(std::move(r));
  }
  return BinaryCode(m);
}

}  // namespace

BinaryCode extended_qr(std::size_t q) {
  if (q < 3) throw std::invalid_argument("extended_qr: q must be an odd prime");
  for (std::size_t i = 2; i * i <= q; ++i)
    if (q % i == 0) throw std::invalid_argument("extended_qr: q not prime");
  if (q % 8 != 1 && q % 8 != 7)
    throw std::invalid_argument("extended_qr: need q ≡ ±1 mod 8");

  std::vector<bool> residue(q, false);
  for (std::size_t i = 1; i < q; ++i) residue[(i * i) % q] = true;

  // The QR codes of dimension (q+1)/2 are generated by one of the four
  // idempotent candidates; pick the first whose extension is self-dual.
  for (int cand = 0; cand < 4; ++cand) {
    BitVector e(q);
    const bool use_residues = cand % 2 == 0;
    for (std::size_t i = 1; i < q; ++i)
      if (residue[i] == use_residues) e.set(i, true);
    if (cand >= 2) e.flip(0);

    std::vector<BitVector> shifts;
    for (std::size_t s = 0; s < q; ++s) {
      BitVector r(q);
      for (std::size_t i = 0; i < q; ++i)
        if (e.get(i)) r.set((i + s) % q, true);
      shifts.push_back(std::move(r));
    }
    BinaryCode c = extend_cyclic_with_parity(shifts, q);
    if (c.dimension() == (q + 1) / 2 && is_self_dual(c)) return c;
  }
  throw std::runtime_error("extended_qr: no self-dual extension found");
}

BinaryCode reed_muller_2_5() {
  BitMatrix m(0, 32);
  // Evaluation vectors of all monomials of degree <= 2 in 5 variables.
  for (int deg = 0; deg <= 2; ++deg) {
    for (unsigned mono = 0; mono < 32; ++mono) {
      if (std::popcount(mono) != deg) continue;
      BitVector row(32);
      for (unsigned pt = 0; pt < 32; ++pt)
        row.set(pt, (pt & mono) == mono);
      m.append_row(std::move(row));
    }
  }
  return BinaryCode(m);
}

BinaryCode load_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0, n = 0, k = 0;
  bool have_header = false;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      if (!(hs >> n >> k))
        throw std::runtime_error("code file line " + std::to_string(lineno) +
                                 ": expected header \"n k\"");
      have_header = true;
      continue;
    }
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string row = line.substr(start, end - start + 1);
    if (row.size() != n)
      throw std::runtime_error("code file line " + std::to_string(lineno) +
                               ": expected " + std::to_string(n) + " columns, got " +
                               std::to_string(row.size()));
    rows.push_back(std::move(row));
    if (rows.size() == k) break;
  }
  if (!have_header) throw std::runtime_error("code file: missing header");
  if (rows.size() != k)
    throw std::runtime_error("code file: expected " + std::to_string(k) +
                             " rows, got " + std::to_string(rows.size()));
  BinaryCode c(BitMatrix::from_strings(rows));
  if (c.dimension() != k)
    throw std::runtime_error("code file: header dimension " + std::to_string(k) +
                             " but generator rank " + std::to_string(c.dimension()));
  return c;
}

BinaryCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  return load_code(in);
}

void save_code(std::ostream& out, const BinaryCode& c, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << c.length() << ' ' << c.dimension() << '\n';
  for (std::size_t i = 0; i < c.dimension(); ++i)
    out << c.generator().row(i).to_string() << '\n';
}

BinaryCode registry(const std::string& name) {
  if (name == "golay24") return extended_qr(23);
  if (name == "qr48") return extended_qr(47);
  if (name == "c81") return extended_qr(31);
  if (name == "c82") return reed_muller_2_5();
  for (const auto& [ename, rows] : detail::embedded_codes())
    if (ename == name) return BinaryCode(BitMatrix::from_strings(rows));
  throw std::invalid_argument("unknown registry code: " + name);
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names{"golay24", "qr48", "c81", "c82"};
  for (const auto& [ename, rows] : detail::embedded_codes()) names.push_back(ename);
  return names;
}

}  // namespace sda
