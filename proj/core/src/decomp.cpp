#include "sda/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sda {

namespace {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t i = 2; i * i <= v; ++i)
    if (v % i == 0) return false;
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto img : images_) {
    if (img >= images_.size() || seen[img])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{0});
  return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text, std::size_t n) {
  if (text.find('(') != std::string::npos) {
    // Cycle notation, 1-based.
    std::size_t max_seen = n;
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(')
        throw std::invalid_argument("Permutation::parse: expected '('");
      std::size_t close = text.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("Permutation::parse: unbalanced '('");
      std::istringstream cs(text.substr(pos + 1, close - pos - 1));
      std::vector<std::size_t> cyc;
      std::string tok;
      while (cs >> tok) {
        while (!tok.empty() && tok.back() == ',') tok.pop_back();
        std::size_t comma;
        std::istringstream ts(tok);
        std::string piece;
        while (std::getline(ts, piece, ',')) {
          if (piece.empty()) continue;
          std::size_t v = std::stoull(piece);
          if (v == 0) throw std::invalid_argument("Permutation::parse: 1-based entries");
          cyc.push_back(v - 1);
          max_seen = std::max(max_seen, v);
        }
        (void)comma;
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    std::vector<std::size_t> im(max_seen);
    std::iota(im.begin(), im.end(), std::size_t{0});
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i)
        im[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return Permutation(std::move(im));
  }
  // One line of 1-based images.
  std::istringstream is(text);
  std::vector<std::size_t> im;
  std::size_t v;
  while (is >> v) {
    if (v == 0) throw std::invalid_argument("Permutation::parse: 1-based entries");
    im.push_back(v - 1);
  }
  if (n != 0 && im.size() != n)
    throw std::invalid_argument("Permutation::parse: expected " + std::to_string(n) +
                                " images");
  return Permutation(std::move(im));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Permutation::has_prime_order() const { return is_prime(order()); }

BitVector Permutation::apply(const BitVector& v) const {
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) out.set(images_[i], true);
  return out;
}

BinaryCode Permutation::apply(const BinaryCode& c) const {
  return c.permuted(images_);
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << (j + 1);
      first = false;
    }
    os << ')';
  }
  return os.str();
}

CycleStructure cycle_structure(const Permutation& sigma) {
  const std::uint64_t ord = sigma.order();
  if (!is_prime(ord))
    throw std::invalid_argument("cycle_structure: order " + std::to_string(ord) +
                                " is not prime");
  CycleStructure s;
  s.p = static_cast<std::uint32_t>(ord);
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      cyc.push_back(j);
    }
    if (cyc.size() == 1)
      s.fixed_points.push_back(cyc[0]);
    else
      s.cycles.push_back(std::move(cyc));
  }
  s.c = s.cycles.size();
  s.f = s.fixed_points.size();
  return s;
}

CycleStructure make_cycle_structure(std::uint32_t p,
                                    std::vector<std::vector<std::size_t>> cycles,
                                    std::vector<std::size_t> fixed_points) {
  CycleStructure s;
  s.p = p;
  for (const auto& cyc : cycles)
    if (cyc.size() != p)
      throw std::invalid_argument("make_cycle_structure: cycle length != p");
  s.cycles = std::move(cycles);
  s.fixed_points = std::move(fixed_points);
  s.c = s.cycles.size();
  s.f = s.fixed_points.size();
  return s;
}

bool is_automorphism(const BinaryCode& c, const Permutation& sigma) {
  if (sigma.size() != c.length()) return false;
  return sigma.apply(c) == c;
}

namespace {

// Rows m with m·constraints = 0, mapped back through the generator.
BinaryCode message_space_kernel(const BinaryCode& c, const BitMatrix& constraints) {
  BitMatrix coeffs = kernel_basis(constraints.transpose());
  BitMatrix rows(0, c.length());
  for (std::size_t i = 0; i < coeffs.row_count(); ++i)
    rows.append_row(vec_mul(coeffs.row(i), c.generator()));
  if (rows.row_count() == 0) return BinaryCode(BitMatrix(0, c.length()));
  return BinaryCode(rows);
}

}  // namespace

BinaryCode fixed_subcode(const BinaryCode& c, const Permutation& sigma) {
  if (!is_automorphism(c, sigma))
    throw SigmaNotAutomorphism("fixed_subcode: sigma is not an automorphism of C");
  BitMatrix delta(0, c.length());
  for (std::size_t i = 0; i < c.dimension(); ++i)
    delta.append_row(c.generator().row(i) ^ sigma.apply(c.generator().row(i)));
  return message_space_kernel(c, delta);
}

BinaryCode even_subcode(const BinaryCode& c, const CycleStructure& s) {
  // One parity constraint per block Ω_i (fixed points force a zero there).
  BitMatrix parity(0, c.length());
  auto add_block = [&](const std::vector<std::size_t>& coords) {
    BitVector row(c.length());
    for (auto j : coords) row.set(j, true);
    parity.append_row(std::move(row));
  };
  for (const auto& cyc : s.cycles) add_block(cyc);
  for (auto fp : s.fixed_points) add_block({fp});

  BitMatrix products(0, parity.row_count());
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    BitVector prod(parity.row_count());
    for (std::size_t j = 0; j < parity.row_count(); ++j)
      prod.set(j, dot(c.generator().row(i), parity.row(j)));
    products.append_row(std::move(prod));
  }
  return message_space_kernel(c, products);
}

Decomposition decompose(const BinaryCode& c, const Permutation& sigma) {
  Decomposition d;
  d.structure = cycle_structure(sigma);
  d.F = fixed_subcode(c, sigma);
  d.E = even_subcode(c, d.structure);
  if (d.F.dimension() + d.E.dimension() != c.dimension())
    throw std::runtime_error("decompose: direct sum dimensions do not add up");
  return d;
}

BinaryCode project_pi(const BinaryCode& F, const CycleStructure& s) {
  BitMatrix out(0, s.c + s.f);
  for (std::size_t r = 0; r < F.dimension(); ++r) {
    const BitVector& v = F.generator().row(r);
    BitVector img(s.c + s.f);
    for (std::size_t i = 0; i < s.c; ++i) {
      const bool val = v.get(s.cycles[i][0]);
      for (auto j : s.cycles[i])
        if (v.get(j) != val)
          throw std::invalid_argument("project_pi: input is not sigma-fixed");
      img.set(i, val);
    }
    for (std::size_t i = 0; i < s.f; ++i)
      img.set(s.c + i, v.get(s.fixed_points[i]));
    out.append_row(std::move(img));
  }
  if (out.row_count() == 0) return BinaryCode(BitMatrix(0, s.c + s.f));
  return BinaryCode(out);
}

BinaryCode expand_pi_inverse(const BinaryCode& D,
                             const std::vector<std::size_t>& cycle_coords,
                             std::uint32_t p) {
  std::vector<bool> is_cycle(D.length(), false);
  for (auto c : cycle_coords) {
    if (c >= D.length())
      throw std::invalid_argument("expand_pi_inverse: coordinate out of range");
    is_cycle[c] = true;
  }
  std::size_t c = 0;
  for (bool b : is_cycle) c += b;
  if (c != cycle_coords.size())
    throw std::invalid_argument("expand_pi_inverse: duplicate cycle coordinate");
  const std::size_t f = D.length() - c;

  // Column map: p-block per cycle coordinate (increasing), then fixed coords.
  std::vector<std::size_t> offset(D.length(), 0);
  std::size_t cyc_seen = 0, fix_seen = 0;
  for (std::size_t j = 0; j < D.length(); ++j) {
    if (is_cycle[j])
      offset[j] = p * cyc_seen++;
    else
      offset[j] = p * c + fix_seen++;
  }

  BitMatrix out(0, p * c + f);
  for (std::size_t r = 0; r < D.dimension(); ++r) {
    const BitVector& v = D.generator().row(r);
    BitVector img(p * c + f);
    for (std::size_t j = 0; j < D.length(); ++j) {
      if (!v.get(j)) continue;
      if (is_cycle[j])
        for (std::uint32_t t = 0; t < p; ++t) img.set(offset[j] + t, true);
      else
        img.set(offset[j], true);
    }
    out.append_row(std::move(img));
  }
  if (out.row_count() == 0) return BinaryCode(BitMatrix(0, p * c + f));
  return BinaryCode(out);
}

std::vector<std::vector<PElement>> phi_map(const BinaryCode& E,
                                           const CycleStructure& s) {
  std::vector<std::vector<PElement>> gens;
  for (std::size_t r = 0; r < E.dimension(); ++r) {
    const BitVector& v = E.generator().row(r);
    std::vector<PElement> tuple;
    for (const auto& cyc : s.cycles) {
      std::uint64_t bits = 0;
      std::size_t w = 0;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (v.get(cyc[i])) {
          bits |= std::uint64_t{1} << i;
          ++w;
        }
      }
      if (w % 2 != 0)
        throw std::invalid_argument("phi_map: odd-weight cycle restriction, not in E");
      tuple.emplace_back(s.p, bits);
    }
    gens.push_back(std::move(tuple));
  }
  return gens;
}

SelfDualConditionsReport check_selfdual_conditions(const BinaryCode& c,
                                                   const Permutation& sigma) {
  Decomposition d = decompose(c, sigma);
  SelfDualConditionsReport rep;
  rep.field_mode = mult_order_of_2(d.structure.p) + 1 == d.structure.p;

  BinaryCode piF = project_pi(d.F, d.structure);
  rep.pi_length = piF.length();
  rep.pi_self_dual = is_self_dual(piF);

  auto gens = phi_map(d.E, d.structure);
  // GF(2)-dimension of φ(E*): rank of the concatenated coefficient rows.
  BitMatrix flat(0, d.structure.c * d.structure.p);
  for (const auto& tuple : gens) {
    BitVector row(d.structure.c * d.structure.p);
    for (std::size_t i = 0; i < tuple.size(); ++i)
      for (std::uint32_t b = 0; b < d.structure.p; ++b)
        if ((tuple[i].bits() >> b) & 1) row.set(i * d.structure.p + b, true);
    flat.append_row(std::move(row));
  }
  rep.phi_gf2_dimension = rref(flat).rank;

  bool orthogonal = true;
  for (std::size_t i = 0; i < gens.size() && orthogonal; ++i)
    for (std::size_t j = i; j < gens.size() && orthogonal; ++j)
      if (!conjugate_ip(gens[i], gens[j]).is_zero()) orthogonal = false;
  // Self-dual over P: self-orthogonal and of GF(2)-dimension c(p−1)/2.
  rep.phi_hermitian_self_dual =
      !gens.empty() && orthogonal &&
      rep.phi_gf2_dimension == d.structure.c * (d.structure.p - 1) / 2;
  return rep;
}

BalanceBlocks balance_blocks(const BinaryCode& piF, std::size_t c, std::size_t f) {
  if (piF.length() != c + f)
    throw std::invalid_argument("balance_blocks: length != c + f");
  if (!is_self_dual(piF))
    throw std::invalid_argument("balance_blocks: code is not self-dual");

  BalanceBlocks bb;
  bb.c = c;
  bb.f = f;

  auto subcode_on = [&](std::size_t lo, std::size_t hi) {
    // Codewords vanishing outside [lo, hi).
    BitMatrix outside(0, piF.length() - (hi - lo));
    for (std::size_t r = 0; r < piF.dimension(); ++r) {
      BitVector row(piF.length() - (hi - lo));
      std::size_t t = 0;
      for (std::size_t j = 0; j < piF.length(); ++j)
        if (j < lo || j >= hi) row.set(t++, piF.generator().row(r).get(j));
      outside.append_row(std::move(row));
    }
    BitMatrix coeffs = kernel_basis(outside.transpose());
    BitMatrix rows(0, piF.length());
    for (std::size_t i = 0; i < coeffs.row_count(); ++i)
      rows.append_row(vec_mul(coeffs.row(i), piF.generator()));
    return BinaryCode(rows.row_count() ? rows : BitMatrix(0, piF.length()));
  };

  BinaryCode c1 = subcode_on(0, c);
  BinaryCode c2 = subcode_on(c, c + f);
  bb.k1 = c1.dimension();
  bb.k2 = c2.dimension();

  auto left = [&](const BitVector& v) {
    BitVector out(c);
    for (std::size_t j = 0; j < c; ++j) out.set(j, v.get(j));
    return out;
  };
  auto right = [&](const BitVector& v) {
    BitVector out(f);
    for (std::size_t j = 0; j < f; ++j) out.set(j, v.get(c + j));
    return out;
  };

  bb.A = BitMatrix(0, c);
  for (std::size_t i = 0; i < bb.k1; ++i) bb.A.append_row(left(c1.generator().row(i)));
  bb.B = BitMatrix(0, f);
  for (std::size_t i = 0; i < bb.k2; ++i) bb.B.append_row(right(c2.generator().row(i)));

  // Complete C1 + C2 to the full code; the completion rows give (D | E).
  BitMatrix span(0, piF.length());
  for (std::size_t i = 0; i < bb.k1; ++i) span.append_row(c1.generator().row(i));
  for (std::size_t i = 0; i < bb.k2; ++i) span.append_row(c2.generator().row(i));
  bb.D = BitMatrix(0, c);
  bb.E = BitMatrix(0, f);
  RrefResult cur = rref(span);
  for (std::size_t r = 0; r < piF.dimension(); ++r) {
    const BitVector& g = piF.generator().row(r);
    if (in_row_space(cur, g)) continue;
    span.append_row(g);
    cur = rref(span);
    bb.D.append_row(left(g));
    bb.E.append_row(right(g));
  }

  auto stack = [](const BitMatrix& top, const BitMatrix& bot) {
    BitMatrix m(0, top.col_count());
    for (std::size_t i = 0; i < top.row_count(); ++i) m.append_row(top.row(i));
    for (std::size_t i = 0; i < bot.row_count(); ++i) m.append_row(bot.row(i));
    return m;
  };
  bb.code_A = BinaryCode(bb.A.row_count() ? bb.A : BitMatrix(0, c));
  bb.code_AD = BinaryCode(stack(bb.A, bb.D));
  bb.code_B = BinaryCode(bb.B.row_count() ? bb.B : BitMatrix(0, f));
  bb.code_BE = BinaryCode(stack(bb.B, bb.E));

  // Lemma-level invariants; violations here mean a bug, not bad input.
  const auto half = (c + f) / 2;
  if (bb.k1 * 2 + f != bb.k2 * 2 + c)
    throw std::runtime_error("balance_blocks: balance principle violated");
  if (rref(bb.D).rank != half - bb.k1 - bb.k2 ||
      rref(bb.E).rank != half - bb.k1 - bb.k2)
    throw std::runtime_error("balance_blocks: rank identity violated");
  if (!(bb.code_AD == dual(bb.code_A)) || !(bb.code_BE == dual(bb.code_B)))
    throw std::runtime_error("balance_blocks: duality identity violated");
  return bb;
}

IdentityFormResult has_identity_form(const BinaryCode& piF, std::size_t c,
                                     std::size_t f, std::size_t d) {
  if (c != f) throw std::invalid_argument("has_identity_form: requires c = f");
  if (!(f < d)) throw std::invalid_argument("has_identity_form: requires c = f < d");
  BalanceBlocks bb = balance_blocks(piF, c, f);
  IdentityFormResult res;
  if (bb.k2 != 0) {
    res.reason = "B block nonzero (k2 = " + std::to_string(bb.k2) + ")";
    return res;
  }
  if (bb.k1 != 0) {
    res.reason = "A block nonzero (k1 = " + std::to_string(bb.k1) + ")";
    return res;
  }
  RrefResult rr = rref(piF.generator());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] != i) {
      res.reason = "D block is singular";
      return res;
    }
  }
  res.matrix = rr.matrix;
  return res;
}

}  // namespace sda
