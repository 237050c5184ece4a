#include "sda/modfield.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace sda {

namespace {

void check_prime(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  for (std::uint32_t i = 2; i * i <= p; ++i)
    if (p % i == 0) throw std::invalid_argument("p must be prime");
}

}  // namespace

PElement::PElement(std::uint32_t p, std::uint64_t coeff_bits)
    : p_(p), bits_(coeff_bits) {
  if (p < 3 || p > 63) throw std::invalid_argument("PElement: need 3 <= p <= 63");
  if (bits_ >> p) throw std::invalid_argument("PElement: coefficients beyond x^{p-1}");
  if (std::popcount(bits_) % 2 != 0)
    throw std::invalid_argument("PElement: odd coefficient weight, not in P");
}

PElement PElement::from_bitvector(std::uint32_t p, const BitVector& v) {
  if (v.size() != p) throw std::invalid_argument("PElement: length mismatch");
  std::uint64_t bits = v.words().empty() ? 0 : v.words()[0];
  return PElement(p, bits);
}

PElement PElement::identity(std::uint32_t p) {
  return PElement(p, ((std::uint64_t{1} << p) - 1) & ~std::uint64_t{1});
}

PElement PElement::x_times_identity(std::uint32_t p, std::uint32_t i) {
  // x^i e(x) is the cyclic shift of e(x): all ones except coefficient i.
  const std::uint64_t all = (std::uint64_t{1} << p) - 1;
  return PElement(p, all ^ (std::uint64_t{1} << (i % p)));
}

std::size_t PElement::weight() const { return std::popcount(bits_); }

BitVector PElement::to_bitvector() const {
  BitVector v(p_);
  for (std::uint32_t i = 0; i < p_; ++i)
    if ((bits_ >> i) & 1) v.set(i, true);
  return v;
}

PElement operator+(PElement a, const PElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("PElement: p mismatch");
  a.bits_ ^= b.bits_;
  return a;
}

PElement operator*(const PElement& a, const PElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("PElement: p mismatch");
  const std::uint32_t p = a.p_;
  const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
  std::uint64_t r = 0, bb = b.bits_;
  for (std::uint64_t ab = a.bits_; ab; ab &= ab - 1) {
    const unsigned i = std::countr_zero(ab);
    r ^= ((bb << i) | (bb >> (p - i))) & mask;  // cyclic shift of b by i
  }
  PElement out;
  out.p_ = p;
  out.bits_ = r & mask;
  return out;
}

PElement PElement::substitute(std::uint64_t t) const {
  t %= p_;
  if (t == 0) throw std::invalid_argument("substitute: t must be coprime to p");
  PElement out;
  out.p_ = p_;
  for (std::uint32_t i = 0; i < p_; ++i)
    if ((bits_ >> i) & 1) out.bits_ ^= std::uint64_t{1} << ((i * t) % p_);
  return out;
}

PElement PElement::shifted(std::uint32_t t) const {
  t %= p_;
  const std::uint64_t mask = (std::uint64_t{1} << p_) - 1;
  PElement out;
  out.p_ = p_;
  out.bits_ = ((bits_ << t) | (bits_ >> (p_ - t))) & mask;
  if (t == 0) out.bits_ = bits_;
  return out;
}

PElement pow(const PElement& a, BigInt exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  PElement result = PElement::identity(a.p());
  PElement base = a;
  while (exponent > 0) {
    if ((exponent & 1) != 0) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

std::uint32_t mult_order_of_2(std::uint32_t p) {
  check_prime(p);
  if (p == 2) throw std::invalid_argument("mult_order_of_2: p must be odd");
  std::uint64_t v = 2 % p;
  std::uint32_t s = 1;
  while (v != 1) {
    v = (v * 2) % p;
    ++s;
  }
  return s;
}

PField PField::make(std::uint32_t p) {
  check_prime(p);
  PField f;
  f.p = p;
  f.s = mult_order_of_2(p);
  f.group_order = (BigInt(1) << (p - 1)) - 1;

  // 2^58 − 1 = (2^29 − 1)(2^29 + 1) = (233·1103·2089)(3·59·3033169).
  static const std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>>
      table = {
          {3, {3}},
          {5, {3, 5}},
          {7, {3, 7}},
          {11, {3, 11, 31}},
          {23, {3, 23, 89, 683}},
          {29, {3, 5, 29, 43, 113, 127}},
          {59, {3, 59, 233, 1103, 2089, 3033169}},
      };
  for (const auto& [tp, fac] : table) {
    if (tp == p) {
      for (auto q : fac) f.factors.emplace_back(q);
      return f;
    }
  }

  // Fallback: trial division with a bound.
  BigInt rest = f.group_order;
  for (BigInt d = 3; d * d <= rest && d < 100'000'000; d += 2) {
    if (rest % d == 0) {
      f.factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) {
    if (rest >= BigInt(100'000'000) * 100'000'000)
      throw std::runtime_error("PField: factorization of 2^{p-1}-1 out of reach for p=" +
                               std::to_string(p));
    f.factors.push_back(rest);
  }
  return f;
}

BigInt element_order(const PField& field, const PElement& a) {
  if (!field.field_mode())
    throw std::invalid_argument("element_order: requires s(p) = p - 1");
  if (a.is_zero()) throw std::invalid_argument("element_order: zero element");
  BigInt order = field.group_order;
  for (const auto& q : field.factors)
    while (order % q == 0 && pow(a, order / q) == PElement::identity(field.p))
      order /= q;
  return order;
}

PElement find_primitive(const PField& field, std::uint64_t seed) {
  if (!field.field_mode())
    throw std::invalid_argument("find_primitive: requires s(p) = p - 1");
  if (field.factors.empty())
    throw std::invalid_argument("find_primitive: factorization unavailable");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << field.p) - 1;
  for (int tries = 0; tries < 100000; ++tries) {
    std::uint64_t bits = rng() & mask;
    if (std::popcount(bits) % 2 != 0) bits ^= 1;  // force even weight
    if (bits == 0) continue;
    PElement a(field.p, bits);
    bool primitive = true;
    for (const auto& q : field.factors) {
      if (pow(a, field.group_order / q) == PElement::identity(field.p)) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  throw std::runtime_error("find_primitive: no primitive element found");
}

PElement hermitian_ip(const std::vector<PElement>& u,
                      const std::vector<PElement>& v, const BigInt& q) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("hermitian_ip: tuple length mismatch");
  PElement acc = PElement::zero(u[0].p());
  for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * pow(v[i], q);
  return acc;
}

PElement conjugate_ip(const std::vector<PElement>& u,
                      const std::vector<PElement>& v) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("conjugate_ip: tuple length mismatch");
  PElement acc = PElement::zero(u[0].p());
  for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i].conjugate();
  return acc;
}

}  // namespace sda
