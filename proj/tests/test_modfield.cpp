#include <doctest.h>

#include <random>

#include "sda/modfield.hpp"

using namespace sda;

namespace {

PElement random_element(std::uint32_t p, std::mt19937_64& rng) {
  while (true) {
    std::uint64_t bits = rng() & ((std::uint64_t(1) << p) - 1);
    if (std::popcount(bits) % 2 == 0) return PElement(p, bits);
  }
}

// Schoolbook convolution in GF(2)[x]/(x^p - 1) as an independent oracle.
PElement naive_mul(const PElement& a, const PElement& b) {
  const std::uint32_t p = a.p();
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j)
      if (((a.bits() >> i) & 1) && ((b.bits() >> j) & 1))
        out ^= std::uint64_t(1) << ((i + j) % p);
  return PElement(p, out);
}

}  // namespace

TEST_CASE("even-weight invariant is enforced") {
  CHECK_THROWS(PElement(7, 0b1));
  CHECK_NOTHROW(PElement(7, 0b11));
  CHECK(PElement::identity(7).weight() == 6);
}

TEST_CASE("identity acts as multiplicative unit") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 23u}) {
    auto e = PElement::identity(p);
    CHECK(e * e == e);
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(p, rng);
      CHECK(a * e == a);
      CHECK(e * a == a);
      CHECK(a + a == PElement::zero(p));
    }
  }
}

TEST_CASE("x_times_identity shifts the identity") {
  for (std::uint32_t p : {5u, 7u, 23u}) {
    auto e = PElement::identity(p);
    for (std::uint32_t i = 0; i < p; ++i) {
      CHECK(PElement::x_times_identity(p, i) == e.shifted(i));
    }
    CHECK(PElement::x_times_identity(p, 0) == e);
  }
}

TEST_CASE("product matches schoolbook convolution") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 23u, 29u, 59u}) {
    for (int t = 0; t < 25; ++t) {
      auto a = random_element(p, rng);
      auto b = random_element(p, rng);
      CHECK(a * b == naive_mul(a, b));
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("substitute is a ring automorphism") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {5u, 7u, 11u, 23u}) {
    for (std::uint64_t t = 1; t < p; ++t) {
      auto a = random_element(p, rng);
      auto b = random_element(p, rng);
      CHECK((a + b).substitute(t) == a.substitute(t) + b.substitute(t));
      CHECK((a * b).substitute(t) == a.substitute(t) * b.substitute(t));
      CHECK(PElement::identity(p).substitute(t) == PElement::identity(p));
    }
    auto a = random_element(p, rng);
    CHECK(a.conjugate().conjugate() == a);
  }
}

TEST_CASE("pow basics") {
  auto e = PElement::identity(11);
  auto a = PElement::x_times_identity(11, 1);
  CHECK(pow(a, 0) == e);
  CHECK(pow(a, 1) == a);
  CHECK(pow(a, 11) == a * pow(a, 10));
  CHECK(pow(a, 11) == e.shifted(11 % 11));  // x^11 = 1 in the quotient
  std::mt19937_64 rng(7);
  auto b = random_element(23, rng);
  CHECK(pow(b, 5) == b * b * b * b * b);
}

TEST_CASE("mult_order_of_2 values") {
  CHECK(mult_order_of_2(3) == 2);
  CHECK(mult_order_of_2(5) == 4);
  CHECK(mult_order_of_2(7) == 3);
  CHECK(mult_order_of_2(11) == 10);
  CHECK(mult_order_of_2(17) == 8);
  CHECK(mult_order_of_2(19) == 18);
  CHECK(mult_order_of_2(23) == 11);
  CHECK(mult_order_of_2(29) == 28);
  CHECK(mult_order_of_2(31) == 5);
  CHECK(mult_order_of_2(59) == 58);
  CHECK_THROWS(mult_order_of_2(15));
}

TEST_CASE("PField structure for the tabulated primes") {
  auto f59 = PField::make(59);
  CHECK(f59.s == 58);
  CHECK(f59.field_mode());
  CHECK(f59.group_order == (BigInt(1) << 58) - 1);
  std::vector<BigInt> want{3, 59, 233, 1103, 2089, 3033169};
  CHECK(f59.factors == want);
  BigInt prod = 1;
  // 2^58 - 1 is squarefree; the factors multiply back to the group order.
  for (const auto& q : f59.factors) prod *= q;
  CHECK(prod == f59.group_order);

  auto f11 = PField::make(11);
  CHECK(f11.factors == std::vector<BigInt>{3, 11, 31});
  CHECK(f11.field_mode());

  auto f23 = PField::make(23);
  CHECK(f23.s == 11);
  CHECK_FALSE(f23.field_mode());
  CHECK(f23.factors == std::vector<BigInt>{3, 23, 89, 683});

  auto f29 = PField::make(29);
  CHECK(f29.factors == std::vector<BigInt>{3, 5, 29, 43, 113, 127});

  auto f5 = PField::make(5);
  CHECK(f5.field_mode());
  CHECK(f5.group_order == 15);
  CHECK(f5.factors == std::vector<BigInt>{3, 5});
}

TEST_CASE("element orders divide the group order") {
  std::mt19937_64 rng(101);
  for (std::uint32_t p : {3u, 5u, 11u}) {
    auto f = PField::make(p);
    for (int t = 0; t < 8; ++t) {
      auto a = random_element(p, rng);
      if (a.is_zero()) continue;
      auto ord = element_order(f, a);
      CHECK(f.group_order % ord == 0);
      CHECK(pow(a, ord) == PElement::identity(p));
      for (const auto& q : f.factors)
        if (ord % q == 0) CHECK(pow(a, ord / q) != PElement::identity(p));
    }
  }
}

TEST_CASE("find_primitive returns a generator") {
  for (std::uint32_t p : {3u, 5u, 11u}) {
    auto f = PField::make(p);
    auto g = find_primitive(f, 42);
    CHECK(element_order(f, g) == f.group_order);
  }
  // GF(2^58): too big to walk the whole group, so spot-check via the factors.
  auto f = PField::make(59);
  auto g = find_primitive(f, 42);
  CHECK(pow(g, f.group_order) == PElement::identity(59));
  for (const auto& q : f.factors)
    CHECK(pow(g, f.group_order / q) != PElement::identity(59));
}

TEST_CASE("inner product forms") {
  std::mt19937_64 rng(55);
  // s(p) = p - 1: hermitian with q = 2^{(p-1)/2} agrees with conjugation.
  for (std::uint32_t p : {5u, 11u}) {
    BigInt q = BigInt(1) << ((p - 1) / 2);
    for (int t = 0; t < 10; ++t) {
      std::vector<PElement> u{random_element(p, rng), random_element(p, rng)};
      std::vector<PElement> v{random_element(p, rng), random_element(p, rng)};
      CHECK(hermitian_ip(u, v, q) == conjugate_ip(u, v));
    }
  }
  // s(23) = 11 is odd: 2^11 ≡ 1 mod 23, so the power map degenerates to the
  // identity while conjugation stays a genuine involution.
  auto a = random_element(23, rng);
  CHECK(pow(a, BigInt(1) << 11) == a);
  bool found_diff = false;
  for (int t = 0; t < 20 && !found_diff; ++t) {
    std::vector<PElement> u{random_element(23, rng)};
    std::vector<PElement> v{random_element(23, rng)};
    if (hermitian_ip(u, v, BigInt(1) << 11) != conjugate_ip(u, v))
      found_diff = true;
  }
  CHECK(found_diff);

  // Bilinearity of the conjugation form in the first slot.
  std::vector<PElement> u1{random_element(7, rng)};
  std::vector<PElement> u2{random_element(7, rng)};
  std::vector<PElement> v{random_element(7, rng)};
  CHECK(conjugate_ip({u1[0] + u2[0]}, v) ==
        conjugate_ip(u1, v) + conjugate_ip(u2, v));
}
