#include <random>

#include "doctest.h"

#include "ecsynth/errors.hpp"
#include "ecsynth/linmaps.hpp"

using namespace ecsynth;

namespace {

BinMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    BinMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
    if (is_invertible(m)) return m;
  }
}

BitVec random_bits(std::size_t n, std::mt19937_64& rng) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

}  // namespace

TEST_CASE("F8 multiplication by 1+x+x^2") {
  const Field f = Field::parse("1+x+x^3");
  const BinMatrix m = matrix_of_const_mul(f.parse_element("1+x+x^2"));
  // The printed matrix is in the row-vector convention, i.e. our transpose.
  CHECK(m.transpose() == BinMatrix::from_rows({{1, 1, 1}, {1, 0, 1}, {1, 0, 0}}));
  CHECK(weight(m) == 6);
  CHECK(max_degree(m) == 3);
}

TEST_CASE("F128 squaring matrix") {
  const BinMatrix m = matrix_of_squaring(IrreduciblePoly::parse("1+x+x^7"));
  const BinMatrix printed = BinMatrix::from_rows({
      {1, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 1},
      {0, 1, 1, 0, 0, 0, 0},
      {0, 0, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 1},
  });
  CHECK(m.transpose() == printed);
  CHECK(weight(m) == 10);
  CHECK(max_degree(m) == 2);
}

TEST_CASE("matrices act like the field maps") {
  std::mt19937_64 rng(21);
  for (const char* text : {"1+x+x^3", "1+x^2+x^3+x^4+x^8", "1+x^74+x^233", "1+x^3+x^6+x^7+x^163"}) {
    const Field f = Field::parse(text);
    const FieldElem c = f.random_nonzero(rng);
    const BinMatrix mc = matrix_of_const_mul(c);
    const BinMatrix sq = matrix_of_squaring(f.modulus());
    const BinMatrix rt = matrix_of_sqrt(f.modulus());
    const BinMatrix fused = matrix_of_sq_then_const(c);
    CHECK(multiply(sq, rt) == BinMatrix::identity(f.n()));
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElem a = f.random(rng);
      CHECK(apply(mc, a.bits()) == (c * a).bits());
      CHECK(apply(sq, a.bits()) == square(a).bits());
      CHECK(apply(rt, a.bits()) == sqrt(a).bits());
      CHECK(apply(fused, a.bits()) == (c * square(a)).bits());
    }
  }
  CHECK_THROWS_AS(matrix_of_const_mul(Field::parse("1+x+x^3").zero()), SingularMap);
}

TEST_CASE("inverse and multiply on random matrices") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const BinMatrix m = random_invertible(n, rng);
    const BinMatrix inv = invert(m);
    CHECK(multiply(m, inv) == BinMatrix::identity(n));
    CHECK(multiply(inv, m) == BinMatrix::identity(n));
    const BitVec v = random_bits(n, rng);
    CHECK(apply(inv, apply(m, v)) == v);
    CHECK(m.transpose().transpose() == m);
  }
  BinMatrix singular = BinMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(is_invertible(singular));
  CHECK_THROWS_AS(invert(singular), SingularMap);
  CHECK_THROWS(BinMatrix(0));
}

TEST_CASE("weight of an invertible matrix is at most n^2 - n + 1") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    BinMatrix m = random_invertible(n, rng);
    // Push towards the dense end: flip zeros to ones while invertibility survives.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (m.get(r, c)) continue;
        m.set(r, c, true);
        if (!is_invertible(m)) m.set(r, c, false);
      }
    CHECK(weight(m) <= n * n - n + 1);
    CHECK(max_degree(m) <= n);
  }
}

TEST_CASE("trinomial squaring and square-root ceilings") {
  std::mt19937_64 rng(2);
  int tested = 0;
  while (tested < 40) {
    const std::size_t n = 3 + rng() % 298;
    const std::size_t m = 1 + rng() % (n / 2);
    const Gf2Poly q = Gf2Poly::parse("1+x^" + std::to_string(m) + "+x^" + std::to_string(n));
    if (!is_irreducible(q)) continue;
    ++tested;
    const IrreduciblePoly p(q);
    const BinMatrix sq = matrix_of_squaring(p);
    const BinMatrix rt = matrix_of_sqrt(p);
    INFO(p.to_string());
    CHECK(weight(sq) <= 3 * n);
    CHECK(max_degree(sq) <= m + 1);
    // The square-root ceiling needs an odd middle exponent; see the even-m cases below.
    if (m % 2 == 1) CHECK(weight(rt) <= 5 * n);
  }
}

TEST_CASE("even middle exponents can exceed the square-root ceiling") {
  CHECK(weight(matrix_of_sqrt(IrreduciblePoly::parse("1+x^2+x^29"))) == 148);
  CHECK(weight(matrix_of_sqrt(IrreduciblePoly::parse("1+x^8+x^119"))) == 643);
  // Both NIST trinomials stay far below it.
  CHECK(weight(matrix_of_sqrt(IrreduciblePoly::parse("1+x^74+x^233"))) == 591);
  CHECK(weight(matrix_of_sqrt(IrreduciblePoly::parse("1+x^87+x^409"))) == 613);
}
