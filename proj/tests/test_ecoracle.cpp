#include <random>

#include "doctest.h"

#include "ecsynth/ecoracle.hpp"
#include "ecsynth/errors.hpp"

using namespace ecsynth;

namespace {

Curve e11(const Field& f) { return Curve(f.one(), f.one()); }

}  // namespace

TEST_CASE("E_{1,1}(F8) points") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c = e11(f);
  const auto pts = all_points(c);
  // O plus 13 affine points (brute force over F8 x F8).
  CHECK(pts.size() == 14);
  CHECK(pts.front().is_identity());
  CHECK(on_curve_affine(c, AffinePoint::unchecked(f.from_uint(2), f.from_uint(5))));
  CHECK_FALSE(on_curve_affine(c, AffinePoint::unchecked(f.from_uint(3), f.from_uint(5))));
}

TEST_CASE("group axioms on E_{1,1}(F8)") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c = e11(f);
  const auto pts = all_points(c);
  const AffinePoint o = AffinePoint::identity(f);
  for (const AffinePoint& p : pts) {
    CHECK(affine_add(c, p, o) == p);
    CHECK(affine_add(c, p, negate(p)).is_identity());
    for (const AffinePoint& q : pts) {
      const AffinePoint s = affine_add(c, p, q);
      REQUIRE(on_curve_affine(c, s));
      CHECK(s == affine_add(c, q, p));
      for (const AffinePoint& r : pts) CHECK(affine_add(c, affine_add(c, p, q), r) == affine_add(c, p, affine_add(c, q, r)));
    }
  }
}

TEST_CASE("scalar multiplication by the group order") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c = e11(f);
  const auto pts = all_points(c);
  for (const AffinePoint& p : pts) {
    CHECK(scalar_mul(c, pts.size(), p).is_identity());
    CHECK(scalar_mul(c, 1, p) == p);
    CHECK(scalar_mul(c, 2, p) == affine_add(c, p, p));
  }
}

TEST_CASE("mixed LD addition agrees with the affine group law") {
  std::mt19937_64 rng(41);
  for (const char* text : {"1+x+x^3", "1+x^2+x^3+x^4+x^8", "1+x^3+x^10", "1+x^74+x^233"}) {
    const Field f = Field::parse(text);
    for (int curve_no = 0; curve_no < 3; ++curve_no) {
      const Curve c(f.random(rng), f.random_nonzero(rng));
      for (int trial = 0; trial < 30; ++trial) {
        const AffinePoint p1 = random_point(c, rng);
        const AffinePoint p2 = random_point(c, rng);
        REQUIRE(on_curve_affine(c, p1));
        if (p1 == p2 || p1 == negate(p2)) continue;
        const LDPoint l1 = ld_scale(affine_to_ld(p1), f.random_nonzero(rng));
        CHECK(on_curve_ld(c, l1));
        CHECK(ld_equal(l1, affine_to_ld(p1)));
        const LDPoint sum = aldaoud_madd(c, l1, p2);
        CHECK(on_curve_ld(c, sum));
        CHECK(ld_to_affine(sum) == affine_add(c, p1, p2));
      }
    }
  }
}

TEST_CASE("mixed addition rejects non-generic inputs") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c = e11(f);
  const AffinePoint p = AffinePoint::checked(c, f.from_uint(2), f.from_uint(5));
  CHECK_THROWS_AS(aldaoud_madd(c, affine_to_ld(p), p), CurveError);
  CHECK_THROWS_AS(aldaoud_madd(c, affine_to_ld(negate(p)), p), CurveError);
  CHECK_THROWS_AS(aldaoud_madd(c, affine_to_ld(AffinePoint::identity(f)), p), CurveError);
  CHECK_THROWS_AS(aldaoud_madd(c, affine_to_ld(p), AffinePoint::identity(f)), CurveError);
  CHECK_NOTHROW(aldaoud_madd(c, affine_to_ld(p), p, Checked::kNo));
}

TEST_CASE("curve and point validation") {
  const Field f = Field::parse("1+x+x^3");
  CHECK_THROWS_AS(Curve(f.one(), f.zero()), CurveError);
  CHECK_THROWS_AS(Curve(f.one(), Field::parse("1+x^2+x^3").one()), ModulusMismatch);
  CHECK_THROWS_AS(AffinePoint::checked(e11(f), f.from_uint(3), f.from_uint(5)), CurveError);
  CHECK(on_curve_ld(e11(f), affine_to_ld(AffinePoint::identity(f))));
}

TEST_CASE("random points on even-degree fields and the x = 0 point") {
  const Field f = Field::parse("1+x^2+x^3+x^4+x^8");
  std::mt19937_64 rng(42);
  const Curve c(f.random(rng), f.random_nonzero(rng));
  bool saw_zero = false;
  for (int trial = 0; trial < 4000; ++trial) {
    const AffinePoint p = random_point(c, rng);
    REQUIRE(on_curve_affine(c, p));
    saw_zero |= p.x().is_zero();
  }
  CHECK(saw_zero);
}
