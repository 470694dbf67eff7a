#include "ecsynth/ecoracle.hpp"

#include <string>

#include "ecsynth/errors.hpp"

namespace ecsynth {

Curve::Curve(FieldElem a2_, FieldElem a6_) : a2(std::move(a2_)), a6(std::move(a6_)) {
  if (!(a2.modulus() == a6.modulus())) throw ModulusMismatch("curve coefficients over different fields");
  if (a6.is_zero()) throw CurveError("a6 must be nonzero for an ordinary binary curve");
}

AffinePoint AffinePoint::identity(const Field& f) { return AffinePoint(true, f.zero(), f.zero()); }

AffinePoint AffinePoint::checked(const Curve& curve, FieldElem x, FieldElem y) {
  AffinePoint p(false, std::move(x), std::move(y));
  if (!on_curve_affine(curve, p)) {
    throw CurveError("point (" + p.x().to_hex() + ", " + p.y().to_hex() + ") is not on the curve");
  }
  return p;
}

AffinePoint AffinePoint::unchecked(FieldElem x, FieldElem y) { return AffinePoint(false, std::move(x), std::move(y)); }

bool operator==(const AffinePoint& a, const AffinePoint& b) {
  if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

bool on_curve_affine(const Curve& curve, const AffinePoint& p) {
  if (p.is_identity()) return true;
  const FieldElem& x = p.x();
  const FieldElem& y = p.y();
  const FieldElem x2 = square(x);
  return square(y) + x * y == x2 * x + curve.a2 * x2 + curve.a6;
}

bool on_curve_ld(const Curve& curve, const LDPoint& p) {
  if (p.Z.is_zero()) return p.Y.is_zero() && !p.X.is_zero();
  const FieldElem z2 = square(p.Z);
  const FieldElem x2 = square(p.X);
  const FieldElem lhs = square(p.Y) + p.X * p.Y * p.Z;
  const FieldElem rhs = x2 * p.X * p.Z + curve.a2 * x2 * z2 + curve.a6 * square(z2);
  return lhs == rhs;
}

AffinePoint negate(const AffinePoint& p) {
  if (p.is_identity()) return p;
  return AffinePoint::unchecked(p.x(), p.x() + p.y());
}

AffinePoint affine_add(const Curve& curve, const AffinePoint& p1, const AffinePoint& p2, Checked checked) {
  if (checked == Checked::kYes && (!on_curve_affine(curve, p1) || !on_curve_affine(curve, p2))) {
    throw CurveError("affine_add: input point not on the curve");
  }
  if (p1.is_identity()) return p2;
  if (p2.is_identity()) return p1;
  const FieldElem& x1 = p1.x();
  const FieldElem& y1 = p1.y();
  const FieldElem& x2 = p2.x();
  const FieldElem& y2 = p2.y();
  if (x1 == x2) {
    if (y1 + y2 == x2) return AffinePoint::identity(curve.field());
    // Doubling.
    const FieldElem m = x2 + y2 / x2;
    const FieldElem x3 = square(m) + m + curve.a2;
    const FieldElem y3 = square(x2) + (m + curve.field().one()) * x3;
    return AffinePoint::unchecked(x3, y3);
  }
  const FieldElem m = (y1 + y2) / (x1 + x2);
  const FieldElem x3 = square(m) + m + x1 + x2 + curve.a2;
  const FieldElem y3 = (x2 + x3) * m + x3 + y2;
  return AffinePoint::unchecked(x3, y3);
}

AffinePoint ld_to_affine(const LDPoint& p) {
  if (p.Z.is_zero()) return AffinePoint::identity(p.Z.field());
  const FieldElem zi = inverse(p.Z);
  return AffinePoint::unchecked(p.X * zi, p.Y * square(zi));
}

LDPoint affine_to_ld(const AffinePoint& p) {
  const Field f = p.x().field();
  if (p.is_identity()) return LDPoint{f.one(), f.zero(), f.zero()};
  return LDPoint{p.x(), p.y(), f.one()};
}

LDPoint ld_scale(const LDPoint& p, const FieldElem& lambda) {
  return LDPoint{lambda * p.X, square(lambda) * p.Y, lambda * p.Z};
}

bool ld_equal(const LDPoint& p, const LDPoint& q) {
  if (p.Z.is_zero() || q.Z.is_zero()) return p.Z.is_zero() && q.Z.is_zero();
  return p.X * q.Z == q.X * p.Z && p.Y * square(q.Z) == q.Y * square(p.Z);
}

LDPoint aldaoud_madd(const Curve& curve, const LDPoint& p1, const AffinePoint& p2, Checked checked) {
  if (checked == Checked::kYes) {
    if (p2.is_identity()) throw CurveError("aldaoud_madd: P2 is the identity");
    if (p1.is_identity()) throw CurveError("aldaoud_madd: P1 is the identity");
    if (!on_curve_ld(curve, p1) || !on_curve_affine(curve, p2)) throw CurveError("aldaoud_madd: input point not on the curve");
    const AffinePoint a1 = ld_to_affine(p1);
    if (a1 == p2 || a1 == negate(p2)) throw CurveError("aldaoud_madd: P1 = +-P2 is outside the generic branch");
  }
  const FieldElem& x2 = p2.x();
  const FieldElem& y2 = p2.y();
  const FieldElem A = p1.Y + y2 * square(p1.Z);
  const FieldElem B = p1.X + x2 * p1.Z;
  const FieldElem C = B * p1.Z;
  const FieldElem Z3 = square(C);
  const FieldElem D = x2 * Z3;
  const FieldElem X3 = square(A) + C * (A + square(B) + curve.a2 * C);
  const FieldElem Y3 = (D + X3) * (A * C + Z3) + (y2 + x2) * square(Z3);
  return LDPoint{X3, Y3, Z3};
}

AffinePoint random_point(const Curve& curve, std::mt19937_64& rng) {
  const Field f = curve.field();
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const FieldElem x = f.random(rng);
    if (x.is_zero()) {
      // The single point with x = 0; accept half the time so every point is equally likely.
      if (coin(rng)) return AffinePoint::checked(curve, x, sqrt(curve.a6));
      continue;
    }
    // y = x z with z^2 + z = x + a2 + a6 / x^2.
    const FieldElem c = x + curve.a2 + curve.a6 / square(x);
    const auto z = solve_quadratic(c);
    if (!z) continue;
    const FieldElem root = coin(rng) ? *z : *z + f.one();
    return AffinePoint::checked(curve, x, x * root);
  }
}

AffinePoint scalar_mul(const Curve& curve, std::uint64_t k, const AffinePoint& p) {
  AffinePoint result = AffinePoint::identity(curve.field());
  AffinePoint addend = p;
  while (k != 0) {
    if (k & 1u) result = affine_add(curve, result, addend, Checked::kNo);
    addend = affine_add(curve, addend, addend, Checked::kNo);
    k >>= 1;
  }
  return result;
}

std::vector<AffinePoint> all_points(const Curve& curve) {
  const Field f = curve.field();
  if (f.n() > 16) throw UnsupportedConfiguration("point enumeration limited to n <= 16");
  std::vector<AffinePoint> out{AffinePoint::identity(f)};
  const std::uint64_t size = std::uint64_t{1} << f.n();
  for (std::uint64_t xv = 0; xv < size; ++xv) {
    const FieldElem x = f.from_uint(xv);
    for (std::uint64_t yv = 0; yv < size; ++yv) {
      AffinePoint p = AffinePoint::unchecked(x, f.from_uint(yv));
      if (on_curve_affine(curve, p)) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace ecsynth
